#include "equitel/ueb.hpp"

#include <cmath>
#include <sstream>

namespace equitel {

UEB verify_ueb(const std::vector<ComplexMatrix>& matrices) {
    if (matrices.empty()) throw VerificationError("empty basis");
    std::size_t n = matrices.front().rows();
    if (matrices.size() != n * n)
        throw VerificationError("a basis for dimension " + std::to_string(n) + " needs " +
                                std::to_string(n * n) + " elements");
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        if (matrices[i].rows() != n || matrices[i].cols() != n)
            throw VerificationError("element " + std::to_string(i) + " has wrong shape");
        if (!matrices[i].is_unitary(kTol))
            throw VerificationError("element " + std::to_string(i) + " is not unitary");
    }
    for (std::size_t i = 0; i < matrices.size(); ++i)
        for (std::size_t j = i; j < matrices.size(); ++j) {
            cxd ip = trace_inner(matrices[i], matrices[j]);
            cxd want = (i == j) ? cxd(double(n)) : cxd(0.0);
            if (std::abs(ip - want) > kTol * double(n)) {
                std::ostringstream msg;
                msg << "trace orthogonality failure between elements " << i << " and " << j
                    << " (inner product " << ip << ")";
                throw VerificationError(msg.str());
            }
        }
    return UEB{n, matrices};
}

EquivariantUEB verify_equivariant(const UEB& ueb, const Representation& rho) {
    const FiniteGroup& g = *rho.group;
    std::size_t n = ueb.dim;
    std::size_t count = ueb.elements.size();
    if (rho.dim() != n) throw VerificationError("representation dimension mismatch");

    EquivariantUEB out;
    out.ueb = ueb;
    out.rep = rho;
    out.tau.group = &g;
    out.tau.side = GSet::Side::Right;
    for (std::size_t i = 0; i < count; ++i) out.tau.points.push_back(std::to_string(i));
    out.tau.act.assign(g.order(), std::vector<int>(count, -1));
    out.xi.assign(count, std::vector<cxd>(g.order()));

    for (std::size_t x = 0; x < g.order(); ++x) {
        ComplexMatrix u = rho.image(int(x));
        ComplexMatrix udag = u.dagger();
        for (std::size_t i = 0; i < count; ++i) {
            ComplexMatrix conj = udag * ueb.elements[i] * u;
            int target = -1;
            cxd overlap;
            for (std::size_t j = 0; j < count; ++j) {
                cxd ip = trace_inner(ueb.elements[j], conj);
                if (std::abs(std::abs(ip) - double(n)) < kTauTol * double(n)) {
                    if (target >= 0)
                        throw VerificationError("ambiguous conjugation target for element " +
                                                std::to_string(i));
                    target = int(j);
                    overlap = ip;
                }
            }
            if (target < 0)
                throw VerificationError("conjugation of element " + std::to_string(i) +
                                        " by '" + g.element_name(int(x)) +
                                        "' leaves the basis");
            cxd xi = cxd(double(n)) / overlap;
            xi /= std::abs(xi);
            ComplexMatrix check = conj * xi;
            if (!check.approx_equal(ueb.elements[target], kTol * 10))
                throw VerificationError("conjugate of element " + std::to_string(i) +
                                        " is not a phase multiple of element " +
                                        std::to_string(target));
            out.tau.act[x][i] = target;
            out.xi[i][x] = xi;
        }
    }
    out.tau.validate();

    // Phase cocycle implied by composing the defining equation.
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            int ab = g.mul(int(a), int(b));
            for (std::size_t i = 0; i < count; ++i) {
                cxd lhs = out.xi[i][ab];
                cxd rhs = out.xi[i][a] * out.xi[out.tau.act[a][i]][b];
                if (std::abs(lhs - rhs) > 1e-7)
                    throw VerificationError("phase system fails the cocycle relation");
            }
        }
    return out;
}

EquivariantUEB lift_oeb(const EquivariantOEB& oeb, const Representation& rho) {
    if (rho.group != oeb.group.group.get())
        throw VerificationError("lift requires a representation of the basis's own group");
    for (std::size_t x = 0; x < rho.group->order(); ++x)
        if (!q_map(rho.image(int(x))).approx_equal(oeb.group.rep.image(int(x)), kTol))
            throw VerificationError(
                "Bloch image of the representation does not match the rotation basis");
    std::vector<ComplexMatrix> lifted;
    for (const auto& r : oeb.elements) lifted.push_back(su2_lift(r));
    EquivariantUEB out = verify_equivariant(verify_ueb(lifted), rho);
    if (out.tau.act != oeb.tau.act)
        throw VerificationError("lifted index action differs from the rotation-level action");
    return out;
}

bool speakable_only_possible(const EquivariantUEB& eueb) {
    for (const auto& t : orbit_type(eueb.tau))
        if (t != 1) return false;
    return true;
}

std::optional<ComplexMatrix> circulant_unitary(std::size_t n, double abs_a, int sign) {
    if (n < 3) throw SchemaError("circulant construction needs dimension >= 3");
    double lo = double(n - 2) / double(n);
    if (abs_a < lo - 1e-12 || abs_a > 1.0 + 1e-12) return std::nullopt;
    abs_a = std::clamp(abs_a, lo, 1.0);
    double abs_b = std::sqrt((1.0 - abs_a * abs_a) / double(n - 1));
    cxd a(abs_a);
    cxd b(0.0);
    if (abs_b > kTightTol) {
        double re = (2.0 - double(n)) / 2.0 * abs_b / abs_a;
        re = std::clamp(re, -1.0, 1.0);
        double im = std::sqrt(std::max(0.0, 1.0 - re * re)) * (sign >= 0 ? 1.0 : -1.0);
        b = cxd(re, im) * abs_b;
    }
    ComplexMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(j, k) = ((j + n - k) % n == 0) ? a : b;
    if (!m.is_unitary(kTol)) throw VerificationError("circulant construction failed unitarity");
    return m;
}

namespace {

std::vector<ComplexMatrix> all_permutation_matrices(std::size_t n) {
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = int(i);
    std::vector<ComplexMatrix> out;
    do {
        ComplexMatrix p(n, n);
        for (std::size_t i = 0; i < n; ++i) p(idx[i], i) = 1.0;
        out.push_back(std::move(p));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

}  // namespace

ComplexMatrix commuting_hadamard(std::size_t n) {
    if (n < 2) throw SchemaError("dimension must be at least 2");
    ComplexMatrix h;
    if (n == 2) {
        h = ComplexMatrix::from_rows({{1.0, cxd(0, 1)}, {cxd(0, 1), 1.0}});
    } else if (n <= 4) {
        auto circ = circulant_unitary(n, 1.0 / std::sqrt(double(n)), +1);
        if (!circ) throw VerificationError("equal-modulus circulant unexpectedly infeasible");
        h = *circ * cxd(std::sqrt(double(n)));
    } else {
        std::ostringstream msg;
        msg << "no commuting Hadamard exists in dimension " << n
            << ": equal-modulus entries force |a| = 1/sqrt(n), below the circulant unitarity "
               "bound (n-2)/n";
        throw RefusalError(msg.str());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(std::abs(h(i, j)) - 1.0) > kTol)
                throw VerificationError("Hadamard entries must be unimodular");
    if (!(h * h.dagger()).approx_equal(ComplexMatrix::identity(n) * cxd(double(n)), kTol))
        throw VerificationError("Hadamard normalization failed");
    for (const auto& p : all_permutation_matrices(n))
        if (!(h * p).approx_equal(p * h, kTol))
            throw VerificationError("Hadamard does not commute with all permutations");
    return h;
}

EquivariantUEB hadamard_ueb(const Representation& perm_rep, const ComplexMatrix& h) {
    std::size_t n = perm_rep.dim();
    for (const auto& m : perm_rep.images) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double v = std::abs(m(i, j));
                if (v > kTol && std::abs(v - 1.0) > kTol)
                    throw VerificationError("representation is not a permutation representation");
            }
        if (!(h * m).approx_equal(m * h, kTol))
            throw VerificationError("Hadamard does not commute with the representation");
    }

    auto diag_of_row = [&](const ComplexMatrix& m, std::size_t row) {
        std::vector<cxd> d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = m(row, k);
        return ComplexMatrix::diagonal(d);
    };
    ComplexMatrix hdag = h.dagger();
    ComplexMatrix ht = h.transpose();
    std::vector<ComplexMatrix> elements;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            elements.push_back(
                (h * diag_of_row(h, j).dagger() * hdag * diag_of_row(ht, i)) *
                cxd(1.0 / double(n)));
    return verify_equivariant(verify_ueb(elements), perm_rep);
}

}  // namespace equitel
