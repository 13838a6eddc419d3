#include "equitel/representation.hpp"

#include <algorithm>
#include <cmath>

namespace equitel {

std::vector<cxd> Representation::character() const {
    std::vector<cxd> chi;
    chi.reserve(images.size());
    for (const auto& m : images) chi.push_back(m.trace());
    return chi;
}

void Representation::validate(double tol) const {
    const FiniteGroup& g = *group;
    if (images.size() != g.order()) throw VerificationError("one image per element required");
    std::size_t d = dim();
    if (!images[g.identity()].approx_equal(ComplexMatrix::identity(d), tol))
        throw VerificationError("identity image is not the identity matrix");
    for (const auto& m : images)
        if (!m.is_unitary(tol)) throw VerificationError("representation image is not unitary");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (!(images[a] * images[b]).approx_equal(images[g.mul(int(a), int(b))], tol))
                throw VerificationError("representation is not a homomorphism");
}

Representation Representation::from_generator_images(const FiniteGroup& g,
                                                     const std::vector<ComplexMatrix>& gen_images) {
    if (gen_images.size() != g.generators().size())
        throw SchemaError("one image per group generator required");
    Representation rho;
    rho.group = &g;
    std::size_t d = gen_images.empty() ? 1 : gen_images[0].rows();
    rho.images.assign(g.order(), ComplexMatrix::identity(d));
    for (std::size_t x = 0; x < g.order(); ++x) {
        ComplexMatrix m = ComplexMatrix::identity(d);
        for (int k : g.generator_words()[x]) m = m * gen_images[k];
        rho.images[x] = m;
    }
    rho.validate();
    return rho;
}

Representation Representation::trivial(const FiniteGroup& g, std::size_t dim) {
    Representation rho;
    rho.group = &g;
    rho.images.assign(g.order(), ComplexMatrix::identity(dim));
    return rho;
}

Representation Representation::permutation(const FiniteGroup& g) {
    if (g.permutations().empty())
        throw SchemaError("group has no permutation realization");
    Representation rho;
    rho.group = &g;
    for (const auto& p : g.permutations()) {
        ComplexMatrix m(p.degree(), p.degree());
        for (std::size_t i = 0; i < p.degree(); ++i) m(p.images[i], i) = 1.0;
        rho.images.push_back(std::move(m));
    }
    rho.validate();
    return rho;
}

Representation dual_rep(const Representation& rho) {
    Representation d;
    d.group = rho.group;
    for (const auto& m : rho.images) d.images.push_back(m.conj());
    return d;
}

Representation tensor_rep(const Representation& a, const Representation& b) {
    if (a.group != b.group) throw Error("tensor of representations of different groups");
    Representation t;
    t.group = a.group;
    for (std::size_t g = 0; g < a.images.size(); ++g)
        t.images.push_back(tensor(a.images[g], b.images[g]));
    return t;
}

Representation twist_by_character(const Representation& rho, const std::vector<cxd>& chi) {
    Representation t;
    t.group = rho.group;
    for (std::size_t g = 0; g < rho.images.size(); ++g)
        t.images.push_back(rho.images[g] * chi[g]);
    return t;
}

Representation restrict_rep(const Representation& rho, const Subgroup& h,
                            const FiniteGroup& h_group) {
    Representation r;
    r.group = &h_group;
    for (int m : h.members) r.images.push_back(rho.images[m]);
    return r;
}

MatrixGroup build_matrix_group(const std::string& name, const std::vector<ComplexMatrix>& gens,
                               std::size_t size_cap) {
    if (gens.empty()) throw SchemaError("need at least one generator matrix");
    std::size_t d = gens[0].rows();
    for (const auto& m : gens)
        if (!m.is_unitary(1e-9)) throw VerificationError("matrix group generator is not unitary");

    std::vector<ComplexMatrix> elems{ComplexMatrix::identity(d)};
    std::vector<std::vector<int>> words{{}};
    auto find = [&](const ComplexMatrix& m) -> int {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i].approx_equal(m, 1e-6)) return int(i);
        return -1;
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            ComplexMatrix m = elems[i] * gens[k];
            if (find(m) < 0) {
                elems.push_back(m);
                auto w = words[i];
                w.push_back(int(k));
                words.push_back(std::move(w));
                if (elems.size() > size_cap)
                    throw SchemaError("matrix group closure exceeds size cap");
            }
        }

    std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int idx = find(elems[a] * elems[b]);
            if (idx < 0) throw VerificationError("matrix set is not closed");
            table[a][b] = idx;
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("m" + std::to_string(i));
    std::vector<int> gen_idx;
    for (const auto& m : gens) gen_idx.push_back(find(m));

    MatrixGroup mg;
    mg.group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(
        name, std::move(names), std::move(table), std::move(gen_idx), words));
    mg.rep.group = mg.group.get();
    mg.rep.images = std::move(elems);
    mg.rep.validate();
    return mg;
}

void RotationRep::validate(double tol) const {
    const FiniteGroup& g = *group;
    if (images.size() != g.order()) throw VerificationError("one rotation per element required");
    if (!images[g.identity()].is_identity(tol))
        throw VerificationError("identity image is not the identity rotation");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            // image(a*b) = image(a) o image(b); compose applies its first
            // argument first, so that composite is compose(image(b), image(a)).
            Rotation want = images[g.mul(int(a), int(b))];
            Rotation got = compose(images[b], images[a]);
            if (!want.approx_equal(got, tol))
                throw VerificationError("rotation representation is not a homomorphism");
        }
}

RotationRep RotationRep::from_generator_images(const FiniteGroup& g,
                                               const std::vector<Rotation>& gen_images) {
    if (gen_images.size() != g.generators().size())
        throw SchemaError("one rotation per group generator required");
    RotationRep rr;
    rr.group = &g;
    rr.images.assign(g.order(), Rotation::identity());
    for (std::size_t x = 0; x < g.order(); ++x) {
        Rotation r = Rotation::identity();
        // Word letters multiply on the right; the right factor acts first.
        for (int k : g.generator_words()[x]) r = compose(gen_images[k], r);
        rr.images[x] = r;
    }
    rr.validate();
    return rr;
}

Rotation q_map(const ComplexMatrix& u) {
    if (u.rows() != 2 || u.cols() != 2 || !u.is_unitary(kTol))
        throw VerificationError("q_map expects a 2x2 unitary");
    cxd det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    cxd phase = std::sqrt(det);
    ComplexMatrix v = u * (cxd(1.0) / phase);
    // v = w I - i (x sx + y sy + z sz)
    double w = 0.5 * (v(0, 0) + v(1, 1)).real();
    double x = -0.5 * (v(0, 1) + v(1, 0)).imag();
    double y = 0.5 * (v(1, 0) - v(0, 1)).real();
    double z = -0.5 * (v(0, 0) - v(1, 1)).imag();
    return Rotation::from_quaternion({w, x, y, z});
}

ComplexMatrix su2_lift(const Rotation& r, cxd phase) {
    double h = r.angle() / 2.0;
    cxd c = std::cos(h);
    cxd is = cxd(0, -1) * std::sin(h);
    const Vec3& n = r.axis();
    ComplexMatrix m = ComplexMatrix::identity(2) * c +
                      (pauli_x() * n.x + pauli_y() * n.y + pauli_z() * n.z) * is;
    return m * phase;
}

RotationRep q_rep(const MatrixGroup& mg) {
    RotationRep rr;
    rr.group = mg.group.get();
    for (const auto& m : mg.rep.images) rr.images.push_back(q_map(m));
    rr.validate();
    return rr;
}

RotationGroup build_rotation_group(const std::string& name, const std::vector<Rotation>& gens,
                                   std::size_t size_cap) {
    std::vector<Rotation> elems{Rotation::identity()};
    std::vector<std::vector<int>> words{{}};
    auto find = [&](const Rotation& r) -> int {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i].approx_equal(r, 1e-7)) return int(i);
        return -1;
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            // Append generator k on the right of the word: elems[i] * gens[k],
            // i.e. the rotation applying gens[k] first.
            Rotation r = compose(gens[k], elems[i]);
            if (find(r) < 0) {
                elems.push_back(r);
                auto w = words[i];
                w.push_back(int(k));
                words.push_back(std::move(w));
                if (elems.size() > size_cap)
                    throw SchemaError("rotation group closure exceeds size cap");
            }
        }
    std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int idx = find(compose(elems[b], elems[a]));  // a * b applies b first
            if (idx < 0) throw VerificationError("rotation set is not closed");
            table[a][b] = idx;
        }
    std::vector<std::string> names;
    names.push_back("e");
    for (std::size_t i = 1; i < n; ++i) {
        std::string w;
        for (int k : words[i]) w += char('a' + k);
        names.push_back(w);
    }
    std::vector<int> gen_idx;
    for (const auto& r : gens) gen_idx.push_back(find(r));
    RotationGroup rg;
    rg.group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(
        name, std::move(names), std::move(table), std::move(gen_idx), words));
    rg.rep.group = rg.group.get();
    rg.rep.images = std::move(elems);
    rg.rep.validate();
    return rg;
}

std::optional<std::vector<cxd>> invariance_phase_system(const Representation& rho_a,
                                                        const Representation& rho_b,
                                                        const ComplexMatrix& v, double tol) {
    if (rho_a.group != rho_b.group) throw Error("representations live over different groups");
    const FiniteGroup& g = *rho_a.group;
    std::size_t d = v.rows();
    std::vector<cxd> theta(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        ComplexMatrix m = rho_b.image(int(x)) * v * rho_a.image(int(x)).transpose();
        cxd factor;
        double resid = m.scalar_multiple_residual(v, factor);
        if (resid > tol * double(d) || std::abs(std::abs(factor) - 1.0) > tol)
            return std::nullopt;
        theta[x] = factor / std::abs(factor);
    }
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (std::abs(theta[g.mul(int(a), int(b))] - theta[a] * theta[b]) > 1e-7)
                return std::nullopt;
    return theta;
}

namespace {

// Column-major vec: component (c*d + r) of vec(V) is V(r, c); then
// vec(B V A^T) = (A (x) B) vec(V).
ComplexMatrix unvec_cm(const std::vector<cxd>& x, std::size_t d) {
    ComplexMatrix v(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) v(r, c) = x[c * d + r];
    return v;
}

}  // namespace

std::optional<InvariantStateWitness> invariant_entangled_state(const Representation& rho_a,
                                                               const Representation& rho_b,
                                                               std::uint64_t seed) {
    if (rho_a.group != rho_b.group) throw Error("representations live over different groups");
    const FiniteGroup& g = *rho_a.group;
    std::size_t d = rho_a.dim();
    if (rho_b.dim() != d) throw Error("equal dimensions required");

    auto chi_a = rho_a.character();
    auto chi_b = rho_b.character();

    for (const auto& theta : one_dim_character_table(g)) {
        // Character screen: theta (x) rho_a^* must match rho_b.
        bool ok = true;
        for (std::size_t x = 0; x < g.order() && ok; ++x)
            if (std::abs(theta[x] * std::conj(chi_a[x]) - chi_b[x]) > 1e-7) ok = false;
        if (!ok) continue;

        // Projector onto { V : rho_b(g) V rho_a(g)^T = theta(g) V }.
        std::size_t n2 = d * d;
        ComplexMatrix proj(n2, n2);
        for (std::size_t x = 0; x < g.order(); ++x) {
            ComplexMatrix k = tensor(rho_a.image(int(x)), rho_b.image(int(x)));
            proj = proj + k * std::conj(theta[x]);
        }
        proj = proj * (cxd(1.0) / double(g.order()));

        // Orthonormal basis of the image (Gram-Schmidt over the columns).
        std::vector<std::vector<cxd>> basis;
        for (std::size_t col = 0; col < n2; ++col) {
            std::vector<cxd> v(n2);
            for (std::size_t r = 0; r < n2; ++r) v[r] = proj(r, col);
            for (const auto& b : basis) {
                cxd ov = 0.0;
                for (std::size_t r = 0; r < n2; ++r) ov += std::conj(b[r]) * v[r];
                for (std::size_t r = 0; r < n2; ++r) v[r] -= ov * b[r];
            }
            double nn = 0.0;
            for (const auto& c : v) nn += std::norm(c);
            nn = std::sqrt(nn);
            if (nn > 1e-7) {
                for (auto& c : v) c /= nn;
                basis.push_back(std::move(v));
            }
        }
        if (basis.empty()) continue;

        Rng rng(seed);
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::vector<cxd> w(n2, 0.0);
            if (attempt == 0) {
                for (const auto& b : basis)
                    for (std::size_t r = 0; r < n2; ++r) w[r] += b[r];
            } else {
                std::normal_distribution<double> gauss(0.0, 1.0);
                for (const auto& b : basis) {
                    cxd coef(gauss(rng), gauss(rng));
                    for (std::size_t r = 0; r < n2; ++r) w[r] += coef * b[r];
                }
            }
            ComplexMatrix u(d, d);
            try {
                u = polar_unitary(unvec_cm(w, d));
            } catch (const Error&) {
                continue;
            }
            // Canonical global phase: first nonzero entry positive real.
            cxd ph(1.0);
            bool found = false;
            for (std::size_t r = 0; r < d && !found; ++r)
                for (std::size_t c = 0; c < d && !found; ++c)
                    if (std::abs(u(r, c)) > 1e-6) {
                        ph = u(r, c) / std::abs(u(r, c));
                        found = true;
                    }
            u = u * (cxd(1.0) / ph);
            auto confirmed = invariance_phase_system(rho_a, rho_b, u);
            if (confirmed) return InvariantStateWitness{u, *confirmed};
        }
    }
    return std::nullopt;
}

}  // namespace equitel
