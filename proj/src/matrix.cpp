#include "equitel/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace equitel {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cxd>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cxd>> rows) {
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("ragged matrix literal");
        std::size_t j = 0;
        for (cxd v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    ComplexMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            cxd v = (*this)(i, k);
            if (v == cxd(0.0)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    ComplexMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix diff dimension mismatch");
    ComplexMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator*(cxd s) const {
    ComplexMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix r = *this;
    for (auto& v : r.a_) v = std::conj(v);
    return r;
}

cxd ComplexMatrix::trace() const {
    cxd t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& o, double tol) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (std::abs(a_[i] - o.a_[i]) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (!is_square()) return false;
    return (dagger() * (*this)).approx_equal(identity(rows_), tol);
}

double ComplexMatrix::scalar_multiple_residual(const ComplexMatrix& o, cxd& factor) const {
    cxd denom = trace_inner(o, o);
    factor = (std::abs(denom) < kTightTol) ? cxd(0.0) : trace_inner(o, *this) / denom;
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - factor * o(i, j)));
    return worst;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

cxd trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("trace_inner dimension mismatch");
    cxd t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t += std::conj(a(i, j)) * b(i, j);
    return t;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows();
    ComplexMatrix a = m, inv = ComplexMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-14) throw Error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        cxd d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            cxd f = a(r, col);
            if (f == cxd(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

ComplexMatrix polar_unitary(const ComplexMatrix& m) {
    ComplexMatrix x = m;
    for (int it = 0; it < 100; ++it) {
        ComplexMatrix next = (x + inverse(x).dagger()) * cxd(0.5);
        if (next.approx_equal(x, 1e-14)) {
            x = next;
            break;
        }
        x = next;
    }
    if (!x.is_unitary(1e-8)) throw Error("polar iteration did not converge to a unitary");
    return x;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0, cxd(0, -1)}, {cxd(0, 1), 0}});
}
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

double PureState::norm() const {
    double s = 0.0;
    for (const auto& v : amps) s += std::norm(v);
    return std::sqrt(s);
}

PureState PureState::normalized() const {
    double n = norm();
    if (n < kTightTol) throw Error("cannot normalize zero state");
    PureState r = *this;
    for (auto& v : r.amps) v /= n;
    return r;
}

cxd PureState::inner(const PureState& o) const {
    if (dim() != o.dim()) throw Error("state inner product dimension mismatch");
    cxd t = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) t += std::conj(amps[i]) * o.amps[i];
    return t;
}

PureState apply(const ComplexMatrix& m, const PureState& s) {
    if (m.cols() != s.dim()) throw Error("operator/state dimension mismatch");
    PureState r;
    r.amps.assign(m.rows(), cxd(0.0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.amps[i] += m(i, j) * s.amps[j];
    return r;
}

PureState tensor(const PureState& a, const PureState& b) {
    PureState r;
    r.amps.resize(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r.amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
    return r;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(a.normalized().inner(b.normalized()));
}

PureState bell_state(std::size_t n) {
    PureState s;
    s.amps.assign(n * n, cxd(0.0));
    for (std::size_t i = 0; i < n; ++i) s.amps[i * n + i] = 1.0 / std::sqrt(double(n));
    return s;
}

PureState twisted_bell(const ComplexMatrix& x) {
    if (!x.is_unitary()) throw VerificationError("twist of the resource state must be unitary");
    std::size_t n = x.rows();
    PureState eta = bell_state(n);
    return apply(tensor(ComplexMatrix::identity(n), x), eta);
}

ComplexMatrix reduced_density(const PureState& s, std::size_t n, int subsystem) {
    if (s.dim() != n * n) throw Error("reduced_density expects a state on C^n (x) C^n");
    ComplexMatrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cxd v = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (subsystem == 0)
                    v += s.amps[i * n + k] * std::conj(s.amps[j * n + k]);
                else
                    v += s.amps[k * n + i] * std::conj(s.amps[k * n + j]);
            }
            rho(i, j) = v;
        }
    return rho;
}

PureState random_state(std::size_t dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    PureState s;
    s.amps.resize(dim);
    for (auto& v : s.amps) v = cxd(gauss(rng), gauss(rng));
    return s.normalized();
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    // Gram-Schmidt on a random Gaussian matrix.
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cxd(gauss(rng), gauss(rng));
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            cxd overlap = 0.0;
            for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(m(r, p)) * m(r, c);
            for (std::size_t r = 0; r < dim; ++r) m(r, c) -= overlap * m(r, p);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(m(r, c));
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < dim; ++r) m(r, c) /= nrm;
    }
    return m;
}

}  // namespace equitel
