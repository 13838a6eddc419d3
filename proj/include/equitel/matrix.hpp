#pragma once

#include <vector>

#include "equitel/common.hpp"

namespace equitel {

// Dense complex matrix, row-major. Everything in scope is tiny (dim <= 16),
// so no attempt is made at being clever.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cxd(0.0)) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<cxd>& d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cxd>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cxd& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cxd& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(cxd s) const;

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cxd trace() const;
    double frobenius_norm() const;

    bool approx_equal(const ComplexMatrix& o, double tol = kTol) const;
    bool is_unitary(double tol = kTol) const;

    // Largest |entry| difference from a scalar multiple of `o`; the scalar is
    // Tr(o^dag this)/Tr(o^dag o). Returns the scalar through `factor`.
    double scalar_multiple_residual(const ComplexMatrix& o, cxd& factor) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cxd> a_;
};

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
// Tr(a^dag b); the trace inner product used throughout.
cxd trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& m);
// Unitary factor of the polar decomposition (Newton iteration); m must be
// invertible.
ComplexMatrix polar_unitary(const ComplexMatrix& m);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Normalized pure state of a d-dimensional system (or a pair, d = n*n).
struct PureState {
    std::vector<cxd> amps;

    std::size_t dim() const { return amps.size(); }
    double norm() const;
    PureState normalized() const;
    cxd inner(const PureState& o) const;  // <this|o>
};

PureState apply(const ComplexMatrix& m, const PureState& s);
PureState tensor(const PureState& a, const PureState& b);
// |<a|b>|^2 for normalized states.
double fidelity(const PureState& a, const PureState& b);

// Maximally entangled resource states.
PureState bell_state(std::size_t n);
PureState twisted_bell(const ComplexMatrix& x);  // (1 (x) X) |eta>

// Reduced density matrix of subsystem A (0) or B (1) of a state on C^n (x) C^n.
ComplexMatrix reduced_density(const PureState& s, std::size_t n, int subsystem);

PureState random_state(std::size_t dim, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace equitel
