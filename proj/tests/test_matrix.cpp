#include <cmath>

#include "doctest.h"
#include "equitel/matrix.hpp"

using namespace equitel;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("trace inner product basics") {
    CHECK(trace_inner(pauli_x(), pauli_x()).real() == doctest::Approx(2.0));
    CHECK(std::abs(trace_inner(pauli_x(), pauli_z())) < 1e-15);
    CHECK(std::abs(trace_inner(pauli_x(), pauli_y())) < 1e-15);
}

TEST_CASE("trace inner is conjugate-symmetric and positive definite") {
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        ComplexMatrix a = random_unitary(3, rng), b = random_unitary(3, rng);
        CHECK(std::abs(trace_inner(a, b) - std::conj(trace_inner(b, a))) < 1e-12);
        CHECK(trace_inner(a, a).real() > 0.0);
        CHECK(std::abs(trace_inner(a, a).imag()) < 1e-12);
    }
}

TEST_CASE("inverse and polar decomposition") {
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        ComplexMatrix u = random_unitary(4, rng);
        ComplexMatrix d = ComplexMatrix::diagonal({1.5, 0.7, 2.0, cxd(0.3, 0.1)});
        ComplexMatrix m = u * d;
        CHECK((m * inverse(m)).approx_equal(ComplexMatrix::identity(4), 1e-9));
        ComplexMatrix p = polar_unitary(m);
        CHECK(p.is_unitary(1e-9));
    }
    ComplexMatrix u2 = polar_unitary(pauli_x() * cxd(3.0));
    CHECK(u2.approx_equal(pauli_x(), 1e-9));
}

TEST_CASE("bell state and twisted bell") {
    PureState eta = bell_state(2);
    CHECK(eta.amps[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(eta.amps[1]) < 1e-15);
    CHECK(std::abs(eta.amps[2]) < 1e-15);
    CHECK(eta.amps[3].real() == doctest::Approx(1 / std::sqrt(2.0)));

    PureState tw = twisted_bell(pauli_x());
    CHECK(std::abs(tw.amps[0]) < 1e-15);
    CHECK(tw.amps[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(tw.amps[2].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(tw.amps[3]) < 1e-15);

    CHECK_THROWS_AS(twisted_bell(pauli_x() * cxd(2.0)), VerificationError);
}

TEST_CASE("reduced density of a twisted bell state is maximally mixed") {
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        std::size_t n = 2 + (i % 3);
        ComplexMatrix x = random_unitary(n, rng);
        PureState s = twisted_bell(x);
        for (int sub : {0, 1}) {
            ComplexMatrix rho = reduced_density(s, n, sub);
            CHECK(rho.approx_equal(ComplexMatrix::identity(n) * cxd(1.0 / double(n)), 1e-9));
        }
    }
}

TEST_CASE("tensor dimensions and values") {
    ComplexMatrix t = tensor(pauli_x(), ComplexMatrix::identity(2));
    CHECK(t.rows() == 4);
    CHECK(t(0, 2).real() == doctest::Approx(1.0));
    CHECK(t(1, 3).real() == doctest::Approx(1.0));
    CHECK(std::abs(t(0, 1)) < 1e-15);
}

TEST_SUITE_END();
