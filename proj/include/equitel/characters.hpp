#pragma once

#include <string>

#include "equitel/representation.hpp"

namespace equitel {

// Conjugacy classes of group elements, ordered by (element order, class
// size, smallest member index) for stable output.
struct ElementClasses {
    const FiniteGroup* group = nullptr;
    std::vector<int> representatives;
    std::vector<int> class_of;
    std::vector<std::size_t> sizes;
    std::vector<std::string> labels;

    std::size_t count() const { return representatives.size(); }
};

ElementClasses conjugacy_classes(const FiniteGroup& g);

// Exact scalars in the field Q(sqrt(5)), enough for every character value
// this project needs exactly (integers, rationals, golden-ratio entries).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double value() const { return double(num) / double(den); }
};

struct QuadScalar {
    Rational a, b;  // a + b sqrt(5)

    QuadScalar() = default;
    QuadScalar(Rational ra) : a(ra) {}
    QuadScalar(Rational ra, Rational rb) : a(ra), b(rb) {}

    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar galois_conjugate() const;  // sqrt(5) -> -sqrt(5)
    bool operator==(const QuadScalar& o) const { return a == o.a && b == o.b; }
    bool is_rational() const { return b.num == 0; }
    double value() const;
};

// A class function with float values and, where verified, exact ones.
struct ClassFunction {
    ElementClasses classes;
    std::vector<cxd> values;          // per class (always present)
    std::vector<QuadScalar> exact;    // meaningful iff is_exact
    bool is_exact = false;

    std::size_t degree() const;  // value at the identity class, as an integer
};

ClassFunction character_of_rep(const Representation& rho);

// chi . conj(chi), exact when the input is.
ClassFunction absolute_square(const ClassFunction& chi);

// Hermitian inner product (1/|G|) sum over classes.
cxd inner_product(const ClassFunction& x, const ClassFunction& y);

// One-dimensional characters of a subgroup, listed per subgroup member
// (aligned with h.members).
std::vector<std::vector<cxd>> one_dim_characters(const FiniteGroup& g, const Subgroup& h);

// Induced class function: ind(g) = (1/|H|) sum over x in G with x g x^-1 in
// H of chi(x g x^-1). The result is rationalized exactly when every value is
// within 1e-6 of a rational with denominator dividing |H| (always the case
// in scope: induced characters take algebraic-integer values, and these
// groups land in Z).
ClassFunction induce_character(const FiniteGroup& g, const Subgroup& h,
                               const std::vector<cxd>& chi_per_member);

struct MonomialCandidate {
    std::string source;  // which subgroup and character it came from
    ClassFunction chi;
};

// All induced one-dimensional subgroup characters of degree <= max_degree,
// deduplicated by value vector, sorted by (degree, values).
std::vector<MonomialCandidate> monomial_characters(const FiniteGroup& g, long long max_degree);

struct FeasibilityResult {
    bool feasible = false;
    std::vector<std::pair<std::string, int>> witness;  // candidate source, multiplicity
    std::string certificate;                           // reason when infeasible
};

// Can the target split as a non-negative integer combination of the
// candidates? Exhaustive search with degree pruning; exact arithmetic when
// both sides are exact. The infeasibility certificate names an irrational
// class value when that obstruction applies, otherwise records the exhausted
// search.
FeasibilityResult monomial_decomposition_feasible(const ClassFunction& target,
                                                  const std::vector<MonomialCandidate>& candidates);

// The two 3-dimensional irreducible characters of the order-60 alternating
// group, with exact golden-ratio entries; verified internally (unit norm,
// orthogonality to the trivial character, integrality pattern).
ClassFunction alternating5_threedim_character(const FiniteGroup& a5, bool swap_five_classes);

}  // namespace equitel
