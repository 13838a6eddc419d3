#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "equitel/characters.hpp"
#include "equitel/oeb.hpp"

using namespace equitel;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<long long> int_row(const ClassFunction& cf) {
    std::vector<long long> row;
    for (const auto& q : cf.exact) {
        REQUIRE(q.is_rational());
        REQUIRE(q.a.den == 1);
        row.push_back(q.a.num);
    }
    return row;
}
}  // namespace

TEST_SUITE_BEGIN("characters");

TEST_CASE("conjugacy classes of the order-60 alternating group") {
    FiniteGroup a5 = FiniteGroup::preset("A5");
    ElementClasses cls = conjugacy_classes(a5);
    REQUIRE(cls.count() == 5);
    std::vector<std::size_t> sizes(cls.sizes);
    CHECK(sizes == std::vector<std::size_t>{1, 15, 20, 12, 12});
    // element orders 1, 2, 3, 5, 5 in canonical order
    CHECK(a5.element_order(cls.representatives[0]) == 1);
    CHECK(a5.element_order(cls.representatives[1]) == 2);
    CHECK(a5.element_order(cls.representatives[2]) == 3);
    CHECK(a5.element_order(cls.representatives[3]) == 5);
    CHECK(a5.element_order(cls.representatives[4]) == 5);
}

TEST_CASE("characters of simple representations") {
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    ClassFunction triv = character_of_rep(Representation::trivial(z3, 1));
    for (const auto& v : triv.values) CHECK(std::abs(v - cxd(1.0)) < 1e-12);

    // the preset acts on itself, so the permutation rep is the regular rep
    ClassFunction reg = character_of_rep(Representation::permutation(z3));
    CHECK(int_row(reg) == std::vector<long long>{3, 0, 0});
}

TEST_CASE("one-dimensional characters of subgroups") {
    FiniteGroup a5 = FiniteGroup::preset("A5");
    auto subs = enumerate_subgroups(a5);

    Subgroup z3sub, a4sub, whole;
    for (const auto& h : subs) {
        if (h.order() == 3) z3sub = h;
        if (h.order() == 12) a4sub = h;
        if (h.order() == 60) whole = h;
    }
    auto chars_z3 = one_dim_characters(a5, z3sub);
    CHECK(chars_z3.size() == 3);
    std::set<int> seen;
    for (const auto& chi : chars_z3) {
        // all values are cube roots of unity
        for (const auto& v : chi) CHECK(std::abs(std::pow(std::abs(v), 3.0) - 1.0) < 1e-9);
    }
    (void)seen;

    CHECK(one_dim_characters(a5, a4sub).size() == 3);  // abelianization of order 3
    CHECK(one_dim_characters(a5, whole).size() == 1);  // perfect group
}

TEST_CASE("induction basics") {
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    Subgroup triv = trivial_subgroup(z3);
    ClassFunction reg = induce_character(z3, triv, {cxd(1.0)});
    CHECK(int_row(reg) == std::vector<long long>{3, 0, 0});
    CHECK(reg.degree() == 3);

    // degree is always the index for one-dimensional sources
    FiniteGroup s4 = FiniteGroup::preset("S4");
    for (const auto& h : enumerate_subgroups(s4)) {
        auto chars = one_dim_characters(s4, h);
        ClassFunction ind = induce_character(s4, h, chars[0]);
        CHECK(ind.degree() == s4.order() / h.order());
    }
}

TEST_CASE("induction is transitive on a spot-checked chain") {
    FiniteGroup a4 = FiniteGroup::preset("A4");
    Subgroup v4, z2;
    for (const auto& h : enumerate_subgroups(a4)) {
        if (h.order() == 4) v4 = h;
        if (h.order() == 2 && z2.members.empty()) z2 = h;
    }
    // ensure the chain z2 < v4
    REQUIRE(std::includes(v4.members.begin(), v4.members.end(), z2.members.begin(),
                          z2.members.end()));
    auto chars = one_dim_characters(a4, z2);
    for (const auto& chi : chars) {
        // middle induction evaluated per element of v4
        std::vector<cxd> mid(v4.order(), 0.0);
        std::vector<int> pos_in_z2(a4.order(), -1);
        for (std::size_t i = 0; i < z2.members.size(); ++i) pos_in_z2[z2.members[i]] = int(i);
        for (std::size_t k = 0; k < v4.order(); ++k) {
            cxd sum = 0.0;
            for (std::size_t x = 0; x < v4.order(); ++x) {
                int g = a4.mul(a4.mul(v4.members[x], v4.members[k]), a4.inv(v4.members[x]));
                if (pos_in_z2[g] >= 0) sum += chi[pos_in_z2[g]];
            }
            mid[k] = sum / double(z2.order());
        }
        ClassFunction two_step = induce_character(a4, v4, mid);
        ClassFunction one_step = induce_character(a4, z2, chi);
        for (std::size_t c = 0; c < two_step.values.size(); ++c)
            CHECK(std::abs(two_step.values[c] - one_step.values[c]) < 1e-9);
    }
}

TEST_CASE("frobenius reciprocity spot checks") {
    FiniteGroup s4 = FiniteGroup::preset("S4");
    Representation perm = Representation::permutation(s4);
    ClassFunction psi = character_of_rep(perm);
    for (const auto& h : enumerate_subgroups(s4)) {
        if (h.order() == 1 || h.order() == 24) continue;
        auto chars = one_dim_characters(s4, h);
        for (const auto& chi : chars) {
            ClassFunction ind = induce_character(s4, h, chi);
            // <ind, psi>_G
            cxd lhs = inner_product(ind, psi);
            // <chi, psi|_H>_H
            cxd rhs = 0.0;
            for (std::size_t i = 0; i < h.members.size(); ++i)
                rhs += chi[i] * std::conj(perm.image(h.members[i]).trace());
            rhs /= double(h.order());
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
}

TEST_CASE("monomial character table of the alternating group on five letters") {
    FiniteGroup a5 = FiniteGroup::preset("A5");
    auto candidates = monomial_characters(a5, 9);
    REQUIRE(candidates.size() == 5);
    std::vector<std::vector<long long>> rows;
    for (const auto& c : candidates) rows.push_back(int_row(c.chi));
    std::vector<std::vector<long long>> expected{{1, 1, 1, 1, 1},
                                                 {5, 1, -1, 0, 0},
                                                 {5, 1, 2, 0, 0},
                                                 {6, -2, 0, 1, 1},
                                                 {6, 2, 0, 1, 1}};
    std::sort(rows.begin(), rows.end());
    std::sort(expected.begin(), expected.end());
    CHECK(rows == expected);

    // exact and float values agree on every entry
    for (const auto& c : candidates)
        for (std::size_t cl = 0; cl < c.chi.values.size(); ++cl)
            CHECK(std::abs(c.chi.values[cl].real() - c.chi.exact[cl].value()) < 1e-9);
}

TEST_CASE("three-dimensional character of the icosahedral type") {
    FiniteGroup a5 = FiniteGroup::preset("A5");
    for (bool swap : {false, true}) {
        ClassFunction chi = alternating5_threedim_character(a5, swap);
        CHECK(chi.degree() == 3);
        CHECK(std::abs(inner_product(chi, chi) - cxd(1.0)) < 1e-9);
    }

    // float cross-check: the rotation group of the icosahedron realizes the
    // representation; 1 + 2cos(angle) over its 60 elements reproduces the
    // character value multiset with class multiplicities.
    RotationGroup ico = standard_rotation_group("icosahedral");
    REQUIRE(ico.group->order() == 60);
    std::vector<double> traces;
    for (const auto& r : ico.rep.images) traces.push_back(1.0 + 2.0 * std::cos(r.angle()));
    std::sort(traces.begin(), traces.end());

    ClassFunction chi = alternating5_threedim_character(a5, false);
    std::vector<double> expected;
    for (std::size_t c = 0; c < chi.values.size(); ++c)
        for (std::size_t k = 0; k < chi.classes.sizes[c]; ++k)
            expected.push_back(chi.values[c].real());
    std::sort(expected.begin(), expected.end());
    REQUIRE(traces.size() == expected.size());
    for (std::size_t i = 0; i < traces.size(); ++i)
        CHECK(std::abs(traces[i] - expected[i]) < 1e-9);
}

TEST_CASE("the squared three-dimensional character is not monomially decomposable") {
    FiniteGroup a5 = FiniteGroup::preset("A5");
    auto candidates = monomial_characters(a5, 9);
    for (bool swap : {false, true}) {
        ClassFunction chi = alternating5_threedim_character(a5, swap);
        ClassFunction target = absolute_square(chi);
        CHECK(target.degree() == 9);
        // the squared golden entries are (3 +- sqrt 5)/2
        bool has_irrational = false;
        for (const auto& q : target.exact) has_irrational = has_irrational || !q.is_rational();
        CHECK(has_irrational);

        FeasibilityResult res = monomial_decomposition_feasible(target, candidates);
        CHECK_FALSE(res.feasible);
        CHECK(res.certificate.find("sqrt(5)") != std::string::npos);
        CHECK(res.certificate.find("irrational") != std::string::npos);
    }
}

TEST_CASE("feasible controls") {
    // regular character of Z3 decomposes trivially
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    ClassFunction reg = character_of_rep(Representation::permutation(z3));
    auto cands_z3 = monomial_characters(z3, 3);
    FeasibilityResult r1 = monomial_decomposition_feasible(reg, cands_z3);
    CHECK(r1.feasible);

    // |chi|^2 of the 2-dim irreducible of S3 (realized inside the natural
    // permutation representation) decomposes into monomial characters
    FiniteGroup s3 = FiniteGroup::preset("S3");
    ClassFunction perm = character_of_rep(Representation::permutation(s3));
    // chi_std = chi_perm - 1; target = |chi_std|^2 = chi_std^2 (real)
    ClassFunction target = perm;
    REQUIRE(target.is_exact);
    for (std::size_t c = 0; c < target.values.size(); ++c) {
        QuadScalar v = target.exact[c] - QuadScalar(Rational(1));
        target.exact[c] = v * v;
        target.values[c] = cxd(target.exact[c].value());
    }
    auto cands_s3 = monomial_characters(s3, 4);
    FeasibilityResult r2 = monomial_decomposition_feasible(target, cands_s3);
    CHECK(r2.feasible);
    CHECK_FALSE(r2.witness.empty());

    // monotonicity: enlarging the candidate set keeps it feasible
    auto more = monomial_characters(s3, 6);
    CHECK(monomial_decomposition_feasible(target, more).feasible);
    (void)kPi;
}

TEST_SUITE_END();
