#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "equitel/group.hpp"
#include "equitel/gset.hpp"

using namespace equitel;

TEST_SUITE_BEGIN("group");

namespace {

// Independent brute-force subgroup oracle: test every subset at tiny orders,
// every "closed subset" generated from element pairs/triples otherwise.
std::set<std::vector<int>> brute_force_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> out;
    std::size_t n = g.order();
    REQUIRE(n <= 12);  // 2^12 subsets is the most this oracle should chew on
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << g.identity()))) continue;
        std::vector<int> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(int(i));
        if (is_subgroup(g, members)) out.insert(members);
    }
    return out;
}

int count_conjugacy_classes_of_elements(const FiniteGroup& g) {
    std::vector<bool> seen(g.order(), false);
    int classes = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        ++classes;
        for (std::size_t h = 0; h < g.order(); ++h) seen[g.conj(int(h), int(x))] = true;
    }
    return classes;
}

}  // namespace

TEST_CASE("presets have the expected orders") {
    CHECK(FiniteGroup::preset("Z3").order() == 3);
    CHECK(FiniteGroup::preset("Z1").order() == 1);
    CHECK(FiniteGroup::preset("D2").order() == 4);
    CHECK(FiniteGroup::preset("D4").order() == 8);
    CHECK(FiniteGroup::preset("A4").order() == 12);
    CHECK(FiniteGroup::preset("S4").order() == 24);
    CHECK(FiniteGroup::preset("S5").order() == 120);
    FiniteGroup a5 = FiniteGroup::preset("A5");
    CHECK(a5.order() == 60);
    CHECK(count_conjugacy_classes_of_elements(a5) == 5);
}

TEST_CASE("generators {(01),(012)} close to S3") {
    FiniteGroup s3 = FiniteGroup::from_permutations(
        "S3", {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    s3.validate();
}

TEST_CASE("closure size cap and invalid generators are rejected") {
    CHECK_THROWS_AS(FiniteGroup::from_permutations(
                        "big", {Permutation::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}})}, 5),
                    SchemaError);
    Permutation bad;
    bad.images = {0, 0, 1};
    CHECK_THROWS_AS(FiniteGroup::from_permutations("bad", {bad}), SchemaError);
}

TEST_CASE("subgroup enumeration matches a brute-force oracle") {
    for (const char* name : {"Z4", "S3", "Z6", "D4", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        auto subs = enumerate_subgroups(g);
        auto oracle = brute_force_subgroups(g);
        CHECK(subs.size() == oracle.size());
        for (const auto& h : subs) CHECK(oracle.count(h.members) == 1);
    }
    // Z4: one subgroup of each order 1, 2, 4.
    auto z4subs = enumerate_subgroups(FiniteGroup::preset("Z4"));
    CHECK(z4subs.size() == 3);
    // A4: 10 subgroups.
    auto a4 = FiniteGroup::preset("A4");
    CHECK(enumerate_subgroups(a4).size() == 10);
    // Trivial group.
    auto z1 = FiniteGroup::preset("Z1");
    CHECK(enumerate_subgroups(z1).size() == 1);
}

TEST_CASE("conjugacy classes of subgroups") {
    FiniteGroup z4 = FiniteGroup::preset("Z4");
    auto cls_z4 = conjugacy_classes_of_subgroups(z4);
    CHECK(cls_z4.classes.size() == 3);  // abelian: all classes singletons
    for (const auto& c : cls_z4.classes) CHECK(c.members.size() == 1);
    // Totally ordered by containment.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK((cls_z4.below[i][j] || cls_z4.below[j][i]));

    FiniteGroup s3 = FiniteGroup::preset("S3");
    auto cls_s3 = conjugacy_classes_of_subgroups(s3);
    CHECK(cls_s3.classes.size() == 4);
    std::multiset<std::pair<std::size_t, std::size_t>> shape;  // (order, class size)
    for (const auto& c : cls_s3.classes)
        shape.insert({c.representative().order(), c.members.size()});
    CHECK(shape == std::multiset<std::pair<std::size_t, std::size_t>>{
                       {1, 1}, {2, 3}, {3, 1}, {6, 1}});

    FiniteGroup a4 = FiniteGroup::preset("A4");
    auto cls_a4 = conjugacy_classes_of_subgroups(a4);
    // order-2 subgroups of A4 form a single class of size 3
    bool found = false;
    for (const auto& c : cls_a4.classes)
        if (c.representative().order() == 2) {
            CHECK(c.members.size() == 3);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("coset G-sets") {
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    auto regular = coset_gset(z3, trivial_subgroup(z3));
    CHECK(regular.gset.size() == 3);
    regular.gset.validate();
    CHECK(is_free(regular.gset));
    CHECK(is_transitive(regular.gset));

    FiniteGroup z4 = FiniteGroup::preset("Z4");
    int g2 = z4.power(z4.generators()[0], 2);
    Subgroup h = subgroup_closure(z4, {g2});
    auto cs = coset_gset(z4, h);
    CHECK(cs.gset.size() == 2);
    cs.gset.validate();
    int g1 = z4.generators()[0];
    CHECK(cs.gset.apply(g1, 0) == 1);
    CHECK(cs.gset.apply(g1, 1) == 0);

    auto whole = coset_gset(z4, full_subgroup(z4));
    CHECK(whole.gset.size() == 1);
    whole.gset.validate();
}

TEST_CASE("stabilizers") {
    FiniteGroup z4 = FiniteGroup::preset("Z4");
    auto reg = coset_gset(z4, trivial_subgroup(z4));
    CHECK(stabilizer(reg.gset, 0).order() == 1);

    int g2 = z4.power(z4.generators()[0], 2);
    Subgroup h = subgroup_closure(z4, {g2});
    auto cs = coset_gset(z4, h);
    CHECK(stabilizer(cs.gset, 0).members == h.members);

    auto fixed = trivial_gset(z4, 1);
    CHECK(stabilizer(fixed, 0).order() == 4);
}

TEST_CASE("orbit-stabilizer identity across coset spaces") {
    for (const char* name : {"Z3", "Z4", "S3", "A4"}) {
        FiniteGroup g = FiniteGroup::preset(name);
        for (const auto& h : enumerate_subgroups(g)) {
            auto cs = coset_gset(g, h);
            cs.gset.validate();
            for (std::size_t p = 0; p < cs.gset.size(); ++p) {
                auto orb = orbits(cs.gset);
                CHECK(orb.size() == 1);
                CHECK(orb[0].size() * stabilizer(cs.gset, int(p)).order() == g.order());
            }
        }
    }
}

TEST_CASE("gset isomorphism") {
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    auto x = coset_gset(z3, trivial_subgroup(z3)).gset;
    auto iso = find_gset_isomorphism(x, x);
    REQUIRE(iso.has_value());
    for (std::size_t p = 0; p < x.size(); ++p) CHECK((*iso)[p] == int(p));

    // Relabeled regular action.
    GSet y = x;
    std::rotate(y.points.begin(), y.points.begin() + 1, y.points.end());
    for (auto& row : y.act)
        for (auto& v : row) v = (v + 2) % 3;
    for (auto& row : y.act) {
        std::vector<int> newrow(3);
        for (int p = 0; p < 3; ++p) newrow[(p + 2) % 3] = row[p];
        row = newrow;
    }
    y.validate();
    auto iso2 = find_gset_isomorphism(x, y);
    REQUIRE(iso2.has_value());
    for (std::size_t g = 0; g < z3.order(); ++g)
        for (std::size_t p = 0; p < x.size(); ++p)
            CHECK((*iso2)[x.apply(int(g), int(p))] == y.apply(int(g), (*iso2)[p]));

    FiniteGroup z4 = FiniteGroup::preset("Z4");
    auto reg = coset_gset(z4, trivial_subgroup(z4)).gset;
    auto triv = trivial_gset(z4, 4);
    CHECK_FALSE(find_gset_isomorphism(reg, triv).has_value());
}

TEST_CASE("coset space of a stabilizer is isomorphic to the orbit") {
    FiniteGroup a4 = FiniteGroup::preset("A4");
    for (const auto& h : enumerate_subgroups(a4)) {
        auto cs = coset_gset(a4, h);
        Subgroup st = stabilizer(cs.gset, 0);
        auto back = coset_gset(a4, st);
        CHECK(find_gset_isomorphism(cs.gset, back.gset).has_value());
    }
}

TEST_CASE("orbits") {
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    auto reg = coset_gset(z3, trivial_subgroup(z3)).gset;
    CHECK(orbits(reg).size() == 1);

    auto triv = trivial_gset(z3, 5);
    CHECK(orbits(triv).size() == 5);

    GSet opp = reg.opposite();
    opp.validate();
    CHECK(opp.side == GSet::Side::Right);
}

TEST_CASE("derived subgroups and one-dimensional characters") {
    FiniteGroup s3 = FiniteGroup::preset("S3");
    CHECK(derived_subgroup(s3).order() == 3);
    CHECK(one_dim_character_table(s3).size() == 2);

    FiniteGroup a4 = FiniteGroup::preset("A4");
    CHECK(derived_subgroup(a4).order() == 4);
    CHECK(one_dim_character_table(a4).size() == 3);

    FiniteGroup a5 = FiniteGroup::preset("A5");
    CHECK(derived_subgroup(a5).order() == 60);
    CHECK(one_dim_character_table(a5).size() == 1);

    FiniteGroup z6 = FiniteGroup::preset("Z6");
    auto chars = one_dim_character_table(z6);
    CHECK(chars.size() == 6);
    // Characters multiply pointwise like a homomorphism table.
    for (const auto& chi : chars)
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b)
                CHECK(std::abs(chi[z6.mul(int(a), int(b))] - chi[a] * chi[b]) < 1e-9);
}

TEST_CASE("element order, powers and names") {
    FiniteGroup z6 = FiniteGroup::preset("Z6");
    int a = z6.generators()[0];
    CHECK(z6.element_order(a) == 6);
    CHECK(z6.power(a, 6) == z6.identity());
    CHECK(z6.power(a, -1) == z6.inv(a));
    CHECK(z6.element_by_name(z6.element_name(a)).value() == a);
    CHECK_FALSE(z6.element_by_name("nope").has_value());
}

TEST_SUITE_END();
