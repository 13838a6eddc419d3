#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "equitel/oeb.hpp"

using namespace equitel;

namespace {
constexpr double kPi = std::numbers::pi;

bool same_oeb_set(const std::array<Rotation, 4>& a, const std::array<Rotation, 4>& b,
                  double tol = 1e-7) {
    std::array<bool, 4> used{};
    for (const auto& ra : a) {
        bool hit = false;
        for (int j = 0; j < 4 && !hit; ++j) {
            if (used[j]) continue;
            if (ball_distance(ra, b[j]) < tol) {
                used[j] = true;
                hit = true;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool contains_rotation(const EquivariantOEB& oeb, const Rotation& r, double tol = 1e-9) {
    for (const auto& e : oeb.elements)
        if (ball_distance(e, r) < tol) return true;
    return false;
}
}  // namespace

TEST_SUITE_BEGIN("oeb");

TEST_CASE("verify_oeb accepts the axis-flip set and rejects perturbations") {
    RotationGroup oct = standard_rotation_group("octahedral");
    std::array<Rotation, 4> pauli_image{
        Rotation::identity(), Rotation::axis_angle(x_axis(), kPi),
        Rotation::axis_angle(y_axis(), kPi), Rotation::axis_angle(z_axis(), kPi)};
    EquivariantOEB oeb = verify_oeb(pauli_image, oct);
    CHECK(oeb.type() == std::vector<std::size_t>{3, 1});

    auto broken = pauli_image;
    broken[1] = Rotation::axis_angle(x_axis(), kPi - 1e-3);
    CHECK_THROWS_AS(verify_oeb(broken, oct), VerificationError);
}

TEST_CASE("tetrahedral elements verify under a Z2 subgroup of the tetrahedral group") {
    RotationGroup tet = standard_rotation_group("tetrahedral");
    auto cat = discrete_catalog("tetrahedral");
    REQUIRE(cat.size() == 2);
    // pick the order-2 subgroup generated by the z-flip
    for (const auto& sub : enumerate_subgroups(*tet.group)) {
        if (sub.order() != 2) continue;
        EquivariantOEB restricted = verify_oeb_under_subgroup(cat[0].elements, tet, sub);
        auto t = restricted.type();
        CHECK(std::accumulate(t.begin(), t.end(), std::size_t(0)) == 4);
    }
}

TEST_CASE("z2 family with four fixed points") {
    EquivariantOEB pauli = z2_oeb_1111(0.0, 0.0);
    CHECK(pauli.type() == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(contains_rotation(pauli, Rotation::identity()));
    CHECK(contains_rotation(pauli, Rotation::axis_angle(z_axis(), kPi)));
    CHECK(contains_rotation(pauli, Rotation::axis_angle(x_axis(), kPi)));
    CHECK(contains_rotation(pauli, Rotation::axis_angle(y_axis(), kPi)));

    EquivariantOEB other = z2_oeb_1111(kPi / 2, kPi / 4);
    CHECK(other.type() == std::vector<std::size_t>{1, 1, 1, 1});

    Rng rng(31);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        EquivariantOEB oeb = z2_oeb_1111(ang(rng), ang(rng));
        CHECK(oeb.type() == std::vector<std::size_t>{1, 1, 1, 1});
    }
}

TEST_CASE("z2 family with one 2-orbit and two fixed points") {
    // theta = pi gives orbit angle pi/2
    EquivariantOEB mid = z2_oeb_211(kPi, 0.0);
    CHECK(mid.type() == std::vector<std::size_t>{2, 1, 1});
    CHECK(contains_rotation(mid, Rotation::axis_angle(y_axis(), kPi / 2)));
    CHECK(contains_rotation(mid, Rotation::axis_angle({0, -1, 0}, kPi / 2)));
    CHECK(contains_rotation(mid, Rotation::axis_angle(z_axis(), kPi)));

    // theta = pi/2 is the boundary case with orbit angle pi
    EquivariantOEB edge = z2_oeb_211(kPi / 2, 0.0);
    CHECK(edge.type() == std::vector<std::size_t>{2, 1, 1});
    for (const auto& e : edge.elements)
        if (!e.is_identity() && std::abs(e.axis().x) < 1e-9)
            CHECK(e.angle() == doctest::Approx(kPi));

    CHECK_THROWS_AS(z2_oeb_211(kPi / 4, 0.0), RefusalError);

    Rng rng(32);
    std::uniform_real_distribution<double> th(kPi / 2, 3 * kPi / 2);
    std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        EquivariantOEB oeb = z2_oeb_211(th(rng), ph(rng));
        CHECK(oeb.type() == std::vector<std::size_t>{2, 1, 1});
    }
}

TEST_CASE("z2 boundary continuity: the (2,1,1) family converges at theta -> pi/2") {
    EquivariantOEB limit = z2_oeb_211(kPi / 2, 0.3);
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        EquivariantOEB near = z2_oeb_211(kPi / 2 + eps, 0.3);
        for (int i = 0; i < 4; ++i) {
            double best = 1e9;
            for (int j = 0; j < 4; ++j)
                best = std::min(best, ball_distance(near.elements[i], limit.elements[j]));
            CHECK(best < 50 * std::sqrt(eps));  // square-root regularity at the fold
        }
    }
    // The limit set is a rotated orthogonal triad plus the identity; it stays
    // in the closure of the family but is not itself a (1,1,1,1) member, so
    // only set convergence is asserted here.
}

TEST_CASE("z2 family with two 2-orbits") {
    EquivariantOEB fig_left = z2_oeb_22(kPi, 0.0);
    CHECK(fig_left.type() == std::vector<std::size_t>{2, 2});
    CHECK(contains_rotation(fig_left, Rotation::axis_angle(x_axis(), kPi / 2)));
    double s2 = 1.0 / std::sqrt(2.0);
    CHECK(contains_rotation(fig_left, Rotation::axis_angle({0, s2, s2}, kPi)));

    // Equal-angle member reproduces the tetrahedral-angle generators.
    EquivariantOEB fig_right = z2_oeb_22(2 * kPi / 3, kPi / 2);
    double u = 1.0 / std::sqrt(3.0);
    CHECK(contains_rotation(fig_right, Rotation::axis_angle({0, std::sqrt(2.0) * u, u}, 2 * kPi / 3)));
    CHECK(contains_rotation(fig_right, Rotation::axis_angle({std::sqrt(2.0) * u, 0, -u}, 2 * kPi / 3)));

    CHECK_THROWS_AS(z2_oeb_22(kPi / 4, 0.0), RefusalError);

    Rng rng(33);
    std::uniform_real_distribution<double> rr(kPi / 2, kPi);
    std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        EquivariantOEB oeb = z2_oeb_22(rr(rng), ph(rng), i % 2 == 0);
        CHECK(oeb.type() == std::vector<std::size_t>{2, 2});
    }
}

TEST_CASE("z3 family with a 3-orbit and a fixed point") {
    double psi0 = std::asin(std::sqrt(2.0 / 3.0));
    double r0 = 2 * std::asin(std::sqrt(2.0 / 3.0));

    EquivariantOEB planar = z3_oeb_31(kPi / 2, 0.0);
    CHECK(planar.type() == std::vector<std::size_t>{3, 1});
    CHECK(contains_rotation(planar, Rotation::axis_angle(x_axis(), r0)));
    CHECK(contains_rotation(planar, Rotation::axis_angle(z_axis(), kPi)));

    EquivariantOEB boundary = z3_oeb_31(psi0, 0.0);
    CHECK(contains_rotation(boundary, Rotation::identity()));
    double u = 1.0 / std::sqrt(3.0);
    CHECK(contains_rotation(boundary, Rotation::axis_angle({std::sqrt(2.0) * u, 0, u}, kPi)));

    EquivariantOEB generic = z3_oeb_31(1.0, 0.0);
    CHECK(generic.type() == std::vector<std::size_t>{3, 1});

    // The 1-orbit sits on the other side of the xy-plane from the 3-orbit.
    for (double psi : {psi0 + 0.05, 1.2, kPi - psi0 - 0.05}) {
        EquivariantOEB oeb = z3_oeb_31(psi, 0.4);
        double orbit_side = std::cos(psi);
        const Rotation& zpt = oeb.elements[0];
        if (std::abs(orbit_side) > 1e-6 && !zpt.is_identity() &&
            std::abs(zpt.angle() - kPi) > 1e-6)
            CHECK(zpt.axis().z * zpt.angle() * orbit_side < 0);
    }

    CHECK_THROWS_AS(z3_oeb_31(0.3, 0.0), RefusalError);

    Rng rng(34);
    std::uniform_real_distribution<double> ps(psi0, kPi - psi0);
    std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        EquivariantOEB oeb = z3_oeb_31(ps(rng), ph(rng));
        CHECK(oeb.type() == std::vector<std::size_t>{3, 1});
    }

    // Index action of the generator: a 3-cycle on the orbit.
    int gen = planar.group.group->generators()[0];
    int moved = 0;
    for (int i = 0; i < 4; ++i)
        if (planar.tau.apply(gen, i) != i) ++moved;
    CHECK(moved == 3);
}

TEST_CASE("z4 family") {
    EquivariantOEB oeb = z4_oeb_211(0.0, 0.0);
    CHECK(oeb.type() == std::vector<std::size_t>{2, 1, 1});
    int gen = oeb.group.group->generators()[0];
    // the generator transposes the two equatorial flips and fixes the rest
    int moved = 0;
    for (int i = 0; i < 4; ++i)
        if (oeb.tau.apply(gen, i) != i) ++moved;
    CHECK(moved == 2);

    Rng rng(35);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    for (int i = 0; i < 50; ++i)
        CHECK(z4_oeb_211(ang(rng), ang(rng)).type() == std::vector<std::size_t>{2, 1, 1});
}

TEST_CASE("discrete catalog counts and distinctness") {
    auto d2 = discrete_catalog("D2");
    CHECK(d2.size() == 12);
    std::map<std::string, int> by_type;
    for (const auto& e : d2) {
        auto t = e.type();
        std::string key;
        for (auto v : t) key += std::to_string(v);
        by_type[key]++;
    }
    CHECK(by_type["1111"] == 1);
    CHECK(by_type["211"] == 6);
    CHECK(by_type["22"] == 3);
    CHECK(by_type["4"] == 2);
    for (std::size_t i = 0; i < d2.size(); ++i)
        for (std::size_t j = i + 1; j < d2.size(); ++j)
            CHECK_FALSE(same_oeb_set(d2[i].elements, d2[j].elements));

    auto d4 = discrete_catalog("D4");
    CHECK(d4.size() == 4);
    auto tet = discrete_catalog("tetrahedral");
    CHECK(tet.size() == 2);
    CHECK_FALSE(same_oeb_set(tet[0].elements, tet[1].elements));
    for (const auto& e : tet)
        for (const auto& r : e.elements) CHECK(r.angle() == doctest::Approx(2 * kPi / 3));
    auto oct = discrete_catalog("octahedral");
    CHECK(oct.size() == 1);
    CHECK(oct[0].type() == std::vector<std::size_t>{3, 1});
}

TEST_CASE("restriction compatibility of discrete solutions") {
    // every D2 solution restricts to a valid Z2-equivariant basis
    RotationGroup d2 = standard_rotation_group("D2");
    for (const auto& e : discrete_catalog("D2")) {
        for (const auto& sub : enumerate_subgroups(*d2.group))
            if (sub.order() == 2) verify_oeb_under_subgroup(e.elements, d2, sub);
    }
    // every octahedral solution restricts to its D4 subgroups
    RotationGroup oct = standard_rotation_group("octahedral");
    for (const auto& e : discrete_catalog("octahedral"))
        for (const auto& sub : enumerate_subgroups(*oct.group))
            if (sub.order() == 8) verify_oeb_under_subgroup(e.elements, oct, sub);
    // every tetrahedral solution restricts to its Z3 subgroups
    RotationGroup tet = standard_rotation_group("tetrahedral");
    for (const auto& e : discrete_catalog("tetrahedral"))
        for (const auto& sub : enumerate_subgroups(*tet.group))
            if (sub.order() == 3) verify_oeb_under_subgroup(e.elements, tet, sub);
}

TEST_CASE("independent sweep enumerates the distinct dihedral-3 solutions") {
    // Any D3-equivariant solution restricts to the Z3 family; the on-axis
    // point must be flip-stable, forcing the two case shapes below. The
    // azimuth freedom is then scanned and refined independently of the
    // catalog's claimed positions.
    RotationGroup d3 = standard_rotation_group("D3");
    double r0 = 2 * std::asin(std::sqrt(2.0 / 3.0));
    double psi0 = std::asin(std::sqrt(2.0 / 3.0));

    auto candidate = [&](int shape, double phi) {
        std::array<Rotation, 4> els{Rotation::identity(), Rotation::identity(),
                                    Rotation::identity(), Rotation::identity()};
        double polar = (shape == 0) ? kPi / 2 : psi0;
        double angle = (shape == 0) ? r0 : kPi;
        for (int k = 0; k < 3; ++k) {
            double az = phi + 2 * kPi * k / 3;
            els[k + 1] = Rotation::axis_angle({std::sin(polar) * std::cos(az),
                                               std::sin(polar) * std::sin(az), std::cos(polar)},
                                              angle);
        }
        if (shape == 0) els[0] = Rotation::axis_angle(z_axis(), kPi);
        return els;
    };
    auto defect = [&](int shape, double phi) {
        auto els = candidate(shape, phi);
        double worst = 0.0;
        for (std::size_t g = 0; g < d3.group->order(); ++g) {
            Rotation ginv = d3.rep.image(int(g)).inverse();
            for (const auto& e : els) {
                double best = 1e9;
                for (const auto& f : els)
                    best = std::min(best, ball_distance(conjugate(ginv, e), f));
                worst = std::max(worst, best);
            }
        }
        return worst;
    };

    std::vector<std::array<Rotation, 4>> solutions;
    for (int shape : {0, 1}) {
        const int grid = 4000;
        for (int i = 0; i < grid; ++i) {
            double a = (2 * kPi / 3) * i / grid;
            double b = (2 * kPi / 3) * (i + 1) / grid;
            if (defect(shape, a) > 0.02 && defect(shape, b) > 0.02 &&
                defect(shape, 0.5 * (a + b)) > 0.02)
                continue;
            // ternary search for the local minimum of the defect
            for (int it = 0; it < 200; ++it) {
                double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
                if (defect(shape, m1) < defect(shape, m2))
                    b = m2;
                else
                    a = m1;
            }
            double star = 0.5 * (a + b);
            if (defect(shape, star) > 1e-9) continue;
            auto els = candidate(shape, star);
            verify_oeb(els, d3);  // must pass in full
            bool seen = false;
            for (const auto& s : solutions) seen = seen || same_oeb_set(s, els, 1e-5);
            if (!seen) solutions.push_back(els);
        }
    }

    // Four distinct solution sets exist (two per case shape).
    CHECK(solutions.size() == 4);

    // They are exactly the catalog entries.
    auto cat = discrete_catalog("D3");
    CHECK(cat.size() == solutions.size());
    for (const auto& s : solutions) {
        bool matched = false;
        for (const auto& e : cat) matched = matched || same_oeb_set(s, e.elements, 1e-5);
        CHECK(matched);
    }
}

TEST_CASE("family closure matches the stated generator permutations") {
    // Z3: the generator 3-cycles the triangle in the direction of rotation.
    EquivariantOEB oeb = z3_oeb_31(1.1, 0.2);
    int gen = oeb.group.group->generators()[0];
    // elements 1,2,3 are the triangle at azimuth offsets 0, 120, 240 degrees;
    // conjugating by the generator's inverse rotates azimuths by -120.
    CHECK(oeb.tau.apply(gen, 0) == 0);
    CHECK(oeb.tau.apply(gen, 1) == 3);
    CHECK(oeb.tau.apply(gen, 2) == 1);
    CHECK(oeb.tau.apply(gen, 3) == 2);
}

TEST_CASE("nonexistence certificates") {
    for (const char* tag : {"Z5", "Z6", "Z8", "D7"}) {
        RefusalCertificate cert = nonexistence_certificate(tag, 9, 3000);
        CHECK(cert.passes == 0);
        CHECK(cert.candidates_tested > 0);
        CHECK_FALSE(cert.reason.empty());
    }
    RefusalCertificate ico = nonexistence_certificate("icosahedral", 9, 500);
    CHECK(ico.passes == 0);
    CHECK(ico.reason.find("D5") != std::string::npos);
    CHECK_THROWS_AS(nonexistence_certificate("Z3", 1, 10), SchemaError);
}

TEST_SUITE_END();
