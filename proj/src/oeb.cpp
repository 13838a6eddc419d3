#include "equitel/oeb.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace equitel {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 xy_axis(double azimuth) { return {std::cos(azimuth), std::sin(azimuth), 0.0}; }

// Solve A cos(z/2) + B sin(z/2) = 0 for z in (-pi, pi] by bracketed
// bisection; this is the orthogonality equation of a z-axis rotation against
// an orbit member with axis polar cosine `axis_dot` and angle `r_ang`.
double solve_z_axis_height(double r_ang, double axis_dot) {
    double a = std::cos(r_ang / 2.0);
    double b = std::sin(r_ang / 2.0) * axis_dot;
    if (std::abs(a) < kRootResidual) return 0.0;
    if (std::abs(b) < kRootResidual) return kPi;
    auto f = [&](double z) { return a * std::cos(z / 2.0) + b * std::sin(z / 2.0); };
    double lo = (b > 0) ? -kPi : 0.0;
    double hi = (b > 0) ? 0.0 : kPi;
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (std::abs(fm) < kRootResidual) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Conjugate every element of a configuration by Rz(phi) (and optionally
// mirror through the xy-plane, a symmetry of all the defining equations).
std::array<Rotation, 4> place(std::array<Rotation, 4> els, double phi, bool mirror = false) {
    Rotation spin = Rotation::axis_angle(z_axis(), phi);
    for (auto& r : els) {
        Vec3 ax = r.axis();
        if (mirror && !r.is_identity(kTightTol)) ax = {ax.x, ax.y, -ax.z};
        if (!r.is_identity(kTightTol)) r = Rotation::axis_angle(spin.apply(ax), r.angle());
    }
    return els;
}

std::string fmt_type(const std::vector<std::size_t>& t) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << ')';
    return out.str();
}

}  // namespace

EquivariantOEB verify_oeb(const std::array<Rotation, 4>& elements, const RotationGroup& group,
                          const std::string& family_tag,
                          const std::map<std::string, double>& parameters) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!are_orthogonal(elements[i], elements[j])) {
                std::ostringstream msg;
                msg << "orthogonality failure between elements " << i << " and " << j
                    << " (composite angle " << composite_angle(elements[i], elements[j]) << ")";
                throw VerificationError(msg.str());
            }

    const FiniteGroup& g = *group.group;
    GSet tau;
    tau.group = &g;
    tau.side = GSet::Side::Right;
    tau.points = {"0", "1", "2", "3"};
    tau.act.assign(g.order(), std::vector<int>(4, -1));
    for (std::size_t x = 0; x < g.order(); ++x) {
        Rotation ginv = group.rep.image(int(x)).inverse();
        for (int i = 0; i < 4; ++i) {
            Rotation c = conjugate(ginv, elements[i]);
            int match = -1;
            for (int j = 0; j < 4; ++j)
                if (ball_distance(c, elements[j]) < 1e-6) {
                    if (match >= 0) throw VerificationError("ambiguous conjugation target");
                    match = j;
                }
            if (match < 0 || ball_distance(c, elements[match]) > 1e-9) {
                std::ostringstream msg;
                msg << "closure failure: conjugating element " << i << " by group element '"
                    << g.element_name(int(x)) << "' leaves the set";
                throw VerificationError(msg.str());
            }
            tau.act[x][i] = match;
        }
    }
    tau.validate();

    EquivariantOEB oeb{group, elements, std::move(tau), family_tag, parameters};
    return oeb;
}

EquivariantOEB verify_oeb_under_subgroup(const std::array<Rotation, 4>& elements,
                                         const RotationGroup& group, const Subgroup& h) {
    RotationGroup sub;
    sub.group = std::make_shared<FiniteGroup>(h.as_group(group.group->name() + "_sub"));
    sub.rep.group = sub.group.get();
    for (int m : h.members) sub.rep.images.push_back(group.rep.images[m]);
    sub.rep.validate();
    return verify_oeb(elements, sub);
}

RotationGroup standard_rotation_group(const std::string& tag) {
    auto rz = [](double a) { return Rotation::axis_angle(z_axis(), a); };
    Rotation flip = Rotation::axis_angle(x_axis(), kPi);
    Rotation tet3 = Rotation::axis_angle({1, 1, 1}, 2 * kPi / 3);
    if (tag == "trivial" || tag == "Z1")
        return build_rotation_group("Z1", {Rotation::identity()});
    if (tag == "tetrahedral" || tag == "A4")
        return build_rotation_group("tetrahedral", {rz(kPi), tet3});
    if (tag == "octahedral" || tag == "S4")
        return build_rotation_group("octahedral", {rz(kPi / 2), tet3});
    if (tag == "icosahedral" || tag == "A5") {
        double phi_g = (1.0 + std::sqrt(5.0)) / 2.0;
        Rotation five = Rotation::axis_angle({0.0, 1.0, phi_g}, 2 * kPi / 5);
        return build_rotation_group("icosahedral", {five, rz(kPi)});
    }
    if (tag.size() >= 2 && (tag[0] == 'Z' || tag[0] == 'C')) {
        int n = std::stoi(tag.substr(1));
        return build_rotation_group(tag, {rz(2 * kPi / n)});
    }
    if (tag.size() >= 2 && tag[0] == 'D') {
        int n = std::stoi(tag.substr(1));
        return build_rotation_group(tag, {rz(2 * kPi / n), flip});
    }
    throw SchemaError("unknown rotation group tag: " + tag);
}

EquivariantOEB z2_oeb_1111(double theta_z, double phi) {
    Rotation zrot = Rotation::axis_angle(z_axis(), theta_z);
    std::array<Rotation, 4> els{zrot, orthogonal_partner_on_axis(zrot),
                                Rotation::axis_angle(xy_axis(phi), kPi),
                                Rotation::axis_angle(xy_axis(phi + kPi / 2), kPi)};
    return verify_oeb(els, standard_rotation_group("Z2"), "Z2-(1,1,1,1)",
                      {{"theta_z", theta_z}, {"phi", phi}});
}

EquivariantOEB z2_oeb_211(double theta, double phi) {
    if (theta < kPi / 2 - 1e-12 || theta > 3 * kPi / 2 + 1e-12)
        throw RefusalError("no solution in family: the pair angle must lie in [pi/2, 3pi/2]");
    double c = std::cos(theta);
    double inner = c / (c - 1.0);
    double r_ang = 2.0 * std::acos(std::sqrt(std::clamp(inner, 0.0, 1.0)));
    double half = theta / 2.0;
    Vec3 plus{0.0, std::sin(half), std::cos(half)};
    Vec3 minus{0.0, -std::sin(half), std::cos(half)};
    double z1 = solve_z_axis_height(r_ang, std::cos(half));
    std::array<Rotation, 4> els{Rotation::axis_angle(z_axis(), z1),
                                Rotation::axis_angle(x_axis(), kPi),
                                Rotation::axis_angle(plus, r_ang),
                                Rotation::axis_angle(minus, r_ang)};
    return verify_oeb(place(els, phi), standard_rotation_group("Z2"), "Z2-(2,1,1)",
                      {{"theta", theta}, {"phi", phi}});
}

EquivariantOEB z2_oeb_22(double r2, double phi, bool mirror) {
    if (r2 < kPi / 2 - 1e-12 || r2 > kPi + 1e-12)
        throw RefusalError("no solution in family: the orbit angle must lie in [pi/2, pi]");
    double c2 = std::cos(r2 / 2.0);
    double r1 = 2.0 * std::acos(std::sqrt(std::clamp(0.5 - c2 * c2, 0.0, 1.0)));
    auto central_angle = [](double r) {
        double t = std::tan(r / 2.0);
        return std::acos(std::clamp(-1.0 / (t * t), -1.0, 1.0));
    };
    double th1 = central_angle(r1);            // in [pi/2, pi]; orbit above
    double th2 = 2 * kPi - central_angle(r2);  // in [pi, 3pi/2]; orbit below
    std::array<Rotation, 4> els{
        Rotation::axis_angle({std::sin(th1 / 2), 0.0, std::cos(th1 / 2)}, r1),
        Rotation::axis_angle({-std::sin(th1 / 2), 0.0, std::cos(th1 / 2)}, r1),
        Rotation::axis_angle({0.0, std::sin(th2 / 2), std::cos(th2 / 2)}, r2),
        Rotation::axis_angle({0.0, -std::sin(th2 / 2), std::cos(th2 / 2)}, r2)};
    return verify_oeb(place(els, phi, mirror), standard_rotation_group("Z2"), "Z2-(2,2)",
                      {{"r2", r2}, {"phi", phi}, {"mirror", mirror ? 1.0 : 0.0}});
}

EquivariantOEB z3_oeb_31(double psi, double phi) {
    double lo = std::asin(std::sqrt(2.0 / 3.0));
    if (psi < lo - 1e-12 || psi > kPi - lo + 1e-12)
        throw RefusalError("no solution in family: polar angle outside the soluble range");
    double s = std::sqrt(2.0) / (std::sqrt(3.0) * std::sin(psi));
    double r_ang = 2.0 * std::asin(std::clamp(s, 0.0, 1.0));
    std::array<Rotation, 4> els{Rotation::identity(), Rotation::identity(),
                                Rotation::identity(), Rotation::identity()};
    for (int k = 0; k < 3; ++k) {
        double az = 2 * kPi * k / 3.0;
        Vec3 ax{std::sin(psi) * std::cos(az), std::sin(psi) * std::sin(az), std::cos(psi)};
        els[k + 1] = Rotation::axis_angle(ax, r_ang);
    }
    // Signed height of the on-axis point; lands on the opposite side of the
    // xy-plane from the 3-orbit.
    double z1 = solve_z_axis_height(r_ang, std::cos(psi));
    els[0] = Rotation::axis_angle(z_axis(), z1);
    return verify_oeb(place(els, phi), standard_rotation_group("Z3"), "Z3-(3,1)",
                      {{"psi", psi}, {"phi", phi}});
}

EquivariantOEB z4_oeb_211(double theta_z, double phi) {
    Rotation zrot = Rotation::axis_angle(z_axis(), theta_z);
    std::array<Rotation, 4> els{zrot, orthogonal_partner_on_axis(zrot),
                                Rotation::axis_angle(xy_axis(phi), kPi),
                                Rotation::axis_angle(xy_axis(phi + kPi / 2), kPi)};
    return verify_oeb(els, standard_rotation_group("Z4"), "Z4-(2,1,1)",
                      {{"theta_z", theta_z}, {"phi", phi}});
}

std::vector<EquivariantOEB> discrete_catalog(const std::string& tag_in) {
    std::string tag = tag_in;
    if (tag == "A4") tag = "tetrahedral";
    if (tag == "S4") tag = "octahedral";

    auto rot = [](const Vec3& ax, double ang) { return Rotation::axis_angle(ax, ang); };
    const Rotation id = Rotation::identity();
    const double s2 = 1.0 / std::sqrt(2.0);
    const Rotation pz = rot(z_axis(), kPi), px = rot(x_axis(), kPi), py = rot(y_axis(), kPi);

    std::vector<EquivariantOEB> out;
    auto add = [&](const RotationGroup& g, const std::array<Rotation, 4>& els,
                   const std::string& label) {
        EquivariantOEB oeb = verify_oeb(els, g, label);
        std::string want = label.substr(label.find('('));
        want = want.substr(0, want.find(')') + 1);
        if (fmt_type(oeb.type()) != want)
            throw VerificationError("catalog entry " + label + " has orbit type " +
                                    fmt_type(oeb.type()));
        out.push_back(std::move(oeb));
    };

    if (tag == "D2") {
        RotationGroup d2 = standard_rotation_group("D2");
        add(d2, {id, pz, px, py}, "D2-(1,1,1,1)");
        add(d2, {rot(z_axis(), kPi / 2), rot({0, 0, -1}, kPi / 2), px, py}, "D2-(2,1,1) quarter-z");
        add(d2, {id, pz, rot({s2, s2, 0}, kPi), rot({s2, -s2, 0}, kPi)}, "D2-(2,1,1) diagonal");
        add(d2, {pz, px, rot(y_axis(), kPi / 2), rot({0, -1, 0}, kPi / 2)},
            "D2-(2,1,1) pair-about-y");
        add(d2, {pz, py, rot(x_axis(), kPi / 2), rot({-1, 0, 0}, kPi / 2)},
            "D2-(2,1,1) pair-about-x");
        add(d2, {id, px, rot({0, s2, s2}, kPi), rot({0, -s2, s2}, kPi)}, "D2-(2,1,1) tilted-yz");
        add(d2, {id, py, rot({s2, 0, s2}, kPi), rot({-s2, 0, s2}, kPi)}, "D2-(2,1,1) tilted-xz");
        add(d2,
            {rot(x_axis(), kPi / 2), rot({-1, 0, 0}, kPi / 2), rot({0, s2, s2}, kPi),
             rot({0, s2, -s2}, kPi)},
            "D2-(2,2) quarter-x");
        add(d2,
            {rot(y_axis(), kPi / 2), rot({0, -1, 0}, kPi / 2), rot({s2, 0, s2}, kPi),
             rot({s2, 0, -s2}, kPi)},
            "D2-(2,2) quarter-y");
        add(d2,
            {rot(z_axis(), kPi / 2), rot({0, 0, -1}, kPi / 2), rot({s2, s2, 0}, kPi),
             rot({s2, -s2, 0}, kPi)},
            "D2-(2,2) quarter-z");
        double t = 2 * kPi / 3, u = 1.0 / std::sqrt(3.0);
        add(d2,
            {rot({u, u, u}, t), rot({u, -u, -u}, t), rot({-u, u, -u}, t), rot({-u, -u, u}, t)},
            "D2-(4) tetrahedron");
        add(d2,
            {rot({-u, -u, -u}, t), rot({-u, u, u}, t), rot({u, -u, u}, t), rot({u, u, -u}, t)},
            "D2-(4) dual tetrahedron");
        return out;
    }

    if (tag == "D3") {
        RotationGroup d3 = standard_rotation_group("D3");
        double r0 = 2.0 * std::asin(std::sqrt(2.0 / 3.0));
        double psi0 = std::asin(std::sqrt(2.0 / 3.0));
        auto triangle = [&](double polar, double angle, double phase) {
            std::array<Rotation, 4> els{id, id, id, id};
            for (int k = 0; k < 3; ++k) {
                double az = phase + 2 * kPi * k / 3.0;
                els[k + 1] = rot({std::sin(polar) * std::cos(az),
                                  std::sin(polar) * std::sin(az), std::cos(polar)},
                                 angle);
            }
            return els;
        };
        // on-axis point r(pi, z); planar triangle with a vertex on +-x
        auto a = triangle(kPi / 2, r0, 0.0);
        a[0] = pz;
        add(d3, a, "D3-(3,1) vertex-on-flip");
        auto b = triangle(kPi / 2, r0, kPi / 3);
        b[0] = pz;
        add(d3, b, "D3-(3,1) vertex-opposite-flip");
        // on-axis point = identity; tripod of pi-rotations, mirror-paired
        add(d3, triangle(psi0, kPi, kPi / 6), "D3-(3,1) tripod-a");
        add(d3, triangle(psi0, kPi, kPi / 2), "D3-(3,1) tripod-b");
        return out;
    }

    if (tag == "D4") {
        RotationGroup d4 = standard_rotation_group("D4");
        add(d4, {id, pz, px, py}, "D4-(2,1,1) axes");
        add(d4, {id, pz, rot({s2, s2, 0}, kPi), rot({s2, -s2, 0}, kPi)}, "D4-(2,1,1) diagonal");
        add(d4, {rot(z_axis(), kPi / 2), rot({0, 0, -1}, kPi / 2), px, py}, "D4-(2,2) axes");
        add(d4,
            {rot(z_axis(), kPi / 2), rot({0, 0, -1}, kPi / 2), rot({s2, s2, 0}, kPi),
             rot({s2, -s2, 0}, kPi)},
            "D4-(2,2) diagonal");
        return out;
    }

    if (tag == "tetrahedral") {
        RotationGroup tet = standard_rotation_group("tetrahedral");
        double t = 2 * kPi / 3, u = 1.0 / std::sqrt(3.0);
        add(tet,
            {rot({u, u, u}, t), rot({u, -u, -u}, t), rot({-u, u, -u}, t), rot({-u, -u, u}, t)},
            "tetrahedral-(4) vertices");
        add(tet,
            {rot({-u, -u, -u}, t), rot({-u, u, u}, t), rot({u, -u, u}, t), rot({u, u, -u}, t)},
            "tetrahedral-(4) dual");
        return out;
    }

    if (tag == "octahedral") {
        RotationGroup oct = standard_rotation_group("octahedral");
        add(oct, {id, px, py, pz}, "octahedral-(3,1)");
        return out;
    }

    throw SchemaError("no discrete catalog for tag: " + tag_in);
}

RefusalCertificate nonexistence_certificate(const std::string& tag, std::uint64_t seed,
                                            std::size_t trials) {
    RefusalCertificate cert;
    cert.tag = tag;
    cert.seed = seed;
    cert.trials = trials;

    RotationGroup group;
    if (tag == "icosahedral" || tag == "A5") {
        group = standard_rotation_group("icosahedral");
        cert.reason =
            "the icosahedral rotation group contains a D5 subgroup, and no D5-equivariant "
            "orthogonal error basis exists; a fortiori none exists for the full group";
    } else if (tag.size() >= 2 && tag[0] == 'D') {
        int n = std::stoi(tag.substr(1));
        if (n < 5) throw SchemaError("dihedral refusals start at D5");
        group = standard_rotation_group(tag);
        cert.reason = "any D" + std::to_string(n) +
                      "-equivariant orthogonal error basis would restrict to a Z" +
                      std::to_string(n) + "-equivariant one, and none exists for n >= 5";
    } else if (tag.size() >= 2 && tag[0] == 'Z') {
        int n = std::stoi(tag.substr(1));
        if (n < 5) throw SchemaError("cyclic refusals start at Z5");
        group = standard_rotation_group(tag);
        if (n % 2 == 1)
            cert.reason = "for odd n >= 5 the conjugation orbits have size 1 (on-axis) or n > 4, "
                          "so all four points would be on the rotation axis, which carries at "
                          "most one orthogonal pair";
        else
            cert.reason = "for even n >= 6 the orbit sizes are 1, n/2 (boundary pi-rotations in "
                          "the equatorial plane, mutually non-orthogonal axes) and n, leaving no "
                          "way to assemble four pairwise-orthogonal points";
    } else {
        throw SchemaError("no nonexistence certificate for tag: " + tag);
    }

    // Randomized sanity search: sample small seed sets, close them under
    // conjugation and verify any 4-point configuration that appears. This is
    // a heuristic check, not a proof.
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const FiniteGroup& g = *group.group;
    auto orbit_of = [&](const Rotation& r) {
        std::vector<Rotation> orb;
        for (std::size_t x = 0; x < g.order(); ++x) {
            Rotation c = conjugate(group.rep.image(int(x)).inverse(), r);
            bool seen = false;
            for (const auto& o : orb) seen = seen || ball_distance(o, c) < 1e-7;
            if (!seen) {
                orb.push_back(c);
                if (orb.size() > 4) break;  // candidates need exactly 4 points
            }
        }
        return orb;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rotation> pts;
        int nseeds = 1 + int(unit(rng) * 4);
        for (int s = 0; s < nseeds && pts.size() <= 4; ++s) {
            double mode = unit(rng);
            Rotation r;
            if (mode < 0.4)
                r = Rotation::axis_angle(z_axis(), unit(rng) * kPi);  // on-axis
            else if (mode < 0.7)
                r = Rotation::axis_angle(xy_axis(unit(rng) * 2 * kPi), kPi);  // boundary equator
            else
                r = random_rotation(rng);
            for (const auto& o : orbit_of(r)) {
                bool seen = false;
                for (const auto& p : pts) seen = seen || ball_distance(p, o) < 1e-7;
                if (!seen) pts.push_back(o);
            }
        }
        if (pts.size() != 4) continue;
        ++cert.candidates_tested;
        try {
            verify_oeb({pts[0], pts[1], pts[2], pts[3]}, group);
            ++cert.passes;
        } catch (const VerificationError&) {
        }
    }
    if (cert.passes != 0)
        throw VerificationError("nonexistence sanity search found a candidate for " + tag);
    return cert;
}

}  // namespace equitel
