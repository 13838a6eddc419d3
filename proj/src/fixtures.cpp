#include "equitel/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace equitel {

namespace {
constexpr double kPi = std::numbers::pi;
const cxd kOmega = std::exp(cxd(0, 2 * kPi / 3));
}  // namespace

CyclicArrowsExample cyclic_arrows_example() {
    CyclicArrowsExample ex;
    FiniteGroup z3 = FiniteGroup::preset("Z3");
    // Rename elements to the conventional e, a, a2.
    {
        std::vector<std::string> names(3);
        int a = z3.generators()[0];
        names[z3.identity()] = "e";
        names[a] = "a";
        names[z3.mul(a, a)] = "a2";
        ex.group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(
            "Z3", names, z3.table(), z3.generators(), z3.generator_words()));
    }
    const FiniteGroup& g = *ex.group;
    int a = g.element_by_name("a").value();

    ex.rho = Representation::from_generator_images(g, {ComplexMatrix::diagonal({1.0, kOmega})});

    const double r3 = 1.0 / std::sqrt(3.0);
    const cxd w = kOmega, w2 = kOmega * kOmega, s2 = std::sqrt(2.0);
    ex.ueb_matrices = {
        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, w}}),
        ComplexMatrix::from_rows({{r3, r3 * s2 * w2}, {r3 * s2 * w2, -r3 * w}}),
        ComplexMatrix::from_rows({{r3, r3 * s2 * w}, {r3 * s2, -r3 * w}}),
        ComplexMatrix::from_rows({{r3, r3 * s2}, {r3 * s2 * w, -r3 * w}}),
    };
    ex.eueb = verify_equivariant(verify_ueb(ex.ueb_matrices), ex.rho);
    ex.twist = pauli_x();

    ex.arrows = {
        Vec3{1, 1, 1}.normalized(),
        Vec3{1, -1, -1}.normalized(),
        Vec3{-1, 1, -1}.normalized(),
        Vec3{-1, -1, 1}.normalized(),
    };
    // Left action of the generator on arrow indices: (0)(1 2 3).
    ex.arrow_action.group = ex.group.get();
    ex.arrow_action.side = GSet::Side::Left;
    ex.arrow_action.points = {"v0", "v1", "v2", "v3"};
    ex.arrow_action.act.assign(3, {0, 1, 2, 3});
    ex.arrow_action.act[a] = {0, 2, 3, 1};
    int aa = g.mul(a, a);
    ex.arrow_action.act[aa] = {0, 3, 1, 2};
    ex.arrow_action.validate();

    // The stated permutation is what the rotation about v0 actually does.
    Rotation rot_a = Rotation::axis_angle(ex.arrows[0], 2 * kPi / 3);
    for (int i = 0; i < 4; ++i) {
        Vec3 moved = rot_a.apply(ex.arrows[i]);
        int j = ex.arrow_action.act[a][i];
        if ((moved - ex.arrows[j]).norm() > 1e-9)
            throw VerificationError("arrow fixture does not match the rotation action");
    }
    return ex;
}

MatrixGroup quaternion_unit_group() {
    return build_matrix_group("Q8", {pauli_z() * cxd(0, 1), pauli_x() * cxd(0, 1)});
}

MatrixGroup binary_dihedral_16() {
    cxd e8 = std::exp(cxd(0, kPi / 4));
    return build_matrix_group(
        "2D4", {ComplexMatrix::diagonal({std::conj(e8), e8}), pauli_x() * cxd(0, 1)});
}

MatrixGroup binary_tetrahedral() {
    ComplexMatrix u = su2_lift(Rotation::axis_angle({1, 1, 1}, 2 * kPi / 3));
    return build_matrix_group("2T", {pauli_z() * cxd(0, 1), u});
}

MatrixGroup binary_octahedral() {
    ComplexMatrix u = su2_lift(Rotation::axis_angle({1, 1, 1}, 2 * kPi / 3));
    ComplexMatrix b = su2_lift(Rotation::axis_angle(z_axis(), kPi / 2));
    return build_matrix_group("2O", {b, u}, 128);
}

MatrixGroup dihedral_spin_rep(int n) {
    // The real 2-dim dihedral representation is projectively faithful only
    // for odd n (for even n the plane rotation by pi is central), so this
    // fixture exists for n in {1, 3}; the even images go through the binary
    // covers instead.
    if (n != 1 && n != 3) throw SchemaError("dihedral spin fixture exists for n = 1, 3 only");
    // Conjugated so the Bloch image is the standard embedding (cyclic axis z,
    // flip axis x).
    double t = 2 * kPi / n;
    ComplexMatrix rot = ComplexMatrix::from_rows(
        {{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}});
    ComplexMatrix ref = ComplexMatrix::diagonal({1.0, -1.0});
    ComplexMatrix w = su2_lift(Rotation::axis_angle({1, 1, 1}, 2 * kPi / 3));
    ComplexMatrix wdag = w.dagger();
    return build_matrix_group("D" + std::to_string(n) + "spin",
                              {w * rot * wdag, w * ref * wdag});
}

std::vector<CatalogUebEntry> catalog_uebs() {
    std::vector<CatalogUebEntry> out;

    auto from_matrix_group = [&](const std::string image_class, const std::string& label,
                                 MatrixGroup mg, const std::array<Rotation, 4>& elements) {
        std::vector<ComplexMatrix> lifted;
        for (const auto& r : elements) lifted.push_back(su2_lift(r));
        CatalogUebEntry e;
        e.image_class = image_class;
        e.label = label;
        e.group = mg.group;
        e.rep = mg.rep;
        e.eueb = verify_equivariant(verify_ueb(lifted), e.rep);
        out.push_back(std::move(e));
    };

    // trivial image: any basis works; use the Pauli basis under Z1.
    {
        MatrixGroup z1 = build_matrix_group("Z1m", {ComplexMatrix::identity(2)});
        from_matrix_group("trivial", "trivial-(1,1,1,1)", z1,
                          {Rotation::identity(), Rotation::axis_angle(x_axis(), kPi),
                           Rotation::axis_angle(y_axis(), kPi), Rotation::axis_angle(z_axis(), kPi)});
    }
    // cyclic images lift directly through diagonal representations
    {
        MatrixGroup z2 = build_matrix_group("Z2m", {ComplexMatrix::diagonal({1.0, -1.0})});
        from_matrix_group("Z2", "Z2-(1,1,1,1)", z2, z2_oeb_1111(0.7, 0.3).elements);
        from_matrix_group("Z2", "Z2-(2,1,1)", z2, z2_oeb_211(2.2, 0.4).elements);
        from_matrix_group("Z2", "Z2-(2,2)", z2, z2_oeb_22(2.0, 0.9).elements);

        MatrixGroup z3 = build_matrix_group("Z3m", {ComplexMatrix::diagonal({1.0, kOmega})});
        from_matrix_group("Z3", "Z3-(3,1)", z3, z3_oeb_31(1.2, 0.5).elements);

        MatrixGroup z4 = build_matrix_group("Z4m", {ComplexMatrix::diagonal({1.0, cxd(0, 1)})});
        from_matrix_group("Z4", "Z4-(2,1,1)", z4, z4_oeb_211(1.1, 0.2).elements);
    }
    // dihedral and polyhedral images
    MatrixGroup q8 = quaternion_unit_group();
    for (const auto& oeb : discrete_catalog("D2"))
        from_matrix_group("D2", oeb.family_tag, q8, oeb.elements);
    MatrixGroup d3 = dihedral_spin_rep(3);
    for (const auto& oeb : discrete_catalog("D3"))
        from_matrix_group("D3", oeb.family_tag, d3, oeb.elements);
    MatrixGroup bd4 = binary_dihedral_16();
    for (const auto& oeb : discrete_catalog("D4"))
        from_matrix_group("D4", oeb.family_tag, bd4, oeb.elements);
    MatrixGroup bt = binary_tetrahedral();
    for (const auto& oeb : discrete_catalog("tetrahedral"))
        from_matrix_group("tetrahedral", oeb.family_tag, bt, oeb.elements);
    MatrixGroup bo = binary_octahedral();
    for (const auto& oeb : discrete_catalog("octahedral"))
        from_matrix_group("octahedral", oeb.family_tag, bo, oeb.elements);
    return out;
}

}  // namespace equitel
