#pragma once

#include <map>
#include <string>

#include "equitel/gset.hpp"
#include "equitel/representation.hpp"

namespace equitel {

// Four pairwise-orthogonal rotations closed under conjugation by the image
// of a rotation representation, together with the induced index action.
struct EquivariantOEB {
    RotationGroup group;              // acting group with its SO(3) images
    std::array<Rotation, 4> elements;
    GSet tau;                         // right action on {0,1,2,3}
    std::string family_tag;
    std::map<std::string, double> parameters;

    std::vector<std::size_t> type() const { return orbit_type(tau); }
};

// Full check: pairwise orthogonality, closure under conjugation (ball
// distance < 1e-9 with antipodal identification), tau a right action.
// Throws VerificationError naming the violated pair or element.
EquivariantOEB verify_oeb(const std::array<Rotation, 4>& elements, const RotationGroup& group,
                          const std::string& family_tag = "",
                          const std::map<std::string, double>& parameters = {});

// Same check against a subgroup of the acting group.
EquivariantOEB verify_oeb_under_subgroup(const std::array<Rotation, 4>& elements,
                                         const RotationGroup& group, const Subgroup& h);

// Standard embeddings: cyclic axis z, dihedral flip axis x, tetrahedral
// 3-fold axes through (+-1,+-1,+-1)/sqrt(3).
RotationGroup standard_rotation_group(const std::string& tag);

// Continuous families of Z2/Z3/Z4-equivariant bases. Angles in radians; phi
// rotates the whole configuration about the z-axis.
EquivariantOEB z2_oeb_1111(double theta_z, double phi);
EquivariantOEB z2_oeb_211(double theta, double phi);       // theta in [pi/2, 3pi/2]
EquivariantOEB z2_oeb_22(double r2, double phi, bool mirror = false);  // r2 in [pi/2, pi]
EquivariantOEB z3_oeb_31(double psi, double phi);          // psi in [asin(sqrt(2/3)), pi - ...]
EquivariantOEB z4_oeb_211(double theta_z, double phi);

// The isolated solutions for D2, D3, D4, tetrahedral (A4), octahedral (S4).
std::vector<EquivariantOEB> discrete_catalog(const std::string& tag);

// Structured refusal for the rows without solutions (Zn>=5, Dn>=5,
// icosahedral), with an optional randomized sanity search (not a proof).
struct RefusalCertificate {
    std::string tag;
    std::string reason;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t candidates_tested = 0;
    std::size_t passes = 0;  // must stay 0
};

RefusalCertificate nonexistence_certificate(const std::string& tag, std::uint64_t seed = 1,
                                            std::size_t trials = 100000);

}  // namespace equitel
