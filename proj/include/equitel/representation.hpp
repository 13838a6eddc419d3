#pragma once

#include <memory>
#include <optional>

#include "equitel/group.hpp"
#include "equitel/matrix.hpp"
#include "equitel/rotation.hpp"

namespace equitel {

// Unitary representation: one matrix per group element, validated against
// the multiplication table.
struct Representation {
    const FiniteGroup* group = nullptr;
    std::vector<ComplexMatrix> images;

    std::size_t dim() const { return images.empty() ? 0 : images.front().rows(); }
    const ComplexMatrix& image(int g) const { return images[g]; }
    std::vector<cxd> character() const;  // trace per element

    void validate(double tol = kTol) const;

    static Representation from_generator_images(const FiniteGroup& g,
                                                const std::vector<ComplexMatrix>& gen_images);
    static Representation trivial(const FiniteGroup& g, std::size_t dim);
    // Permutation matrices of the group's permutation realization.
    static Representation permutation(const FiniteGroup& g);
};

Representation dual_rep(const Representation& rho);
Representation tensor_rep(const Representation& a, const Representation& b);
// Multiply every image by a 1-dimensional character value.
Representation twist_by_character(const Representation& rho, const std::vector<cxd>& chi);
Representation restrict_rep(const Representation& rho, const Subgroup& h, const FiniteGroup& h_group);

// Finite subgroup of U(d) generated by explicit matrices; the group elements
// are the matrices themselves, discovered by closure (deterministic BFS).
// The group is held by shared pointer so bundles can be copied freely while
// the representation keeps a stable group reference.
struct MatrixGroup {
    std::shared_ptr<const FiniteGroup> group;
    Representation rep;  // inclusion representation
};

MatrixGroup build_matrix_group(const std::string& name, const std::vector<ComplexMatrix>& gens,
                               std::size_t size_cap = 1024);

// Homomorphism into SO(3) given element-wise.
struct RotationRep {
    const FiniteGroup* group = nullptr;
    std::vector<Rotation> images;

    const Rotation& image(int g) const { return images[g]; }
    void validate(double tol = kTol) const;

    static RotationRep from_generator_images(const FiniteGroup& g,
                                             const std::vector<Rotation>& gen_images);
};

// Bloch-sphere rotation of a 2x2 unitary (strip the determinant phase,
// convert the SU(2) representative to axis-angle).
Rotation q_map(const ComplexMatrix& u);

// phase * (cos(t/2) I - i sin(t/2) n.sigma); q_map of the result is r.
ComplexMatrix su2_lift(const Rotation& r, cxd phase = 1.0);

// Pointwise q_map of a matrix group's inclusion rep.
RotationRep q_rep(const MatrixGroup& mg);

// Rotation group generated by explicit rotations (closure).
struct RotationGroup {
    std::shared_ptr<const FiniteGroup> group;
    RotationRep rep;
};

RotationGroup build_rotation_group(const std::string& name, const std::vector<Rotation>& gens,
                                   std::size_t size_cap = 256);

// If rhoB(g) V rhoA(g)^T = theta(g) V for every g with unit scalars theta(g),
// return the phase system theta (verified to be a homomorphism); else nullopt.
std::optional<std::vector<cxd>> invariance_phase_system(const Representation& rho_a,
                                                        const Representation& rho_b,
                                                        const ComplexMatrix& v, double tol = kTol);

// Search for a unitary V and character theta with
// rhoB(g) V rhoA(g)^T = theta(g) V. The corresponding maximally entangled
// state (1 (x) V)|eta> is then invariant up to the phase theta.
struct InvariantStateWitness {
    ComplexMatrix v;
    std::vector<cxd> theta;
};

std::optional<InvariantStateWitness> invariant_entangled_state(const Representation& rho_a,
                                                               const Representation& rho_b,
                                                               std::uint64_t seed = 1);

}  // namespace equitel
