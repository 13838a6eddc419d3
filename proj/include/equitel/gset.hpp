#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equitel/group.hpp"

namespace equitel {

// Finite G-set: an action table act[g][x] with a side marker. Left actions
// satisfy act(gh, x) = act(g, act(h, x)); right actions the opposite order.
struct GSet {
    enum class Side { Left, Right };

    const FiniteGroup* group = nullptr;
    std::vector<std::string> points;
    std::vector<std::vector<int>> act;  // act[g][x]
    Side side = Side::Left;

    std::size_t size() const { return points.size(); }
    int apply(int g, int x) const { return act[g][x]; }

    void validate() const;  // identity + composition axioms, exhaustive

    // The same action viewed from the other side (g acts as g^{-1}).
    GSet opposite() const;
};

GSet trivial_gset(const FiniteGroup& g, std::size_t npoints, GSet::Side side = GSet::Side::Left);

// Left action of G on itself by x -> x g^{-1} (the regular frame action).
GSet right_multiplication_gset(const FiniteGroup& g);

// Right cosets Hx of H in G with the left action g . (Hx) = H x g^{-1}.
// Points are labelled by their minimal-index representative and carry that
// representative in `coset_rep`; `coset_of` maps each group element to its
// coset index.
struct CosetSpace {
    GSet gset;
    std::vector<int> reps;      // coset index -> representative element
    std::vector<int> coset_of;  // group element -> coset index
};

CosetSpace coset_gset(const FiniteGroup& g, const Subgroup& h);

Subgroup stabilizer(const GSet& x, int point);

std::vector<std::vector<int>> orbits(const GSet& x);
// Orbit sizes sorted descending (the "orbit type").
std::vector<std::size_t> orbit_type(const GSet& x);

// Equivariant bijection X -> Y, or nullopt. Both must live over the same
// group and carry the same side.
std::optional<std::vector<int>> find_gset_isomorphism(const GSet& x, const GSet& y);

bool is_transitive(const GSet& x);
bool is_free(const GSet& x);

}  // namespace equitel
