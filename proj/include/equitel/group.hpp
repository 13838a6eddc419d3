#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equitel/common.hpp"

namespace equitel {

// Permutation of {0..n-1} in one-line form (image of i at index i).
struct Permutation {
    std::vector<int> images;

    std::size_t degree() const { return images.size(); }
    int operator()(int i) const { return images[i]; }
    Permutation then_apply(const Permutation& outer) const;  // outer . this
    Permutation inverse() const;
    bool is_identity() const;
    bool valid() const;
    std::string cycle_string() const;

    static Permutation identity(std::size_t n);
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
};

// Finite group stored by multiplication table. Immutable after construction.
// table(g, h) is the index of g*h; for permutation-backed groups g*h acts as
// the composite "apply h, then g".
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::string name, std::vector<std::string> element_names,
                                  std::vector<std::vector<int>> table);
    // As above, with explicit generator indices and per-element generator
    // words (used by the matrix- and rotation-group builders).
    static FiniteGroup from_table(std::string name, std::vector<std::string> element_names,
                                  std::vector<std::vector<int>> table, std::vector<int> generators,
                                  std::vector<std::vector<int>> words);
    static FiniteGroup from_permutations(std::string name, const std::vector<Permutation>& gens,
                                         std::size_t size_cap = 10000);
    // Presets: Zn, Dn, Sn, A4, A5 (e.g. "Z3", "D4", "S5").
    static FiniteGroup preset(const std::string& name, std::size_t size_cap = 10000);

    const std::string& name() const { return name_; }
    std::size_t order() const { return names_.size(); }
    int identity() const { return identity_; }
    int mul(int g, int h) const { return table_[g][h]; }
    int inv(int g) const { return inverse_[g]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int power(int g, long long k) const;
    int element_order(int g) const;
    bool is_abelian() const;

    const std::string& element_name(int g) const { return names_[g]; }
    std::optional<int> element_by_name(const std::string& n) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    // Generator indices and, per element, one word in those generators.
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<std::vector<int>>& generator_words() const { return words_; }

    // Permutation realization when built from permutations (empty otherwise).
    const std::vector<Permutation>& permutations() const { return perms_; }

    void validate() const;  // associativity, identity, inverses (exhaustive)

  private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::vector<int> generators_;
    std::vector<std::vector<int>> words_;
    std::vector<Permutation> perms_;

    void finalize();  // compute inverses, validate
};

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted element indices

    std::size_t order() const { return members.size(); }
    bool contains(int g) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }

    // The subgroup as a standalone group; element i of the result is
    // members[i] of the parent.
    FiniteGroup as_group(const std::string& name) const;
};

// Closure of a subset under multiplication and inverse.
Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);

// Every subgroup exactly once, sorted by (order, members).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

struct ConjClassOfSubgroups {
    std::vector<Subgroup> members;  // sorted; members.front() is the representative
    const Subgroup& representative() const { return members.front(); }
};

struct SubgroupClassification {
    std::vector<ConjClassOfSubgroups> classes;
    // below[i][j]: some member of class i is contained in some member of class j.
    std::vector<std::vector<bool>> below;

    int class_of(const Subgroup& h) const;
};

SubgroupClassification conjugacy_classes_of_subgroups(const FiniteGroup& g);

bool conjugate_subgroups(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup conjugated_subgroup(const FiniteGroup& g, const Subgroup& h, int by);

// Derived (commutator) subgroup and the abelianization G/[G,G].
Subgroup derived_subgroup(const FiniteGroup& g);

struct QuotientGroup {
    FiniteGroup group;              // the quotient
    std::vector<int> projection;    // parent element -> quotient element
};

// Quotient by a normal subgroup (throws if not normal).
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n, const std::string& name);

// All homomorphisms G -> U(1), via the abelianization. chars[k][g] is the
// value at element g. chars[0] is the trivial character.
std::vector<std::vector<cxd>> one_dim_character_table(const FiniteGroup& g);

}  // namespace equitel
