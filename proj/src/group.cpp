#include "equitel/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace equitel {

Permutation Permutation::then_apply(const Permutation& outer) const {
    if (degree() != outer.degree()) throw Error("permutation degree mismatch");
    Permutation r;
    r.images.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.images[i] = outer.images[images[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.images[images[i]] = int(i);
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
        if (images[i] != int(i)) return false;
    return true;
}

bool Permutation::valid() const {
    std::vector<bool> seen(degree(), false);
    for (int v : images) {
        if (v < 0 || v >= int(degree()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::string Permutation::cycle_string() const {
    std::vector<bool> done(degree(), false);
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (done[i] || images[i] == int(i)) continue;
        any = true;
        out << '(';
        int j = int(i);
        bool first = true;
        do {
            if (!first) out << ' ';
            out << j;
            done[j] = true;
            j = images[j];
            first = false;
        } while (j != int(i));
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles)
        for (std::size_t k = 0; k < cyc.size(); ++k)
            p.images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    if (!p.valid()) throw SchemaError("invalid cycle specification");
    return p;
}

void FiniteGroup::finalize() {
    std::size_t n = names_.size();
    inverse_.assign(n, -1);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            if (table_[g][h] == identity_ && table_[h][g] == identity_) {
                inverse_[g] = int(h);
                break;
            }
        }
        if (inverse_[g] < 0) throw SchemaError("element without two-sided inverse");
    }
    validate();
}

void FiniteGroup::validate() const {
    std::size_t n = names_.size();
    if (table_.size() != n) throw SchemaError("table size mismatch");
    for (const auto& row : table_) {
        if (row.size() != n) throw SchemaError("table row size mismatch");
        for (int v : row)
            if (v < 0 || v >= int(n)) throw SchemaError("table entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g)
        if (table_[identity_][g] != int(g) || table_[g][identity_] != int(g))
            throw SchemaError("identity row/column broken");
    // Exhaustive associativity check (orders in scope are <= 120).
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw SchemaError("multiplication table is not associative");
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> element_names,
                                    std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.names_ = std::move(element_names);
    g.table_ = std::move(table);
    g.identity_ = -1;
    for (std::size_t e = 0; e < g.names_.size(); ++e) {
        bool ok = true;
        for (std::size_t h = 0; h < g.names_.size(); ++h)
            if (g.table_[e][h] != int(h) || g.table_[h][e] != int(h)) {
                ok = false;
                break;
            }
        if (ok) {
            g.identity_ = int(e);
            break;
        }
    }
    if (g.identity_ < 0) throw SchemaError("table has no identity element");
    // Every element is formally a generator; words are single letters.
    g.generators_.resize(g.names_.size());
    std::iota(g.generators_.begin(), g.generators_.end(), 0);
    g.words_.resize(g.names_.size());
    for (std::size_t i = 0; i < g.names_.size(); ++i)
        if (int(i) != g.identity_) g.words_[i] = {int(i)};
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> element_names,
                                    std::vector<std::vector<int>> table, std::vector<int> generators,
                                    std::vector<std::vector<int>> words) {
    FiniteGroup g = from_table(std::move(name), std::move(element_names), std::move(table));
    if (words.size() != g.order()) throw SchemaError("one generator word per element required");
    g.generators_ = std::move(generators);
    g.words_ = std::move(words);
    return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<Permutation>& gens,
                                           std::size_t size_cap) {
    if (gens.empty()) throw SchemaError("need at least one generator");
    std::size_t deg = gens[0].degree();
    for (const auto& p : gens) {
        if (!p.valid()) throw SchemaError("generator is not a permutation");
        if (p.degree() != deg) throw SchemaError("generators act on different sets");
    }

    FiniteGroup g;
    g.name_ = std::move(name);
    std::vector<Permutation> elems{Permutation::identity(deg)};
    std::map<std::vector<int>, int> index{{elems[0].images, 0}};
    g.words_.push_back({});
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Permutation p = gens[k].then_apply(elems[i]);  // elems[i] * gens[k]
            auto [it, inserted] = index.try_emplace(p.images, int(elems.size()));
            if (inserted) {
                elems.push_back(p);
                auto w = g.words_[i];
                w.push_back(int(k));
                g.words_.push_back(std::move(w));
                if (elems.size() > size_cap) throw SchemaError("group closure exceeds size cap");
            }
        }
    }

    std::size_t n = elems.size();
    g.table_.assign(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Permutation p = elems[b].then_apply(elems[a]);  // a * b: apply b, then a
            g.table_[a][b] = index.at(p.images);
        }
    g.names_.reserve(n);
    for (const auto& p : elems) g.names_.push_back(p.cycle_string());
    g.perms_ = std::move(elems);
    g.identity_ = 0;
    for (std::size_t k = 0; k < gens.size(); ++k)
        g.generators_.push_back(index.at(gens[k].images));
    g.finalize();
    return g;
}

FiniteGroup FiniteGroup::preset(const std::string& name, std::size_t size_cap) {
    auto cyclic = [](int n) {
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0);
        return cyc;
    };
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'C')) {
        int n = std::stoi(name.substr(1));
        if (n < 1) throw SchemaError("bad cyclic order");
        if (n == 1)
            return from_permutations(name, {Permutation::identity(1)}, size_cap);
        return from_permutations(name, {Permutation::from_cycles(n, {cyclic(n)})}, size_cap);
    }
    if (name.size() >= 2 && name[0] == 'D') {
        int n = std::stoi(name.substr(1));
        if (n < 1) throw SchemaError("bad dihedral order");
        if (n == 1)
            return from_permutations(name, {Permutation::from_cycles(2, {{0, 1}})}, size_cap);
        if (n == 2)
            return from_permutations(
                name,
                {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                 Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                size_cap);
        Permutation rot = Permutation::from_cycles(n, {cyclic(n)});
        Permutation flip = Permutation::identity(n);
        for (int i = 0; i < n; ++i) flip.images[i] = (n - i) % n;
        return from_permutations(name, {rot, flip}, size_cap);
    }
    if (name.size() >= 2 && name[0] == 'S') {
        int n = std::stoi(name.substr(1));
        if (n < 1) throw SchemaError("bad symmetric order");
        if (n == 1) return from_permutations(name, {Permutation::identity(1)}, size_cap);
        return from_permutations(
            name, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyclic(n)})},
            size_cap);
    }
    if (name == "A4")
        return from_permutations(
            name, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{0, 1}, {2, 3}})},
            size_cap);
    if (name == "A5")
        return from_permutations(
            name, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})},
            size_cap);
    throw SchemaError("unknown group preset: " + name);
}

int FiniteGroup::power(int g, long long k) const {
    long long n = element_order(g);
    long long kk = k % n;
    if (kk < 0) kk += n;
    int acc = identity_;
    for (long long i = 0; i < kk; ++i) acc = mul(acc, g);
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int acc = g, n = 1;
    while (acc != identity_) {
        acc = mul(acc, g);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::optional<int> FiniteGroup::element_by_name(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return int(i);
    return std::nullopt;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

FiniteGroup Subgroup::as_group(const std::string& name) const {
    std::vector<int> pos(parent->order(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = int(i);
    std::vector<std::vector<int>> table(members.size(), std::vector<int>(members.size()));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < members.size(); ++a) {
        names.push_back(parent->element_name(members[a]));
        for (std::size_t b = 0; b < members.size(); ++b) {
            int p = pos[parent->mul(members[a], members[b])];
            if (p < 0) throw VerificationError("member set is not closed");
            table[a][b] = p;
        }
    }
    return FiniteGroup::from_table(name, std::move(names), std::move(table));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<bool> in(g.order(), false);
    std::vector<int> queue;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = true;
            queue.push_back(x);
        }
    };
    add(g.identity());
    for (int s : seed) add(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        add(g.inv(queue[i]));
        for (std::size_t j = 0; j <= i; ++j) {
            add(g.mul(queue[i], queue[j]));
            add(g.mul(queue[j], queue[i]));
        }
    }
    Subgroup h;
    h.parent = &g;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (in[x]) h.members.push_back(int(x));
    return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return {&g, {g.identity()}}; }

Subgroup full_subgroup(const FiniteGroup& g) {
    Subgroup h;
    h.parent = &g;
    h.members.resize(g.order());
    std::iota(h.members.begin(), h.members.end(), 0);
    return h;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    std::vector<bool> in(g.order(), false);
    for (int m : members) {
        if (m < 0 || m >= int(g.order())) return false;
        in[m] = true;
    }
    if (!in[g.identity()]) return false;
    for (int a : members) {
        if (!in[g.inv(a)]) return false;
        for (int b : members)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert({g.identity()});
    // Seed with cyclic subgroups, then close under pairwise joins.
    for (std::size_t x = 0; x < g.order(); ++x)
        found.insert(subgroup_closure(g, {int(x)}).members);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> seed = snapshot[i];
                seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
                auto joined = subgroup_closure(g, std::move(seed)).members;
                if (found.insert(joined).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    for (const auto& m : found) out.push_back({&g, m});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Subgroup conjugated_subgroup(const FiniteGroup& g, const Subgroup& h, int by) {
    Subgroup out;
    out.parent = &g;
    for (int m : h.members) out.members.push_back(g.conj(by, m));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

bool conjugate_subgroups(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return false;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (conjugated_subgroup(g, a, int(x)).members == b.members) return true;
    return false;
}

int SubgroupClassification::class_of(const Subgroup& h) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& m : classes[c].members)
            if (m.members == h.members) return int(c);
    return -1;
}

SubgroupClassification conjugacy_classes_of_subgroups(const FiniteGroup& g) {
    auto subs = enumerate_subgroups(g);
    SubgroupClassification out;
    std::vector<bool> used(subs.size(), false);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        ConjClassOfSubgroups cls;
        std::set<std::vector<int>> seen;
        for (std::size_t x = 0; x < g.order(); ++x)
            seen.insert(conjugated_subgroup(g, subs[i], int(x)).members);
        for (std::size_t j = i; j < subs.size(); ++j)
            if (!used[j] && seen.count(subs[j].members)) {
                used[j] = true;
                cls.members.push_back(subs[j]);
            }
        out.classes.push_back(std::move(cls));
    }
    std::size_t n = out.classes.size();
    out.below.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // C_i <= C_j iff some member of C_i is contained in the
            // representative of C_j (conjugating moves containment around).
            const auto& rep = out.classes[j].representative();
            for (const auto& h : out.classes[i].members) {
                if (std::includes(rep.members.begin(), rep.members.end(), h.members.begin(),
                                  h.members.end())) {
                    out.below[i][j] = true;
                    break;
                }
            }
        }
    return out;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    std::vector<int> comms;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            comms.push_back(g.mul(g.mul(int(a), int(b)), g.mul(g.inv(int(a)), g.inv(int(b)))));
    return subgroup_closure(g, std::move(comms));
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n, const std::string& name) {
    for (std::size_t x = 0; x < g.order(); ++x)
        if (conjugated_subgroup(g, n, int(x)).members != n.members)
            throw VerificationError("quotient by a non-normal subgroup");
    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        int c = int(reps.size());
        reps.push_back(int(x));
        for (int m : n.members) coset_of[g.mul(m, int(x))] = c;  // coset N x
    }
    std::size_t q = reps.size();
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < q; ++a) {
        names.push_back("[" + g.element_name(reps[a]) + "]");
        for (std::size_t b = 0; b < q; ++b) table[a][b] = coset_of[g.mul(reps[a], reps[b])];
    }
    QuotientGroup out{FiniteGroup::from_table(name, std::move(names), std::move(table)),
                      std::move(coset_of)};
    return out;
}

std::vector<std::vector<cxd>> one_dim_character_table(const FiniteGroup& g) {
    Subgroup der = derived_subgroup(g);
    QuotientGroup ab = quotient_group(g, der, g.name() + "_ab");
    const FiniteGroup& a = ab.group;

    // Greedy generating set of the abelianization.
    std::vector<int> gens;
    Subgroup span = trivial_subgroup(a);
    for (std::size_t x = 0; x < a.order() && span.order() < a.order(); ++x) {
        if (span.contains(int(x))) continue;
        gens.push_back(int(x));
        std::vector<int> seed = span.members;
        seed.push_back(int(x));
        span = subgroup_closure(a, std::move(seed));
    }

    // Express each element as a word in the generators (BFS).
    std::vector<std::vector<int>> word(a.order());
    std::vector<bool> have(a.order(), false);
    have[a.identity()] = true;
    std::vector<int> queue{a.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int nx = a.mul(queue[i], gens[k]);
            if (!have[nx]) {
                have[nx] = true;
                word[nx] = word[queue[i]];
                word[nx].push_back(int(k));
                queue.push_back(nx);
            }
        }

    // Enumerate root-of-unity assignments to the generators; keep genuine
    // homomorphisms, dedupe by value vector.
    std::vector<int> ord;
    for (int gen : gens) ord.push_back(a.element_order(gen));
    std::vector<std::vector<cxd>> chars;
    std::vector<int> choice(gens.size(), 0);
    auto emit = [&]() {
        std::vector<cxd> chi(a.order());
        for (std::size_t x = 0; x < a.order(); ++x) {
            cxd v = 1.0;
            for (int k : word[x])
                v *= std::exp(cxd(0, 2.0 * std::numbers::pi * choice[k] / ord[k]));
            chi[x] = v;
        }
        for (std::size_t p = 0; p < a.order(); ++p)
            for (std::size_t q = 0; q < a.order(); ++q)
                if (std::abs(chi[a.mul(int(p), int(q))] - chi[p] * chi[q]) > 1e-9) return;
        for (const auto& c : chars) {
            bool same = true;
            for (std::size_t x = 0; x < a.order() && same; ++x)
                if (std::abs(c[x] - chi[x]) > 1e-9) same = false;
            if (same) return;
        }
        chars.push_back(std::move(chi));
    };
    while (true) {
        emit();
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == ord[k]) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    if (chars.size() != a.order())
        throw VerificationError("character count does not match abelianization order");

    // Lift to G and put the trivial character first.
    std::vector<std::vector<cxd>> out;
    for (const auto& c : chars) {
        std::vector<cxd> chi(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) chi[x] = c[ab.projection[x]];
        out.push_back(std::move(chi));
    }
    std::stable_sort(out.begin(), out.end(), [&](const auto& u, const auto& v) {
        double du = 0, dv = 0;
        for (std::size_t x = 0; x < g.order(); ++x) {
            du += std::abs(u[x] - cxd(1.0));
            dv += std::abs(v[x] - cxd(1.0));
        }
        return du < dv;
    });
    return out;
}

}  // namespace equitel
