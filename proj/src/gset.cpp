#include "equitel/gset.hpp"

#include <algorithm>
#include <numeric>

namespace equitel {

void GSet::validate() const {
    const FiniteGroup& g = *group;
    if (act.size() != g.order()) throw VerificationError("action table has wrong group size");
    for (const auto& row : act) {
        if (row.size() != points.size()) throw VerificationError("action row has wrong size");
        std::vector<bool> seen(points.size(), false);
        for (int v : row) {
            if (v < 0 || v >= int(points.size()) || seen[v])
                throw VerificationError("action of an element is not a permutation");
            seen[v] = true;
        }
    }
    for (std::size_t x = 0; x < points.size(); ++x)
        if (act[g.identity()][x] != int(x))
            throw VerificationError("identity does not act trivially");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            int ab = g.mul(int(a), int(b));
            for (std::size_t x = 0; x < points.size(); ++x) {
                int lhs = act[ab][x];
                int rhs = (side == Side::Left) ? act[a][act[b][x]] : act[b][act[a][x]];
                if (lhs != rhs) throw VerificationError("action composition axiom violated");
            }
        }
}

GSet GSet::opposite() const {
    GSet o = *this;
    o.side = (side == Side::Left) ? Side::Right : Side::Left;
    for (std::size_t g = 0; g < group->order(); ++g) o.act[g] = act[group->inv(int(g))];
    return o;
}

GSet trivial_gset(const FiniteGroup& g, std::size_t npoints, GSet::Side side) {
    GSet x;
    x.group = &g;
    x.side = side;
    for (std::size_t i = 0; i < npoints; ++i) x.points.push_back(std::to_string(i));
    std::vector<int> id(npoints);
    std::iota(id.begin(), id.end(), 0);
    x.act.assign(g.order(), id);
    return x;
}

GSet right_multiplication_gset(const FiniteGroup& g) {
    GSet x;
    x.group = &g;
    x.side = GSet::Side::Left;
    for (std::size_t i = 0; i < g.order(); ++i) x.points.push_back(g.element_name(int(i)));
    x.act.assign(g.order(), std::vector<int>(g.order()));
    for (std::size_t gg = 0; gg < g.order(); ++gg)
        for (std::size_t m = 0; m < g.order(); ++m)
            x.act[gg][m] = g.mul(int(m), g.inv(int(gg)));
    return x;
}

CosetSpace coset_gset(const FiniteGroup& g, const Subgroup& h) {
    if (h.parent != &g || !is_subgroup(g, h.members))
        throw VerificationError("coset space requires a subgroup of the acting group");
    CosetSpace cs;
    cs.coset_of.assign(g.order(), -1);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (cs.coset_of[x] >= 0) continue;
        int c = int(cs.reps.size());
        cs.reps.push_back(int(x));
        for (int m : h.members) cs.coset_of[g.mul(m, int(x))] = c;  // right coset H x
    }
    GSet& s = cs.gset;
    s.group = &g;
    s.side = GSet::Side::Left;
    for (int r : cs.reps) s.points.push_back("H" + g.element_name(r));
    s.act.assign(g.order(), std::vector<int>(cs.reps.size()));
    for (std::size_t gg = 0; gg < g.order(); ++gg)
        for (std::size_t c = 0; c < cs.reps.size(); ++c)
            s.act[gg][c] = cs.coset_of[g.mul(cs.reps[c], g.inv(int(gg)))];
    return cs;
}

Subgroup stabilizer(const GSet& x, int point) {
    Subgroup h;
    h.parent = x.group;
    for (std::size_t g = 0; g < x.group->order(); ++g)
        if (x.act[g][point] == point) h.members.push_back(int(g));
    return h;
}

std::vector<std::vector<int>> orbits(const GSet& x) {
    std::vector<std::vector<int>> out;
    std::vector<bool> done(x.size(), false);
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (done[p]) continue;
        std::vector<int> orb;
        std::vector<int> queue{int(p)};
        done[p] = true;
        while (!queue.empty()) {
            int q = queue.back();
            queue.pop_back();
            orb.push_back(q);
            for (std::size_t g = 0; g < x.group->order(); ++g) {
                int r = x.act[g][q];
                if (!done[r]) {
                    done[r] = true;
                    queue.push_back(r);
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<std::size_t> orbit_type(const GSet& x) {
    std::vector<std::size_t> t;
    for (const auto& o : orbits(x)) t.push_back(o.size());
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool is_transitive(const GSet& x) { return orbits(x).size() == 1; }

bool is_free(const GSet& x) {
    for (std::size_t p = 0; p < x.size(); ++p)
        if (stabilizer(x, int(p)).order() != 1) return false;
    return true;
}

namespace {

// Isomorphism between two transitive G-sets, or nullopt.
std::optional<std::vector<std::pair<int, int>>> match_orbit(const GSet& x, const std::vector<int>& ox,
                                                            const GSet& y, const std::vector<int>& oy) {
    if (ox.size() != oy.size()) return std::nullopt;
    const FiniteGroup& g = *x.group;
    Subgroup sx = stabilizer(x, ox.front());
    for (int y0 : oy) {
        if (stabilizer(y, y0).members != sx.members) continue;
        // Map h . x0 -> h . y0; equal stabilizers make this well-defined.
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> image_of(x.size(), -1);
        for (std::size_t h = 0; h < g.order(); ++h) {
            int px = x.act[h][ox.front()];
            int py = y.act[h][y0];
            if (image_of[px] == -1)
                image_of[px] = py;
            else if (image_of[px] != py)
                return std::nullopt;  // would mean stabilizers were not equal
        }
        for (int p : ox) pairs.push_back({p, image_of[p]});
        return pairs;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_gset_isomorphism(const GSet& x, const GSet& y) {
    if (x.group != y.group) throw VerificationError("G-set isomorphism requires a common group");
    if (x.side != y.side) throw VerificationError("G-set isomorphism requires matching sides");
    if (x.size() != y.size()) return std::nullopt;

    // Right actions are handled through their opposite left actions.
    if (x.side == GSet::Side::Right) {
        GSet xl = x.opposite(), yl = y.opposite();
        return find_gset_isomorphism(xl, yl);
    }

    auto ox = orbits(x), oy = orbits(y);
    if (ox.size() != oy.size()) return std::nullopt;
    std::vector<bool> used(oy.size(), false);
    std::vector<int> bij(x.size(), -1);
    for (const auto& orb : ox) {
        bool matched = false;
        for (std::size_t j = 0; j < oy.size(); ++j) {
            if (used[j]) continue;
            auto pairs = match_orbit(x, orb, y, oy[j]);
            if (pairs) {
                used[j] = true;
                for (auto [p, q] : *pairs) bij[p] = q;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return bij;
}

}  // namespace equitel
