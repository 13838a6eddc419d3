#include "equitel/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace equitel {

ElementClasses conjugacy_classes(const FiniteGroup& g) {
    ElementClasses out;
    out.group = &g;
    out.class_of.assign(g.order(), -1);
    struct Raw {
        int rep;
        int order;
        std::vector<int> members;
    };
    std::vector<Raw> raws;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (out.class_of[x] != -1) continue;
        Raw raw;
        raw.rep = int(x);
        raw.order = g.element_order(int(x));
        std::vector<bool> seen(g.order(), false);
        for (std::size_t h = 0; h < g.order(); ++h) {
            int y = g.conj(int(h), int(x));
            if (!seen[y]) {
                seen[y] = true;
                raw.members.push_back(y);
            }
        }
        std::sort(raw.members.begin(), raw.members.end());
        raw.rep = raw.members.front();
        for (int m : raw.members) out.class_of[m] = -2;  // placeholder
        raws.push_back(std::move(raw));
    }
    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.rep < b.rep;
    });
    for (std::size_t c = 0; c < raws.size(); ++c) {
        out.representatives.push_back(raws[c].rep);
        out.sizes.push_back(raws[c].members.size());
        out.labels.push_back(g.element_name(raws[c].rep));
        for (int m : raws[c].members) out.class_of[m] = int(c);
    }
    return out;
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw Error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(std::abs(n), d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const { return {a + o.a, b + o.b}; }
QuadScalar QuadScalar::operator-(const QuadScalar& o) const { return {a - o.a, b - o.b}; }
QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    // (a + b r)(c + d r) = ac + 5bd + (ad + bc) r,  r = sqrt(5)
    return {a * o.a + Rational(5) * (b * o.b), a * o.b + b * o.a};
}
QuadScalar QuadScalar::galois_conjugate() const { return {a, Rational(0) - b}; }
double QuadScalar::value() const { return a.value() + b.value() * std::sqrt(5.0); }

std::size_t ClassFunction::degree() const {
    double d = values.at(0).real();
    return std::size_t(std::llround(d));
}

ClassFunction character_of_rep(const Representation& rho) {
    ClassFunction cf;
    cf.classes = conjugacy_classes(*rho.group);
    for (std::size_t c = 0; c < cf.classes.count(); ++c)
        cf.values.push_back(rho.image(cf.classes.representatives[c]).trace());
    // Rationalize when every value is (near-)integral.
    bool exactable = true;
    for (const auto& v : cf.values)
        if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - std::llround(v.real())) > 1e-6)
            exactable = false;
    if (exactable) {
        for (const auto& v : cf.values) cf.exact.push_back(Rational(std::llround(v.real())));
        cf.is_exact = true;
    }
    return cf;
}

ClassFunction absolute_square(const ClassFunction& chi) {
    ClassFunction out;
    out.classes = chi.classes;
    for (const auto& v : chi.values) out.values.push_back(v * std::conj(v));
    if (chi.is_exact) {
        // All exact values in scope are real, so |v|^2 = v^2.
        for (const auto& q : chi.exact) out.exact.push_back(q * q);
        out.is_exact = true;
    }
    return out;
}

cxd inner_product(const ClassFunction& x, const ClassFunction& y) {
    if (x.classes.group != y.classes.group) throw Error("class functions over different groups");
    cxd s = 0.0;
    std::size_t order = x.classes.group->order();
    for (std::size_t c = 0; c < x.classes.count(); ++c)
        s += double(x.classes.sizes[c]) * x.values[c] * std::conj(y.values[c]);
    return s / double(order);
}

std::vector<std::vector<cxd>> one_dim_characters(const FiniteGroup& g, const Subgroup& h) {
    if (h.parent != &g) throw Error("subgroup of a different group");
    FiniteGroup hg = h.as_group(g.name() + "_sub");
    return one_dim_character_table(hg);
}

ClassFunction induce_character(const FiniteGroup& g, const Subgroup& h,
                               const std::vector<cxd>& chi_per_member) {
    if (chi_per_member.size() != h.order())
        throw SchemaError("one character value per subgroup member required");
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < h.members.size(); ++i) pos[h.members[i]] = int(i);

    ClassFunction out;
    out.classes = conjugacy_classes(g);
    bool exactable = true;
    for (std::size_t c = 0; c < out.classes.count(); ++c) {
        int rep = out.classes.representatives[c];
        cxd sum = 0.0;
        for (std::size_t x = 0; x < g.order(); ++x) {
            int y = g.conj(int(x), rep);
            if (pos[y] >= 0) sum += chi_per_member[pos[y]];
        }
        cxd v = sum / double(h.order());
        out.values.push_back(v);
        // Induced characters are algebraic integers; everything in scope is
        // rational there, hence integral.
        if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - std::llround(v.real())) > 1e-6)
            exactable = false;
    }
    if (exactable) {
        for (const auto& v : out.values) out.exact.push_back(Rational(std::llround(v.real())));
        out.is_exact = true;
    }
    return out;
}

std::vector<MonomialCandidate> monomial_characters(const FiniteGroup& g, long long max_degree) {
    std::vector<MonomialCandidate> out;
    auto subs = enumerate_subgroups(g);
    for (std::size_t si = 0; si < subs.size(); ++si) {
        const Subgroup& h = subs[si];
        long long degree = (long long)(g.order() / h.order());
        if (degree > max_degree) continue;
        auto chars = one_dim_characters(g, h);
        for (std::size_t k = 0; k < chars.size(); ++k) {
            MonomialCandidate cand;
            std::ostringstream src;
            src << "subgroup#" << si << " (order " << h.order() << "), character " << k;
            cand.source = src.str();
            cand.chi = induce_character(g, h, chars[k]);
            bool dup = false;
            for (const auto& existing : out) {
                bool same = true;
                for (std::size_t c = 0; c < cand.chi.values.size() && same; ++c)
                    if (std::abs(existing.chi.values[c] - cand.chi.values[c]) > 1e-7) same = false;
                if (same) {
                    dup = true;
                    break;
                }
            }
            if (!dup) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end(), [](const MonomialCandidate& x, const MonomialCandidate& y) {
        if (x.chi.degree() != y.chi.degree()) return x.chi.degree() < y.chi.degree();
        for (std::size_t c = 0; c < x.chi.values.size(); ++c) {
            if (std::abs(x.chi.values[c] - y.chi.values[c]) < 1e-9) continue;
            return x.chi.values[c].real() < y.chi.values[c].real();
        }
        return false;
    });
    return out;
}

namespace {

// Exhaustive non-negative-integer search with degree pruning. Exact
// arithmetic when the whole instance is exact, float matching at 1e-6
// otherwise (the documented fallback for complex root-of-unity values).
struct DecompositionSearch {
    const std::vector<MonomialCandidate>& cands;
    bool exact_mode;
    std::vector<int> counts;

    bool run_exact(std::vector<QuadScalar> remaining, std::size_t idx, long long degree_left) {
        if (degree_left == 0) {
            for (const auto& q : remaining)
                if (!(q == QuadScalar{})) return false;
            return true;
        }
        if (idx >= cands.size()) return false;
        long long d = (long long)cands[idx].chi.degree();
        for (int c = int(degree_left / d); c >= 0; --c) {
            std::vector<QuadScalar> next = remaining;
            for (std::size_t cl = 0; cl < next.size(); ++cl)
                next[cl] = next[cl] - QuadScalar(Rational(c)) * cands[idx].chi.exact[cl];
            counts[idx] = c;
            if (run_exact(std::move(next), idx + 1, degree_left - c * d)) return true;
            counts[idx] = 0;
        }
        return false;
    }

    bool run_float(std::vector<cxd> remaining, std::size_t idx, long long degree_left) {
        if (degree_left == 0) {
            for (const auto& v : remaining)
                if (std::abs(v) > 1e-6) return false;
            return true;
        }
        if (idx >= cands.size()) return false;
        long long d = (long long)cands[idx].chi.degree();
        for (int c = int(degree_left / d); c >= 0; --c) {
            std::vector<cxd> next = remaining;
            for (std::size_t cl = 0; cl < next.size(); ++cl)
                next[cl] -= double(c) * cands[idx].chi.values[cl];
            counts[idx] = c;
            if (run_float(std::move(next), idx + 1, degree_left - c * d)) return true;
            counts[idx] = 0;
        }
        return false;
    }
};

}  // namespace

FeasibilityResult monomial_decomposition_feasible(const ClassFunction& target,
                                                  const std::vector<MonomialCandidate>& candidates) {
    FeasibilityResult res;
    bool exact_mode = target.is_exact;
    for (const auto& c : candidates) exact_mode = exact_mode && c.chi.is_exact;

    // Irrationality obstruction: a class value outside the rationals while
    // every candidate is provably rational there.
    if (target.is_exact)
        for (std::size_t cl = 0; cl < target.values.size(); ++cl) {
            if (target.exact[cl].is_rational()) continue;
            bool all_rational = true;
            for (const auto& c : candidates)
                all_rational = all_rational && c.chi.is_exact && c.chi.exact[cl].is_rational();
            if (all_rational) {
                std::ostringstream cert;
                cert << "class '" << target.classes.labels[cl]
                     << "' carries the irrational value (" << target.exact[cl].a.num << "/"
                     << target.exact[cl].a.den << ") + (" << target.exact[cl].b.num << "/"
                     << target.exact[cl].b.den
                     << ") sqrt(5), but every candidate monomial character is rational there; "
                        "no non-negative integer combination can match";
                res.feasible = false;
                res.certificate = cert.str();
                return res;
            }
        }

    DecompositionSearch search{candidates, exact_mode, std::vector<int>(candidates.size(), 0)};
    bool found = exact_mode
                     ? search.run_exact(target.exact, 0, (long long)target.degree())
                     : search.run_float(target.values, 0, (long long)target.degree());
    if (found) {
        res.feasible = true;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (search.counts[i] > 0)
                res.witness.push_back({candidates[i].source, search.counts[i]});
        return res;
    }
    std::ostringstream cert;
    cert << "exhaustive search over non-negative integer combinations of " << candidates.size()
         << " induced characters of degree <= " << target.degree()
         << " found no decomposition (degree accounting exhausted)";
    res.feasible = false;
    res.certificate = cert.str();
    return res;
}

ClassFunction alternating5_threedim_character(const FiniteGroup& a5, bool swap_five_classes) {
    ElementClasses classes = conjugacy_classes(a5);
    if (classes.count() != 5 || a5.order() != 60)
        throw VerificationError("expected the order-60 alternating group");

    ClassFunction chi;
    chi.classes = classes;
    chi.is_exact = true;
    Rational half(1, 2);
    QuadScalar golden_plus{half, half};                 // (1 + sqrt 5)/2
    QuadScalar golden_minus{half, Rational(-1, 2)};     // (1 - sqrt 5)/2
    if (swap_five_classes) std::swap(golden_plus, golden_minus);
    for (std::size_t c = 0; c < 5; ++c) {
        int order = a5.element_order(classes.representatives[c]);
        QuadScalar value;
        switch (order) {
            case 1: value = QuadScalar(Rational(3)); break;
            case 2: value = QuadScalar(Rational(-1)); break;
            case 3: value = QuadScalar(Rational(0)); break;
            case 5: {
                // first five-class gets golden_plus, the other the conjugate
                bool first = true;
                for (std::size_t d = 0; d < c; ++d)
                    if (a5.element_order(classes.representatives[d]) == 5) first = false;
                value = first ? golden_plus : golden_minus;
                break;
            }
            default: throw VerificationError("unexpected element order");
        }
        chi.exact.push_back(value);
        chi.values.push_back(cxd(value.value()));
    }

    // Exact self-checks: unit norm and orthogonality to the trivial
    // character, in Q(sqrt 5) arithmetic.
    QuadScalar norm, against_trivial;
    for (std::size_t c = 0; c < 5; ++c) {
        QuadScalar size{Rational((long long)classes.sizes[c])};
        norm = norm + size * chi.exact[c] * chi.exact[c];
        against_trivial = against_trivial + size * chi.exact[c];
    }
    if (!(norm == QuadScalar(Rational(60))))
        throw VerificationError("character norm is not 1");
    if (!(against_trivial == QuadScalar{}))
        throw VerificationError("character is not orthogonal to the trivial one");
    return chi;
}

}  // namespace equitel
