#include "torsorlab/structure_maps.hpp"

#include <sstream>

namespace torsorlab {

namespace {

void require_five(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z,
                  const char* where) {
    require_same_group(x.group(), a.group(), where);
    require_same_group(x.group(), y.group(), where);
    require_same_group(x.group(), b.group(), where);
    require_same_group(x.group(), z.group(), where);
}

}  // namespace

Subset gamma(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z) {
    require_five(x, a, y, b, z, "gamma");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    const auto as = a.elements();
    const auto bs = b.elements();
    for (Element w = 0; w < n; ++w) {
        bool found = false;
        for (Element alpha : as) {
            const Element zeta = g.add(alpha, w);
            if (!z.contains(zeta)) continue;
            for (Element beta : bs) {
                if (x.contains(g.add(w, beta)) && y.contains(g.add(zeta, beta))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) out.insert(w);
    }
    return out;
}

Subset gamma_check(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z) {
    require_five(x, a, y, b, z, "gamma_check");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    const auto as = a.elements();
    const auto bs = b.elements();
    for (Element w = 0; w < n; ++w) {
        bool found = false;
        for (Element alpha : as) {
            const Element zeta = g.add(w, alpha);
            if (!z.contains(zeta)) continue;
            for (Element beta : bs) {
                if (x.contains(g.add(beta, w)) && y.contains(g.add(beta, zeta))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) out.insert(w);
    }
    return out;
}

Subset sigma(const Subset& b, const Subset& x, const Subset& y, const Subset& z) {
    require_five(x, b, y, b, z, "sigma");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    const auto bs = b.elements();
    for (Element w = 0; w < n; ++w) {
        bool found = false;
        for (Element bp : bs) {
            const Element t = g.add(w, bp);
            if (!z.contains(t)) continue;
            for (Element beta : bs) {
                if (x.contains(g.add(w, beta)) && y.contains(g.add(t, beta))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) out.insert(w);
    }
    return out;
}

Subset sigma_check(const Subset& b, const Subset& x, const Subset& y, const Subset& z) {
    require_five(x, b, y, b, z, "sigma_check");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    const auto bs = b.elements();
    for (Element w = 0; w < n; ++w) {
        bool found = false;
        for (Element bp : bs) {
            const Element t = g.add(bp, w);
            if (!z.contains(t)) continue;
            for (Element beta : bs) {
                if (x.contains(g.add(beta, w)) && y.contains(g.add(beta, t))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) out.insert(w);
    }
    return out;
}

// The oracles below re-derive membership from scratch through the full tuple
// space, with every component recomputed from the defining equations. They
// intentionally share no logic with the fast maps above.

Subset gamma_oracle(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z) {
    require_five(x, a, y, b, z, "gamma_oracle");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    for (Element alpha = 0; alpha < n; ++alpha)
        for (Element beta = 0; beta < n; ++beta)
            for (Element w = 0; w < n; ++w) {
                if (!a.contains(alpha) || !b.contains(beta)) continue;
                const Element xi = g.add(w, beta);
                const Element zeta = g.add(alpha, w);
                const Element eta = g.add(g.add(alpha, w), beta);
                if (x.contains(xi) && y.contains(eta) && z.contains(zeta)) out.insert(w);
            }
    return out;
}

Subset gamma_check_oracle(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z) {
    require_five(x, a, y, b, z, "gamma_check_oracle");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    for (Element alpha = 0; alpha < n; ++alpha)
        for (Element beta = 0; beta < n; ++beta)
            for (Element w = 0; w < n; ++w) {
                if (!a.contains(alpha) || !b.contains(beta)) continue;
                const Element xi = g.add(beta, w);
                const Element zeta = g.add(w, alpha);
                const Element eta = g.add(g.add(beta, w), alpha);
                if (x.contains(xi) && y.contains(eta) && z.contains(zeta)) out.insert(w);
            }
    return out;
}

Subset sigma_oracle(const Subset& b, const Subset& x, const Subset& y, const Subset& z) {
    require_five(x, b, y, b, z, "sigma_oracle");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    for (Element beta = 0; beta < n; ++beta)
        for (Element bp = 0; bp < n; ++bp)
            for (Element w = 0; w < n; ++w) {
                if (!b.contains(beta) || !b.contains(bp)) continue;
                if (x.contains(g.add(w, beta)) && y.contains(g.add(g.add(w, bp), beta)) &&
                    z.contains(g.add(w, bp)))
                    out.insert(w);
            }
    return out;
}

Subset sigma_check_oracle(const Subset& b, const Subset& x, const Subset& y, const Subset& z) {
    require_five(x, b, y, b, z, "sigma_check_oracle");
    const FiniteGroup& g = *x.group();
    const int n = g.order();
    Subset out(x.group());
    for (Element beta = 0; beta < n; ++beta)
        for (Element bp = 0; bp < n; ++bp)
            for (Element w = 0; w < n; ++w) {
                if (!b.contains(beta) || !b.contains(bp)) continue;
                if (x.contains(g.add(beta, w)) && y.contains(g.add(g.add(beta, bp), w)) &&
                    z.contains(g.add(bp, w)))
                    out.insert(w);
            }
    return out;
}

const std::array<const char*, kLetterCount> kLetterNames = {"xi", "zeta", "alpha", "beta", "eta", "omega"};

bool structure_member(const GroupRef& g, const StructureTuple& t) {
    const Element alpha = t[Letter::alpha], beta = t[Letter::beta], w = t[Letter::omega];
    return t[Letter::zeta] == g->add(alpha, w) && t[Letter::eta] == g->add(g->add(alpha, w), beta) &&
           t[Letter::xi] == g->add(w, beta);
}

void for_each_structure_tuple(const GroupRef& g, const std::function<void(const StructureTuple&)>& fn) {
    const int n = g->order();
    StructureTuple t;
    for (Element alpha = 0; alpha < n; ++alpha)
        for (Element beta = 0; beta < n; ++beta)
            for (Element w = 0; w < n; ++w) {
                t[Letter::alpha] = alpha;
                t[Letter::beta] = beta;
                t[Letter::omega] = w;
                t[Letter::zeta] = g->add(alpha, w);
                t[Letter::eta] = g->add(g->add(alpha, w), beta);
                t[Letter::xi] = g->add(w, beta);
                fn(t);
            }
}

std::string SignVector::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < kLetterCount; ++i) {
        out << (s[i] > 0 ? "+" : "-");
        if (i == 1 || i == 3)
            out << ";";
        else if (i < kLetterCount - 1)
            out << ",";
    }
    out << ")";
    return out.str();
}

std::vector<SignVector> SignVector::all() {
    std::vector<SignVector> out;
    out.reserve(64);
    for (int code = 0; code < 64; ++code) {
        SignVector sv;
        for (int i = 0; i < kLetterCount; ++i) sv.s[i] = (code >> i) & 1 ? -1 : +1;
        out.push_back(sv);
    }
    return out;
}

StructureTuple apply_signs(const GroupRef& g, const SignVector& s, const StructureTuple& t) {
    StructureTuple out;
    for (int i = 0; i < kLetterCount; ++i) out.v[i] = s.s[i] > 0 ? t.v[i] : g->neg(t.v[i]);
    return out;
}

bool signed_member(const GroupRef& g, const SignVector& s, const StructureTuple& t) {
    return structure_member(g, apply_signs(g, s, t));
}

namespace {

using L = Letter;

LetterEquation eq(L lhs, std::initializer_list<std::pair<int, L>> rhs) { return {lhs, rhs}; }

std::vector<LetterSystem> build_systems() {
    std::vector<LetterSystem> out;
    // Triangular base: alpha, omega, beta from xi, zeta, eta.
    out.push_back({"solve-alpha-omega-beta",
                   {eq(L::alpha, {{+1, L::eta}, {-1, L::xi}}),
                    eq(L::omega, {{+1, L::xi}, {-1, L::eta}, {+1, L::zeta}}),
                    eq(L::beta, {{-1, L::zeta}, {+1, L::eta}})}});
    out.push_back({"eta-three-ways",
                   {eq(L::eta, {{+1, L::alpha}, {+1, L::omega}, {+1, L::beta}}),
                    eq(L::eta, {{+1, L::alpha}, {+1, L::xi}}),
                    eq(L::eta, {{+1, L::zeta}, {+1, L::beta}})}});
    out.push_back({"eta-three-ways-alt",
                   {eq(L::eta, {{+1, L::zeta}, {-1, L::omega}, {+1, L::xi}}),
                    eq(L::eta, {{+1, L::alpha}, {+1, L::xi}}),
                    eq(L::eta, {{+1, L::zeta}, {+1, L::beta}})}});
    out.push_back({"omega-three-ways",
                   {eq(L::omega, {{+1, L::xi}, {-1, L::eta}, {+1, L::zeta}}),
                    eq(L::omega, {{+1, L::xi}, {-1, L::beta}}),
                    eq(L::omega, {{-1, L::alpha}, {+1, L::zeta}})}});
    out.push_back({"omega-three-ways-alt",
                   {eq(L::omega, {{-1, L::alpha}, {+1, L::eta}, {-1, L::beta}}),
                    eq(L::omega, {{+1, L::xi}, {-1, L::beta}}),
                    eq(L::omega, {{-1, L::alpha}, {+1, L::zeta}})}});
    out.push_back({"alpha-three-ways",
                   {eq(L::alpha, {{+1, L::zeta}, {+1, L::beta}, {-1, L::xi}}),
                    eq(L::alpha, {{+1, L::eta}, {-1, L::xi}}),
                    eq(L::alpha, {{+1, L::zeta}, {-1, L::omega}})}});
    out.push_back({"alpha-three-ways-alt",
                   {eq(L::alpha, {{+1, L::eta}, {-1, L::beta}, {-1, L::omega}}),
                    eq(L::alpha, {{+1, L::eta}, {-1, L::xi}}),
                    eq(L::alpha, {{+1, L::zeta}, {-1, L::omega}})}});
    out.push_back({"beta-three-ways",
                   {eq(L::beta, {{-1, L::zeta}, {+1, L::alpha}, {+1, L::xi}}),
                    eq(L::beta, {{-1, L::omega}, {+1, L::xi}}),
                    eq(L::beta, {{-1, L::zeta}, {+1, L::eta}})}});
    out.push_back({"beta-three-ways-alt",
                   {eq(L::beta, {{-1, L::omega}, {-1, L::alpha}, {+1, L::eta}}),
                    eq(L::beta, {{-1, L::omega}, {+1, L::xi}}),
                    eq(L::beta, {{-1, L::zeta}, {+1, L::eta}})}});
    out.push_back({"xi-three-ways",
                   {eq(L::xi, {{-1, L::alpha}, {+1, L::zeta}, {+1, L::beta}}),
                    eq(L::xi, {{-1, L::alpha}, {+1, L::eta}}),
                    eq(L::xi, {{+1, L::omega}, {+1, L::beta}})}});
    out.push_back({"xi-three-ways-alt",
                   {eq(L::xi, {{+1, L::omega}, {-1, L::zeta}, {+1, L::eta}}),
                    eq(L::xi, {{-1, L::alpha}, {+1, L::eta}}),
                    eq(L::xi, {{+1, L::omega}, {+1, L::beta}})}});
    out.push_back({"zeta-three-ways",
                   {eq(L::zeta, {{+1, L::eta}, {-1, L::xi}, {+1, L::omega}}),
                    eq(L::zeta, {{+1, L::eta}, {-1, L::beta}}),
                    eq(L::zeta, {{+1, L::alpha}, {+1, L::omega}})}});
    out.push_back({"zeta-three-ways-alt",
                   {eq(L::zeta, {{+1, L::alpha}, {+1, L::xi}, {-1, L::beta}}),
                    eq(L::zeta, {{+1, L::eta}, {-1, L::beta}}),
                    eq(L::zeta, {{+1, L::alpha}, {+1, L::omega}})}});
    out.push_back({"mixed-eta-beta-zeta",
                   {eq(L::eta, {{+1, L::alpha}, {+1, L::xi}}),
                    eq(L::beta, {{-1, L::omega}, {+1, L::xi}}),
                    eq(L::zeta, {{+1, L::alpha}, {+1, L::omega}})}});
    out.push_back({"mixed-alpha-zeta-omega",
                   {eq(L::alpha, {{+1, L::eta}, {-1, L::xi}}),
                    eq(L::zeta, {{+1, L::eta}, {-1, L::beta}}),
                    eq(L::omega, {{+1, L::xi}, {-1, L::beta}})}});
    out.push_back({"mixed-alpha-xi-eta",
                   {eq(L::alpha, {{+1, L::zeta}, {-1, L::omega}}),
                    eq(L::xi, {{+1, L::omega}, {+1, L::beta}}),
                    eq(L::eta, {{+1, L::zeta}, {+1, L::beta}})}});
    return out;
}

}  // namespace

const std::vector<LetterSystem>& equivalent_systems() {
    static const std::vector<LetterSystem> systems = build_systems();
    return systems;
}

bool system_holds(const GroupRef& g, const LetterSystem& sys, const StructureTuple& t) {
    for (const LetterEquation& e : sys.equations) {
        Element acc = g->identity();
        for (const auto& [sign, letter] : e.rhs) {
            Element v = t[letter];
            acc = g->add(acc, sign > 0 ? v : g->neg(v));
        }
        if (t[e.lhs] != acc) return false;
    }
    return true;
}

SystemsCheckResult equivalent_systems_check(const GroupRef& g, int order_cap) {
    if (g->order() > order_cap) {
        std::ostringstream msg;
        msg << "equivalent_systems_check: order " << g->order() << " exceeds the |G|^6 scan cap " << order_cap;
        throw CorpusLimitError(msg.str());
    }
    const auto& systems = equivalent_systems();
    const int n = g->order();
    SystemsCheckResult res{true, {}, "", 0};
    StructureTuple t;
    // Lexicographic scan of Omega^6 in display order.
    std::array<Element, kLetterCount> idx{};
    while (true) {
        for (int i = 0; i < kLetterCount; ++i) t.v[i] = idx[i];
        ++res.tuples_checked;
        const bool first = system_holds(g, systems[0], t);
        for (size_t s = 1; s < systems.size(); ++s) {
            if (system_holds(g, systems[s], t) != first) {
                res.equivalent = false;
                res.witness = t;
                res.witness_systems = systems[0].label + " vs " + systems[s].label;
                return res;
            }
        }
        int pos = kLetterCount - 1;
        while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return res;
}

}  // namespace torsorlab
