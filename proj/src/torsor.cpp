#include "torsorlab/torsor.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "torsorlab/rng.hpp"

namespace torsorlab {

TernaryLaw balanced_law(const Subset& a, const Subset& b) {
    return {"gamma(a=" + format_subset(a) + ",b=" + format_subset(b) + ")",
            [a, b](const Subset& x, const Subset& y, const Subset& z) { return gamma(x, a, y, b, z); }};
}

TernaryLaw balanced_check_law(const Subset& a, const Subset& b) {
    return {"gamma_check(a=" + format_subset(a) + ",b=" + format_subset(b) + ")",
            [a, b](const Subset& x, const Subset& y, const Subset& z) { return gamma_check(x, a, y, b, z); }};
}

TernaryLaw unbalanced_law(const Subset& b) {
    return {"sigma(b=" + format_subset(b) + ")",
            [b](const Subset& x, const Subset& y, const Subset& z) { return sigma(b, x, y, z); }};
}

TernaryLaw unbalanced_check_law(const Subset& b) {
    return {"sigma_check(b=" + format_subset(b) + ")",
            [b](const Subset& x, const Subset& y, const Subset& z) { return sigma_check(b, x, y, z); }};
}

TernaryLaw opposite_law(const TernaryLaw& inner) {
    auto eval = inner.eval;
    return {"opp(" + inner.label + ")",
            [eval](const Subset& x, const Subset& y, const Subset& z) { return eval(z, y, x); }};
}

namespace {

// Interned subset pool with a memo table for ternary law values; keeps large
// scans away from repeated subset evaluation.
class MemoLaw {
  public:
    explicit MemoLaw(const TernaryLaw& law) : law_(law) {}

    int intern(const Subset& s) {
        auto [it, inserted] = ids_.try_emplace(s.words(), static_cast<int>(pool_.size()));
        if (inserted) pool_.push_back(s);
        return it->second;
    }

    int eval(int i, int j, int k) {
        uint64_t key = (static_cast<uint64_t>(i) << 42) | (static_cast<uint64_t>(j) << 21) |
                       static_cast<uint64_t>(k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int id = intern(law_.eval(pool_[i], pool_[j], pool_[k]));
        memo_.emplace(key, id);
        return id;
    }

    const Subset& subset(int id) const { return pool_[id]; }

  private:
    const TernaryLaw& law_;
    std::map<std::vector<uint64_t>, int> ids_;
    std::vector<Subset> pool_;
    std::unordered_map<uint64_t, int> memo_;
};

long long pow_capped(long long base, int exp, long long cap) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / std::max<long long>(base, 1)) return cap + 1;
        v *= base;
    }
    return v;
}

std::vector<Subset> resolve_domain(const std::vector<Subset>& domain, const GroupRef& g, bool need_list) {
    if (!domain.empty()) return domain;
    if (!need_list) return {};
    return all_subsets(g);
}

void record_failure(LawVerdict& v, const char* identity, std::vector<Subset> witness,
                    std::vector<Subset> sides) {
    v.holds = false;
    v.failed_identity = identity;
    v.witness = std::move(witness);
    v.sides = std::move(sides);
}

}  // namespace

LawVerdict check_para_associativity(const TernaryLaw& law, const std::vector<Subset>& domain,
                                    const GroupRef& g, const CheckMode& mode) {
    LawVerdict verdict;
    const long long full_count =
        domain.empty() ? pow_capped(2, g->order(), mode.exhaustive_budget) : static_cast<long long>(domain.size());
    const long long tuple_count = domain.empty() && full_count > mode.exhaustive_budget
                                      ? mode.exhaustive_budget + 1
                                      : pow_capped(full_count, 5, mode.exhaustive_budget);
    const bool exhaustive = mode.exhaustive && tuple_count <= mode.exhaustive_budget;

    if (exhaustive) {
        verdict.mode = "exhaustive";
        std::vector<Subset> dom = resolve_domain(domain, g, true);
        const int m = static_cast<int>(dom.size());
        if (m == 0) return verdict;
        MemoLaw memo(law);
        std::vector<int> id(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) id[i] = memo.intern(dom[i]);

        // Dense index table over the domain; -1 marks results escaping it.
        std::vector<int32_t> table(static_cast<size_t>(m) * m * m);
        std::vector<int32_t> to_dom(static_cast<size_t>(m), 0);
        std::map<int, int> pool_to_dom;
        for (int i = 0; i < m; ++i) pool_to_dom[id[i]] = i;
        bool closed = true;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    int res = memo.eval(id[i], id[j], id[k]);
                    auto it = pool_to_dom.find(res);
                    int32_t idx = it == pool_to_dom.end() ? -1 : it->second;
                    if (idx < 0) closed = false;
                    table[(static_cast<size_t>(i) * m + j) * m + k] = idx;
                }

        auto slow_value = [&](int xi, int yi, int zi, int ui, int vi, int which) {
            // which: 0 = (x y (z u v)), 1 = (x (u z y) v), 2 = ((x y z) u v)
            if (which == 0) return memo.eval(id[xi], id[yi], memo.eval(id[zi], id[ui], id[vi]));
            if (which == 1) return memo.eval(id[xi], memo.eval(id[ui], id[zi], id[yi]), id[vi]);
            return memo.eval(memo.eval(id[xi], id[yi], id[zi]), id[ui], id[vi]);
        };

        for (int xi = 0; xi < m; ++xi)
            for (int yi = 0; yi < m; ++yi)
                for (int zi = 0; zi < m; ++zi)
                    for (int ui = 0; ui < m; ++ui)
                        for (int vi = 0; vi < m; ++vi) {
                            ++verdict.cases;
                            int lhs, mid, rhs;
                            if (closed) {
                                auto at = [&](int p, int q, int r) {
                                    return table[(static_cast<size_t>(p) * m + q) * m + r];
                                };
                                lhs = at(xi, yi, at(zi, ui, vi));
                                mid = at(xi, at(ui, zi, yi), vi);
                                rhs = at(at(xi, yi, zi), ui, vi);
                            } else {
                                lhs = slow_value(xi, yi, zi, ui, vi, 0);
                                mid = slow_value(xi, yi, zi, ui, vi, 1);
                                rhs = slow_value(xi, yi, zi, ui, vi, 2);
                            }
                            if (lhs != mid || lhs != rhs) {
                                auto side = [&](int idx) {
                                    return closed ? dom[idx] : memo.subset(idx);
                                };
                                record_failure(
                                    verdict,
                                    lhs != mid ? "(x y (z u v)) vs (x (u z y) v)" : "(x y (z u v)) vs ((x y z) u v)",
                                    {dom[xi], dom[yi], dom[zi], dom[ui], dom[vi]},
                                    {side(lhs), side(mid), side(rhs)});
                                return verdict;
                            }
                        }
        return verdict;
    }

    verdict.mode = "seeded(" + std::to_string(mode.samples) + ")";
    CheckRng rng(mode.seed, mode.stream_label);
    const bool from_list = !domain.empty();
    auto draw = [&]() {
        if (from_list) return domain[rng.below(domain.size())];
        return rng.subset(g);
    };
    for (long long s = 0; s < mode.samples; ++s) {
        Subset x = draw(), y = draw(), z = draw(), u = draw(), v = draw();
        ++verdict.cases;
        Subset lhs = law.eval(x, y, law.eval(z, u, v));
        Subset mid = law.eval(x, law.eval(u, z, y), v);
        if (lhs != mid) {
            record_failure(verdict, "(x y (z u v)) vs (x (u z y) v)", {x, y, z, u, v}, {lhs, mid});
            return verdict;
        }
        Subset rhs = law.eval(law.eval(x, y, z), u, v);
        if (lhs != rhs) {
            record_failure(verdict, "(x y (z u v)) vs ((x y z) u v)", {x, y, z, u, v}, {lhs, rhs});
            return verdict;
        }
    }
    return verdict;
}

LawVerdict check_idempotent(const TernaryLaw& law, const std::vector<Subset>& domain, const GroupRef& g,
                            const CheckMode& mode) {
    LawVerdict verdict;
    const long long m =
        domain.empty() ? pow_capped(2, g->order(), mode.exhaustive_budget) : static_cast<long long>(domain.size());
    const bool exhaustive = mode.exhaustive && pow_capped(m, 2, mode.exhaustive_budget) <= mode.exhaustive_budget;

    auto run_pair = [&](const Subset& x, const Subset& y) -> bool {
        ++verdict.cases;
        Subset left = law.eval(x, x, y);
        if (left != y) {
            record_failure(verdict, "(x x y) vs y", {x, y}, {left});
            return false;
        }
        Subset right = law.eval(y, x, x);
        if (right != y) {
            record_failure(verdict, "(y x x) vs y", {x, y}, {right});
            return false;
        }
        return true;
    };

    if (exhaustive) {
        verdict.mode = "exhaustive";
        std::vector<Subset> dom = resolve_domain(domain, g, true);
        for (const Subset& x : dom)
            for (const Subset& y : dom)
                if (!run_pair(x, y)) return verdict;
        return verdict;
    }
    verdict.mode = "seeded(" + std::to_string(mode.samples) + ")";
    CheckRng rng(mode.seed, mode.stream_label);
    const bool from_list = !domain.empty();
    auto draw = [&]() {
        if (from_list) return domain[rng.below(domain.size())];
        return rng.subset(g);
    };
    for (long long s = 0; s < mode.samples; ++s)
        if (!run_pair(draw(), draw())) return verdict;
    return verdict;
}

int TorsorCarrier::index_of(const Subset& s) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == s) return i;
    return -1;
}

TorsorCarrier make_carrier(std::string label, const GroupRef& g, std::vector<Subset> elements,
                           TernaryLaw law, long long table_budget) {
    TorsorCarrier c;
    c.label = std::move(label);
    c.group = g;
    std::sort(elements.begin(), elements.end(), subset_less);
    c.elements = std::move(elements);
    c.law = std::move(law);

    const int m = c.size();
    if (m == 0) {
        c.closure_checked = true;
        c.closed = true;
        return c;
    }
    if (static_cast<long long>(m) * m * m > table_budget) return c;  // closure left unchecked, flagged

    std::map<std::vector<uint64_t>, int> index;
    for (int i = 0; i < m; ++i) index[c.elements[i].words()] = i;
    c.table.assign(static_cast<size_t>(m) * m * m, -1);
    c.closed = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                Subset r = c.law.eval(c.elements[i], c.elements[j], c.elements[k]);
                auto it = index.find(r.words());
                int32_t idx = it == index.end() ? -1 : it->second;
                if (idx < 0 && c.closed) {
                    c.closed = false;
                    c.escape_witness = {i, j, k};
                }
                c.table[(static_cast<size_t>(i) * m + j) * m + k] = idx;
            }
    c.closure_checked = true;
    return c;
}

TorsorCarrier carrier_U_ab(const Subset& a, const Subset& b, long long count_cap, long long table_budget) {
    require_same_group(a.group(), b.group(), "carrier_U_ab");
    const GroupRef& g = a.group();
    std::vector<Subset> elems;
    if (!b.is_empty() && !a.is_empty() && a.size() == b.size() && g->order() % b.size() == 0) {
        for (Subset& x : left_transversal_set(g, b, count_cap))
            if (is_left_transversal(a, x)) elems.push_back(std::move(x));
    }
    return make_carrier("U(a=" + format_subset(a) + ",b=" + format_subset(b) + ")", g, std::move(elems),
                        balanced_law(a, b), table_budget);
}

TorsorCarrier carrier_U_b(const Subset& b, long long count_cap, long long table_budget) {
    const GroupRef& g = b.group();
    return make_carrier("U(b=" + format_subset(b) + ")", g, left_transversal_set(g, b, count_cap),
                        unbalanced_law(b), table_budget);
}

GroupRef group_from_basepoint(const TorsorCarrier& carrier, const Subset& basepoint) {
    const int m = carrier.size();
    if (m == 0) throw TorsorError("group_from_basepoint: carrier is empty");
    int e = carrier.index_of(basepoint);
    if (e < 0)
        throw TorsorError("group_from_basepoint: basepoint " + format_subset(basepoint) +
                          " is not a carrier element of " + carrier.label);
    std::map<std::vector<uint64_t>, int> index;
    for (int i = 0; i < m; ++i) index[carrier.elements[i].words()] = i;
    std::vector<std::vector<Element>> table(static_cast<size_t>(m), std::vector<Element>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Subset r = carrier.law.eval(carrier.elements[i], basepoint, carrier.elements[j]);
            auto it = index.find(r.words());
            if (it == index.end()) {
                std::ostringstream msg;
                msg << "group_from_basepoint: product (" << format_subset(carrier.elements[i]) << " * "
                    << format_subset(carrier.elements[j]) << ") = " << format_subset(r)
                    << " escapes carrier " << carrier.label;
                throw TorsorError(msg.str());
            }
            table[i][j] = it->second;
        }
    return FiniteGroup::from_cayley_table(carrier.label + "@" + format_subset(basepoint), table);
}

Subset compose_relations(const Subset& x, const Subset& y, const Subset& z, const Subset& a,
                         const Subset& b) {
    require_same_group(x.group(), a.group(), "compose_relations");
    require_same_group(y.group(), a.group(), "compose_relations");
    require_same_group(z.group(), a.group(), "compose_relations");
    require_same_group(b.group(), a.group(), "compose_relations");
    if (!is_left_transversal(a, b))
        throw std::invalid_argument("compose_relations: requires a ⊤ b so subsets decode as relations");
    const FiniteGroup& g = *a.group();
    const auto as = a.elements();
    const auto bs = b.elements();
    const int na = static_cast<int>(as.size()), nb = static_cast<int>(bs.size());

    auto rel = [&](const Subset& s) {
        std::vector<char> mat(static_cast<size_t>(na) * nb, 0);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) mat[static_cast<size_t>(i) * nb + j] = s.contains(g.add(as[i], bs[j]));
        return mat;
    };
    auto relx = rel(x), rely = rel(y), relz = rel(z);

    // mid[u][t] = exists v with (u, v) in x and (t, v) in y.
    std::vector<char> mid(static_cast<size_t>(na) * na, 0);
    for (int u = 0; u < na; ++u)
        for (int t = 0; t < na; ++t)
            for (int v = 0; v < nb; ++v)
                if (relx[static_cast<size_t>(u) * nb + v] && rely[static_cast<size_t>(t) * nb + v]) {
                    mid[static_cast<size_t>(u) * na + t] = 1;
                    break;
                }

    Subset out(a.group());
    for (int u = 0; u < na; ++u)
        for (int w = 0; w < nb; ++w) {
            bool hit = false;
            for (int t = 0; t < na && !hit; ++t)
                hit = mid[static_cast<size_t>(u) * na + t] && relz[static_cast<size_t>(t) * nb + w];
            if (hit) out.insert(g.add(as[u], bs[w]));
        }
    return out;
}

GroupRef subgroup_as_group(const Subset& a) {
    if (!is_subgroup(a)) throw std::invalid_argument("subgroup_as_group: subset is not a subgroup");
    const FiniteGroup& g = *a.group();
    auto elems = a.elements();
    std::map<Element, int> index;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;
    int m = static_cast<int>(elems.size());
    std::vector<std::vector<Element>> table(static_cast<size_t>(m), std::vector<Element>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = index.at(g.add(elems[i], elems[j]));
    return FiniteGroup::from_cayley_table("sub(" + g.name() + ":" + format_subset(a) + ")", table);
}

TransversalTripleReport check_transversal_triple(const Subset& a, const Subset& b, const Subset& c) {
    require_same_group(a.group(), b.group(), "check_transversal_triple");
    require_same_group(a.group(), c.group(), "check_transversal_triple");
    const GroupRef& g = a.group();
    TransversalTripleReport r;
    r.all_subgroups = is_subgroup(a) && is_subgroup(b) && is_subgroup(c);
    r.ab_commute = true;
    for (Element alpha : a.elements())
        for (Element beta : b.elements())
            if (g->add(alpha, beta) != g->add(beta, alpha)) {
                r.ab_commute = false;
                break;
            }
    r.top_ab = is_left_transversal(a, b);
    r.top_bc = is_left_transversal(b, c);
    r.top_ca = is_left_transversal(c, a);
    r.is_triple = r.all_subgroups && r.ab_commute && r.top_ab && r.top_bc && r.top_ca;

    if (static_cast<long long>(a.size()) * a.size() != g->order()) {
        r.criterion_checked = true;
        r.product_criterion = false;
    } else if (r.all_subgroups && g->order() <= 24) {
        auto ga = subgroup_as_group(a);
        r.product_criterion = is_isomorphic(g, make_direct_product(ga, ga));
        r.criterion_checked = true;
    } else {
        r.note += "product criterion skipped (order cap or non-subgroup); ";
    }

    if (r.is_triple && a.size() <= 8) {
        TorsorCarrier u = carrier_U_ab(a, b);
        std::vector<Subset> sections;
        for (const Subset& s : u.elements)
            if (is_subgroup(s)) sections.push_back(s);
        r.subgroup_section_count = static_cast<int>(sections.size());
        TorsorCarrier usub = make_carrier(u.label + "|subgroups", g, sections, balanced_law(a, b));
        try {
            GroupRef based = group_from_basepoint(usub, c);
            auto aut = automorphism_group(subgroup_as_group(a));
            r.aut_model_ok = based->order() == aut.group->order() && is_isomorphic(based, aut.group);
            r.aut_model_checked = true;
        } catch (const TorsorError& e) {
            r.aut_model_checked = true;
            r.aut_model_ok = false;
            r.note += std::string("automorphism model failed: ") + e.what() + "; ";
        }
    } else if (r.is_triple) {
        r.note += "automorphism model skipped (|a| > 8); ";
    }
    return r;
}

std::vector<std::array<int32_t, 4>> torsor_graph(const TorsorCarrier& carrier) {
    if (!carrier.closure_checked || !carrier.closed || (carrier.size() > 0 && carrier.table.empty()))
        throw TorsorError("torsor_graph: carrier " + carrier.label + " has no closed law table");
    std::vector<std::array<int32_t, 4>> out;
    const int m = carrier.size();
    out.reserve(static_cast<size_t>(m) * m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) out.push_back({i, j, k, carrier.at(i, j, k)});
    return out;
}

}  // namespace torsorlab
