#include "torsorlab/subset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torsorlab {

Subset::Subset(GroupRef g) : group_(std::move(g)), n_(group_->order()) {
    words_.assign((static_cast<size_t>(n_) + 63) / 64, 0);
}

Subset Subset::full(GroupRef g) {
    Subset s(std::move(g));
    for (Element e = 0; e < s.n_; ++e) s.insert(e);
    return s;
}

Subset Subset::singleton(GroupRef g, Element e) {
    Subset s(std::move(g));
    s.insert(e);
    return s;
}

Subset Subset::of(GroupRef g, std::initializer_list<Element> elems) {
    Subset s(std::move(g));
    for (Element e : elems) s.insert(e);
    return s;
}

Subset Subset::from_elements(GroupRef g, const std::vector<Element>& elems) {
    Subset s(std::move(g));
    for (Element e : elems) s.insert(e);
    return s;
}

void Subset::insert(Element e) {
    if (e < 0 || e >= n_) throw std::out_of_range("Subset::insert: element index out of range");
    words_[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63);
}

void Subset::erase(Element e) {
    if (e < 0 || e >= n_) throw std::out_of_range("Subset::erase: element index out of range");
    words_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63));
}

int Subset::size() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
}

bool Subset::is_empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

std::vector<Element> Subset::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<size_t>(size()));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            int bit = __builtin_ctzll(w);
            out.push_back(static_cast<Element>(wi * 64 + bit));
            w &= w - 1;
        }
    }
    return out;
}

bool Subset::operator==(const Subset& other) const {
    require_same_group(group_, other.group_, "Subset::operator==");
    return words_ == other.words_;
}

Subset Subset::operator&(const Subset& other) const {
    require_same_group(group_, other.group_, "Subset::operator&");
    Subset out(group_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
}

Subset Subset::operator|(const Subset& other) const {
    require_same_group(group_, other.group_, "Subset::operator|");
    Subset out(group_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
    return out;
}

bool Subset::is_subset_of(const Subset& other) const {
    require_same_group(group_, other.group_, "Subset::is_subset_of");
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

uint64_t Subset::mask64() const {
    if (n_ > 64) throw CorpusLimitError("Subset::mask64: group order exceeds 64");
    return words_[0];
}

Subset Subset::from_mask64(GroupRef g, uint64_t mask) {
    Subset s(std::move(g));
    if (s.n_ > 64) throw CorpusLimitError("Subset::from_mask64: group order exceeds 64");
    if (s.n_ < 64 && (mask >> s.n_)) throw std::out_of_range("Subset::from_mask64: mask has bits outside the group");
    s.words_[0] = mask;
    return s;
}

bool subset_less(const Subset& a, const Subset& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    auto ea = a.elements(), eb = b.elements();
    return ea < eb;
}

Subset sumset(const Subset& x, const Subset& y) {
    require_same_group(x.group(), y.group(), "sumset");
    const FiniteGroup& g = *x.group();
    Subset out(x.group());
    auto xs = x.elements();
    auto ys = y.elements();
    for (Element xi : xs)
        for (Element eta : ys) out.insert(g.add(xi, eta));
    return out;
}

Subset negate(const Subset& x) {
    const FiniteGroup& g = *x.group();
    Subset out(x.group());
    for (Element xi : x.elements()) out.insert(g.neg(xi));
    return out;
}

Subset left_translate(Element gelem, const Subset& x) {
    const FiniteGroup& g = *x.group();
    Subset out(x.group());
    for (Element xi : x.elements()) out.insert(g.add(gelem, xi));
    return out;
}

Subset right_translate(const Subset& x, Element gelem) {
    const FiniteGroup& g = *x.group();
    Subset out(x.group());
    for (Element xi : x.elements()) out.insert(g.add(xi, gelem));
    return out;
}

bool is_left_transversal(const Subset& x, const Subset& y) {
    require_same_group(x.group(), y.group(), "is_left_transversal");
    const FiniteGroup& g = *x.group();
    int n = g.order();
    if (static_cast<long long>(x.size()) * y.size() != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (Element xi : x.elements())
        for (Element eta : y.elements()) {
            Element w = g.add(xi, eta);
            if (seen[w]) return false;
            seen[w] = 1;
        }
    return true;
}

bool is_subgroup(const Subset& x) {
    const FiniteGroup& g = *x.group();
    if (!x.contains(g.identity())) return false;
    auto xs = x.elements();
    for (Element a : xs) {
        if (!x.contains(g.neg(a))) return false;
        for (Element b : xs)
            if (!x.contains(g.add(a, b))) return false;
    }
    return true;
}

namespace {

// Closure of a subset under the group operation (and thus inverses, the
// group being finite).
Subset subgroup_closure(const Subset& seed) {
    const FiniteGroup& g = *seed.group();
    Subset cur(seed.group());
    cur.insert(g.identity());
    cur = cur | seed;
    while (true) {
        Subset next = cur;
        auto cs = cur.elements();
        for (Element a : cs)
            for (Element b : cs) next.insert(g.add(a, b));
        if (next == cur) return cur;
        cur = next;
    }
}

}  // namespace

std::vector<Subset> grassmannian(const GroupRef& g, int order_cap) {
    if (g->order() > order_cap) {
        std::ostringstream msg;
        msg << "grassmannian: order " << g->order() << " exceeds the exhaustive-subgroup cap " << order_cap;
        throw CorpusLimitError(msg.str());
    }
    std::set<std::vector<uint64_t>> seen;
    std::vector<Subset> out;
    auto push = [&](const Subset& s) {
        if (seen.insert(s.words()).second) {
            out.push_back(s);
            return true;
        }
        return false;
    };

    push(subgroup_closure(Subset::empty(g)));
    // Cyclic subgroups, then joins with one more generator until stable.
    std::vector<Subset> frontier;
    for (Element e = 0; e < g->order(); ++e) {
        Subset s = subgroup_closure(Subset::singleton(g, e));
        if (push(s)) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<Subset> next;
        for (const Subset& h : frontier)
            for (Element e = 0; e < g->order(); ++e) {
                if (h.contains(e)) continue;
                Subset ext = h;
                ext.insert(e);
                Subset s = subgroup_closure(ext);
                if (push(s)) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), subset_less);
    return out;
}

namespace {

std::vector<Subset> cosets_impl(const GroupRef& g, const Subset& b, bool left, const char* where) {
    if (!is_subgroup(b)) throw std::invalid_argument(std::string(where) + ": operand is not a subgroup");
    int n = g->order();
    std::vector<char> covered(static_cast<size_t>(n), 0);
    std::vector<Subset> out;
    for (Element w = 0; w < n; ++w) {
        if (covered[w]) continue;
        Subset coset = left ? left_translate(w, b) : right_translate(b, w);
        for (Element e : coset.elements()) covered[e] = 1;
        out.push_back(coset);
    }
    return out;  // scan order makes cosets ordered by minimal element
}

}  // namespace

std::vector<Subset> left_cosets(const GroupRef& g, const Subset& b) {
    require_same_group(g, b.group(), "left_cosets");
    return cosets_impl(g, b, true, "left_cosets");
}

std::vector<Subset> right_cosets(const GroupRef& g, const Subset& a) {
    require_same_group(g, a.group(), "right_cosets");
    return cosets_impl(g, a, false, "right_cosets");
}

namespace {

// Exact-cover enumeration of all x with x ⊤ b (left) or a ⊤ x (right):
// repeatedly pick the smallest uncovered element w; each candidate
// representative r covering w contributes the block r + b (resp. a + r).
void transversal_search(const FiniteGroup& g, const std::vector<Element>& block_elems, bool left,
                        std::vector<char>& covered, int covered_count, Subset& partial,
                        std::vector<Subset>& out, long long count_cap, const char* where) {
    int n = g.order();
    if (covered_count == n) {
        if (static_cast<long long>(out.size()) >= count_cap)
            throw CorpusLimitError(std::string(where) + ": transversal count exceeds enumeration cap");
        out.push_back(partial);
        return;
    }
    Element w = 0;
    while (covered[w]) ++w;
    // Candidates r with w in r+b: r = w + (-beta); with w in b+r: r = (-beta) + w.
    for (Element beta : block_elems) {
        Element r = left ? g.add(w, g.neg(beta)) : g.add(g.neg(beta), w);
        // Block of r must avoid everything covered so far.
        std::vector<Element> block;
        block.reserve(block_elems.size());
        bool ok = true;
        for (Element be : block_elems) {
            Element e = left ? g.add(r, be) : g.add(be, r);
            if (covered[e]) {
                ok = false;
                break;
            }
            block.push_back(e);
        }
        if (!ok) continue;
        for (Element e : block) covered[e] = 1;
        partial.insert(r);
        transversal_search(g, block_elems, left, covered, covered_count + static_cast<int>(block.size()),
                           partial, out, count_cap, where);
        partial.erase(r);
        for (Element e : block) covered[e] = 0;
    }
}

std::vector<Subset> transversal_set_impl(const GroupRef& g, const Subset& b, bool left,
                                         long long count_cap, const char* where) {
    require_same_group(g, b.group(), where);
    std::vector<Subset> out;
    if (b.is_empty()) return out;  // nothing covers anything
    if (g->order() % b.size() != 0) return out;
    std::vector<char> covered(static_cast<size_t>(g->order()), 0);
    Subset partial(g);
    auto blocks = b.elements();
    transversal_search(*g, blocks, left, covered, 0, partial, out, count_cap, where);
    std::sort(out.begin(), out.end(), subset_less);
    return out;
}

}  // namespace

std::vector<Subset> left_transversal_set(const GroupRef& g, const Subset& b, long long count_cap) {
    return transversal_set_impl(g, b, true, count_cap, "left_transversal_set");
}

std::vector<Subset> right_transversal_set(const GroupRef& g, const Subset& a, long long count_cap) {
    return transversal_set_impl(g, a, false, count_cap, "right_transversal_set");
}

MapGraph::MapGraph(Subset dom, Subset cod) : domain(std::move(dom)), codomain(std::move(cod)) {
    require_same_group(domain.group(), codomain.group(), "MapGraph");
    value.assign(static_cast<size_t>(domain.universe_size()), -1);
}

void MapGraph::set(Element e, Element v) {
    if (!domain.contains(e)) throw std::domain_error("MapGraph::set: element outside the domain");
    if (!codomain.contains(v)) throw std::domain_error("MapGraph::set: value outside the codomain");
    value[e] = v;
}

Subset graph_of_map(const MapGraph& f, GraphSide side) {
    const FiniteGroup& g = *f.domain.group();
    Subset out(f.domain.group());
    for (Element eta : f.domain.elements()) {
        if (f.value[eta] < 0) throw std::domain_error("graph_of_map: map is not total on its domain");
        out.insert(side == GraphSide::left ? g.add(eta, f.value[eta]) : g.add(f.value[eta], eta));
    }
    return out;
}

MapGraph map_from_transversal(const Subset& x, const Subset& y, const Subset& b) {
    require_same_group(x.group(), y.group(), "map_from_transversal");
    require_same_group(x.group(), b.group(), "map_from_transversal");
    if (!is_left_transversal(x, b))
        throw std::invalid_argument("map_from_transversal: first operand is not left-transversal to b");
    if (!is_left_transversal(y, b))
        throw std::invalid_argument("map_from_transversal: second operand is not left-transversal to b");
    const FiniteGroup& g = *x.group();
    MapGraph f(y, b);
    for (Element eta : y.elements()) {
        // The unique xi in x inside eta + b; F(eta) = -eta + xi.
        Element found = -1;
        for (Element beta : b.elements()) {
            Element cand = g.add(eta, beta);
            if (x.contains(cand)) {
                if (found >= 0)
                    throw std::invalid_argument("map_from_transversal: representative not unique");
                found = cand;
            }
        }
        if (found < 0) throw std::invalid_argument("map_from_transversal: no representative in x for a coset of y");
        f.value[eta] = g.add(g.neg(eta), found);
    }
    return f;
}

MapGraph compose(const MapGraph& g2, const MapGraph& f) {
    require_same_group(g2.domain.group(), f.domain.group(), "compose(MapGraph)");
    MapGraph out(f.domain, g2.codomain);
    for (Element e : f.domain.elements()) {
        Element mid = f.value[e];
        if (mid < 0) throw std::domain_error("compose(MapGraph): inner map is not total on its domain");
        if (!g2.domain.contains(mid))
            throw std::domain_error("compose(MapGraph): inner value escapes the outer domain");
        out.value[e] = g2.value[mid];
        if (out.value[e] < 0) throw std::domain_error("compose(MapGraph): outer map is not total where needed");
    }
    return out;
}

MapGraph identity_on(const Subset& s) {
    MapGraph f(s, s);
    for (Element e : s.elements()) f.value[e] = e;
    return f;
}

std::string format_subset(const Subset& s) {
    if (s.is_empty()) return "-";
    std::ostringstream out;
    bool first = true;
    for (Element e : s.elements()) {
        if (!first) out << ",";
        out << e;
        first = false;
    }
    return out.str();
}

Subset parse_subset(const GroupRef& g, const std::string& literal) {
    Subset out(g);
    if (literal.empty() || literal == "-") return out;
    size_t pos = 0;
    while (pos <= literal.size()) {
        size_t comma = literal.find(',', pos);
        std::string tok = literal.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("parse_subset: empty entry in '" + literal + "'");
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_subset: '" + tok + "' is not an element index");
        }
        if (used != tok.size()) throw std::invalid_argument("parse_subset: '" + tok + "' is not an element index");
        if (v < 0 || v >= g->order())
            throw std::invalid_argument("parse_subset: element " + tok + " outside 0.." +
                                        std::to_string(g->order() - 1) + " for group " + g->name());
        out.insert(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<Subset> all_subsets(const GroupRef& g, int order_cap_log2) {
    int n = g->order();
    if (n > order_cap_log2)
        throw CorpusLimitError("all_subsets: 2^" + std::to_string(n) + " subsets exceed the enumeration cap");
    std::vector<Subset> out;
    out.reserve(size_t{1} << n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) out.push_back(Subset::from_mask64(g, mask));
    return out;
}

bool is_bijective(const MapGraph& f) {
    if (f.domain.size() != f.codomain.size()) return false;
    Subset image(f.domain.group());
    for (Element e : f.domain.elements()) {
        if (f.value[e] < 0) throw std::domain_error("is_bijective: map is not total on its domain");
        if (image.contains(f.value[e])) return false;
        image.insert(f.value[e]);
    }
    return image == f.codomain;
}

}  // namespace torsorlab
