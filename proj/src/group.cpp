#include "torsorlab/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace torsorlab {

GroupRef make_raw_group(std::string name, int n, std::vector<Element>&& flat);

namespace {

// Shared validated constructor: every builder funnels through here so the
// group axioms are checked even for generated tables.
GroupRef build_group(std::string name, int n, std::vector<Element> flat) {
    using Kind = CayleyValidationError::Kind;
    if (n < 1)
        throw CayleyValidationError(Kind::not_square, "group order must be at least 1");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element v = flat[static_cast<size_t>(i) * n + j];
            if (v < 0 || v >= n) {
                std::ostringstream msg;
                msg << "table entry at row " << i << ", column " << j << " is " << v
                    << ", outside 0.." << n - 1;
                throw CayleyValidationError(Kind::entry_out_of_range, msg.str(), i, j);
            }
        }

    std::vector<char> seen(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            Element v = flat[static_cast<size_t>(i) * n + j];
            if (seen[v]) {
                std::ostringstream msg;
                msg << "row " << i << " repeats value " << v << " at column " << j;
                throw CayleyValidationError(Kind::row_not_bijective, msg.str(), i, j);
            }
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            Element v = flat[static_cast<size_t>(i) * n + j];
            if (seen[v]) {
                std::ostringstream msg;
                msg << "column " << j << " repeats value " << v << " at row " << i;
                throw CayleyValidationError(Kind::column_not_bijective, msg.str(), i, j);
            }
            seen[v] = 1;
        }
    }

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = flat[static_cast<size_t>(e) * n + x] == x && flat[static_cast<size_t>(x) * n + e] == x;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0)
        throw CayleyValidationError(Kind::no_identity, "table has no two-sided identity element");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element ij = flat[static_cast<size_t>(i) * n + j];
            for (int k = 0; k < n; ++k) {
                Element left = flat[static_cast<size_t>(ij) * n + k];
                Element jk = flat[static_cast<size_t>(j) * n + k];
                Element right = flat[static_cast<size_t>(i) * n + jk];
                if (left != right) {
                    std::ostringstream msg;
                    msg << "associativity fails at triple (" << i << ", " << j << ", " << k << "): ("
                        << i << "+" << j << ")+" << k << " = " << left << " but " << i << "+(" << j
                        << "+" << k << ") = " << right;
                    throw CayleyValidationError(Kind::not_associative, msg.str(), i, j, k);
                }
            }
        }

    return make_raw_group(std::move(name), n, std::move(flat));
}

}  // namespace

// Assumes `flat` already passed build_group's checks.
GroupRef make_raw_group(std::string name, int n, std::vector<Element>&& flat) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->name_ = std::move(name);
    g->n_ = n;
    g->table_ = std::move(flat);

    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = g->table_[static_cast<size_t>(e) * n + x] == x;
        if (ok && g->table_[static_cast<size_t>(0) * n + e] == 0) {
            // e is a left identity and 0+e = 0; with validated tables e is the identity.
            bool two_sided = true;
            for (int x = 0; x < n && two_sided; ++x)
                two_sided = g->table_[static_cast<size_t>(x) * n + e] == x;
            if (two_sided) {
                g->identity_ = e;
                break;
            }
        }
    }

    g->inverse_.assign(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g->table_[static_cast<size_t>(x) * n + y] == g->identity_ &&
                g->table_[static_cast<size_t>(y) * n + x] == g->identity_) {
                g->inverse_[x] = y;
                break;
            }

    g->abelian_ = true;
    for (int x = 0; x < n && g->abelian_; ++x)
        for (int y = x + 1; y < n; ++y)
            if (g->table_[static_cast<size_t>(x) * n + y] != g->table_[static_cast<size_t>(y) * n + x]) {
                g->abelian_ = false;
                break;
            }
    return g;
}

GroupRef FiniteGroup::from_cayley_table(std::string name, const std::vector<std::vector<Element>>& table) {
    using Kind = CayleyValidationError::Kind;
    int n = static_cast<int>(table.size());
    if (n < 1)
        throw CayleyValidationError(Kind::not_square, "table is empty");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(table[i].size()) != n) {
            std::ostringstream msg;
            msg << "table is not square: row " << i << " has " << table[i].size() << " entries, expected " << n;
            throw CayleyValidationError(Kind::not_square, msg.str(), i);
        }
    std::vector<Element> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
    return build_group(std::move(name), n, std::move(flat));
}

int FiniteGroup::element_order(Element g) const {
    int m = 1;
    Element acc = g;
    while (acc != identity_) {
        acc = add(acc, g);
        ++m;
    }
    return m;
}

std::vector<Element> FiniteGroup::center_elements() const {
    std::vector<Element> out;
    for (Element x = 0; x < n_; ++x) {
        bool central = true;
        for (Element y = 0; y < n_ && central; ++y) central = add(x, y) == add(y, x);
        if (central) out.push_back(x);
    }
    return out;
}

GroupRef make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: order must be at least 1");
    std::vector<Element> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = (i + j) % n;
    return build_group("z" + std::to_string(n), n, std::move(flat));
}

GroupRef make_symmetric(int n) {
    if (n < 1) throw std::invalid_argument("make_symmetric: n must be at least 1");
    if (n > 5)
        throw CorpusLimitError("make_symmetric: capped at n <= 5 (order 120)");
    std::vector<std::vector<int>> perms;
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 0);
    do {
        perms.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));

    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) rank[perms[i]] = i;

    int order = static_cast<int>(perms.size());
    std::vector<Element> flat(static_cast<size_t>(order) * order);
    std::vector<int> comp(static_cast<size_t>(n));
    for (int s = 0; s < order; ++s)
        for (int t = 0; t < order; ++t) {
            for (int i = 0; i < n; ++i) comp[i] = perms[s][perms[t][i]];
            flat[static_cast<size_t>(s) * order + t] = rank.at(comp);
        }
    return build_group("s" + std::to_string(n), order, std::move(flat));
}

GroupRef make_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("make_dihedral: n must be at least 1");
    int order = 2 * n;
    auto rot = [n](int i) { return ((i % n) + n) % n; };
    std::vector<Element> flat(static_cast<size_t>(order) * order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            flat[static_cast<size_t>(i) * order + j] = rot(i + j);              // r^i r^j
            flat[static_cast<size_t>(i) * order + (n + j)] = n + rot(j - i);    // r^i (s r^j) = s r^(j-i)
            flat[static_cast<size_t>(n + i) * order + j] = n + rot(i + j);      // (s r^i) r^j
            flat[static_cast<size_t>(n + i) * order + (n + j)] = rot(j - i);    // (s r^i)(s r^j) = r^(j-i)
        }
    return build_group("d" + std::to_string(n), order, std::move(flat));
}

GroupRef make_quaternion() {
    // Elements 0..7 are 1, -1, i, -i, j, -j, k, -k: index 2*letter + sign with
    // letters 1, i, j, k. Letter products carry a sign: i*j = k, j*i = -k, ...
    const int letter_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int letter_sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    std::vector<Element> flat(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int lx = x / 2, sx = x % 2, ly = y / 2, sy = y % 2;
            int lz = letter_prod[lx][ly];
            int sz = (sx + sy + (letter_sign[lx][ly] < 0 ? 1 : 0)) % 2;
            flat[static_cast<size_t>(x) * 8 + y] = 2 * lz + sz;
        }
    return build_group("q8", 8, std::move(flat));
}

GroupRef make_direct_product(const GroupRef& g, const GroupRef& h) {
    int n1 = g->order(), n2 = h->order(), n = n1 * n2;
    std::vector<Element> flat(static_cast<size_t>(n) * n);
    for (int u1 = 0; u1 < n1; ++u1)
        for (int v1 = 0; v1 < n2; ++v1)
            for (int u2 = 0; u2 < n1; ++u2)
                for (int v2 = 0; v2 < n2; ++v2) {
                    int lhs = u1 * n2 + v1, rhs = u2 * n2 + v2;
                    flat[static_cast<size_t>(lhs) * n + rhs] = g->add(u1, u2) * n2 + h->add(v1, v2);
                }
    return build_group(g->name() + "x" + h->name(), n, std::move(flat));
}

GroupRef make_klein_four() {
    auto z2 = make_cyclic(2);
    auto k4 = make_direct_product(z2, z2);
    // Rebuild under the short name; table already validated.
    int n = k4->order();
    std::vector<Element> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = k4->add(i, j);
    return make_raw_group("k4", n, std::move(flat));
}

GroupRef opposite(const GroupRef& g) {
    int n = g->order();
    std::vector<Element> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = g->add(j, i);
    return make_raw_group(g->name() + "^op", n, std::move(flat));
}

void require_same_group(const GroupRef& a, const GroupRef& b, const char* where) {
    if (a.get() != b.get()) {
        std::ostringstream msg;
        msg << where << ": operands belong to different groups (" << a->name() << " vs " << b->name() << ")";
        throw std::invalid_argument(msg.str());
    }
}

namespace {

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the subgroup generated so far.
std::vector<Element> generating_sequence(const FiniteGroup& g) {
    int n = g.order();
    std::vector<char> closed(static_cast<size_t>(n), 0);
    closed[g.identity()] = 1;
    int closed_count = 1;
    std::vector<Element> gens;
    auto grow = [&](Element seed) {
        std::queue<Element> q;
        if (!closed[seed]) {
            closed[seed] = 1;
            ++closed_count;
            q.push(seed);
        }
        std::vector<Element> members;
        for (Element x = 0; x < n; ++x)
            if (closed[x]) members.push_back(x);
        while (!q.empty()) {
            Element x = q.front();
            q.pop();
            for (size_t m = 0; m < members.size(); ++m) {
                for (Element y : {g.add(x, members[m]), g.add(members[m], x)}) {
                    if (!closed[y]) {
                        closed[y] = 1;
                        ++closed_count;
                        members.push_back(y);
                        q.push(y);
                    }
                }
            }
            members.push_back(x);
        }
    };
    while (closed_count < n) {
        Element pick = -1;
        for (Element x = 0; x < n; ++x)
            if (!closed[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        grow(pick);
    }
    return gens;
}

// Extends gen -> image assignments to a full map by multiplying out words.
// Returns false on contradiction; on success `map` is total.
bool expand_hom(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                const std::vector<Element>& imgs, std::vector<Element>& map) {
    int n = g.order();
    map.assign(static_cast<size_t>(n), -1);
    map[g.identity()] = h.identity();
    std::vector<Element> known{g.identity()};
    std::queue<Element> q;
    q.push(g.identity());
    while (!q.empty()) {
        Element x = q.front();
        q.pop();
        for (size_t m = 0; m < gens.size(); ++m) {
            Element xg = g.add(x, gens[m]);
            Element yh = h.add(map[x], imgs[m]);
            if (map[xg] == -1) {
                map[xg] = yh;
                q.push(xg);
            } else if (map[xg] != yh) {
                return false;
            }
        }
    }
    for (Element x = 0; x < n; ++x)
        if (map[x] == -1) return false;  // gens failed to generate (cannot happen)
    return true;
}

bool is_full_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& map) {
    int n = g.order();
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (Element x = 0; x < n; ++x) {
        if (hit[map[x]]) return false;
        hit[map[x]] = 1;
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (map[g.add(x, y)] != h.add(map[x], map[y])) return false;
    return true;
}

// Backtracks over generator images; calls sink on each isomorphism found.
// Returns true if sink ever returned true (used for early-exit existence).
bool search_isomorphisms(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
                         std::vector<Element>& imgs, size_t depth,
                         const std::function<bool(const std::vector<Element>&)>& sink) {
    if (depth == gens.size()) {
        std::vector<Element> map;
        if (expand_hom(g, h, gens, imgs, map) && is_full_isomorphism(g, h, map)) return sink(map);
        return false;
    }
    int want = g.element_order(gens[depth]);
    for (Element cand = 0; cand < h.order(); ++cand) {
        if (h.element_order(cand) != want) continue;
        imgs[depth] = cand;
        if (search_isomorphisms(g, h, gens, imgs, depth + 1, sink)) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const GroupRef& g, const GroupRef& h) {
    if (g->order() != h->order()) return false;
    if (g->order() > 24)
        throw CorpusLimitError("is_isomorphic: brute-force search capped at order 24");
    if (g->is_abelian() != h->is_abelian()) return false;
    std::vector<int> og, oh;
    for (Element x = 0; x < g->order(); ++x) {
        og.push_back(g->element_order(x));
        oh.push_back(h->element_order(x));
    }
    std::sort(og.begin(), og.end());
    std::sort(oh.begin(), oh.end());
    if (og != oh) return false;

    auto gens = generating_sequence(*g);
    std::vector<Element> imgs(gens.size(), 0);
    return search_isomorphisms(*g, *h, gens, imgs, 0, [](const std::vector<Element>&) { return true; });
}

AutomorphismGroup automorphism_group(const GroupRef& g) {
    if (g->order() > 8)
        throw CorpusLimitError("automorphism_group: brute-force enumeration capped at order 8");
    auto gens = generating_sequence(*g);
    std::vector<Element> imgs(gens.size(), 0);
    std::vector<std::vector<Element>> autos;
    search_isomorphisms(*g, *g, gens, imgs, 0, [&](const std::vector<Element>& map) {
        autos.push_back(map);
        return false;  // keep enumerating
    });
    std::sort(autos.begin(), autos.end());

    std::map<std::vector<Element>, int> index;
    for (int i = 0; i < static_cast<int>(autos.size()); ++i) index[autos[i]] = i;
    int m = static_cast<int>(autos.size());
    std::vector<Element> flat(static_cast<size_t>(m) * m);
    std::vector<Element> comp(static_cast<size_t>(g->order()));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            for (Element x = 0; x < g->order(); ++x) comp[x] = autos[a][autos[b][x]];
            flat[static_cast<size_t>(a) * m + b] = index.at(comp);
        }
    AutomorphismGroup out;
    out.group = make_raw_group("aut(" + g->name() + ")", m, std::move(flat));
    out.elements = std::move(autos);
    return out;
}

}  // namespace torsorlab
