#ifndef TORSORLAB_SUBSET_HPP
#define TORSORLAB_SUBSET_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "torsorlab/group.hpp"

namespace torsorlab {

/**
 * Subset of a fixed finite group, stored as a bitset over element indices.
 *
 * Every subset keeps a handle to its group; binary operations require both
 * operands to come from the same handle. The empty subset is legal everywhere
 * and existential definitions treat it vacuously.
 */
class Subset {
  public:
    explicit Subset(GroupRef g);

    static Subset empty(GroupRef g) { return Subset(std::move(g)); }
    static Subset full(GroupRef g);
    static Subset singleton(GroupRef g, Element e);
    static Subset of(GroupRef g, std::initializer_list<Element> elems);
    static Subset from_elements(GroupRef g, const std::vector<Element>& elems);

    const GroupRef& group() const { return group_; }
    int universe_size() const { return n_; }

    bool contains(Element e) const { return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u; }
    void insert(Element e);
    void erase(Element e);

    int size() const;
    bool is_empty() const;
    std::vector<Element> elements() const;

    bool operator==(const Subset& other) const;
    bool operator!=(const Subset& other) const { return !(*this == other); }

    Subset operator&(const Subset& other) const;  // intersection, the lattice meet
    Subset operator|(const Subset& other) const;  // union
    bool is_subset_of(const Subset& other) const;

    /// Bit pattern as a single word; requires |group| <= 64.
    uint64_t mask64() const;
    static Subset from_mask64(GroupRef g, uint64_t mask);

    const std::vector<uint64_t>& words() const { return words_; }

  private:
    GroupRef group_;
    int n_;
    std::vector<uint64_t> words_;
};

/// Canonical display/report order: by size, then lexicographically on the
/// sorted element lists.
bool subset_less(const Subset& a, const Subset& b);

/// x + y = { xi + eta : xi in x, eta in y }. The lattice join on subgroups.
Subset sumset(const Subset& x, const Subset& y);

/// -x = { -xi : xi in x }.
Subset negate(const Subset& x);

/// { g + xi : xi in x }.
Subset left_translate(Element g, const Subset& x);

/// { xi + g : xi in x }.
Subset right_translate(const Subset& x, Element g);

/// Left transversality x ⊤ y: every group element decomposes uniquely as
/// xi + eta with xi in x, eta in y.
bool is_left_transversal(const Subset& x, const Subset& y);

/// Contains the identity and is closed under + and negation.
bool is_subgroup(const Subset& x);

/// All subgroups, computed by closing generating sets breadth-first (cyclic
/// subgroups first, then joins with one extra generator until stable).
/// Sorted by (size, element order). Capped: throws CorpusLimitError when the
/// group order exceeds `order_cap`.
std::vector<Subset> grassmannian(const GroupRef& g, int order_cap = 24);

/// Left cosets w + b of a subgroup b, ordered by minimal element.
std::vector<Subset> left_cosets(const GroupRef& g, const Subset& b);

/// Right cosets a + w of a subgroup a, ordered by minimal element.
std::vector<Subset> right_cosets(const GroupRef& g, const Subset& a);

/// All x with x ⊤ b. For a subgroup b these are the |b|^([G:b]) choice
/// functions over the left cosets of b; for general b an exact-cover search.
/// Throws CorpusLimitError when the result would exceed `count_cap`.
std::vector<Subset> left_transversal_set(const GroupRef& g, const Subset& b, long long count_cap = 1 << 16);

/// All x with a ⊤ x (sections of the right cosets of a, for subgroups a).
std::vector<Subset> right_transversal_set(const GroupRef& g, const Subset& a, long long count_cap = 1 << 16);

/// Total map from a domain subset into a codomain subset, as a value table
/// indexed by group element (-1 off the domain).
struct MapGraph {
    Subset domain;
    Subset codomain;
    std::vector<Element> value;  // size |group|

    MapGraph(Subset dom, Subset cod);
    Element operator()(Element e) const { return value[e]; }
    void set(Element e, Element v);
    bool operator==(const MapGraph& other) const {
        return domain == other.domain && codomain == other.codomain && value == other.value;
    }
};

/// For side left the graph { eta + F(eta) : eta in domain }; for side right
/// { F(eta) + eta }.
enum class GraphSide { left, right };
Subset graph_of_map(const MapGraph& f, GraphSide side = GraphSide::left);

/// Inverts the graph construction: given sections x, y of a subgroup b
/// (x ⊤ b fails or y ⊤ b fails -> invalid_argument naming the offender),
/// returns F : y -> b with x = { eta + F(eta) }.
MapGraph map_from_transversal(const Subset& x, const Subset& y, const Subset& b);

/// Composition g after f; a value of f outside g's domain raises
/// std::domain_error (partial maps never compose silently).
MapGraph compose(const MapGraph& g, const MapGraph& f);

/// "0,2,4" for {0,2,4}; "-" for the empty subset.
std::string format_subset(const Subset& s);

/// Inverse of format_subset. Accepts "" as empty too. Rejects out-of-range
/// or malformed entries with std::invalid_argument.
Subset parse_subset(const GroupRef& g, const std::string& literal);

/// Every subset, in mask counting order (index e set iff bit e). Guarded by
/// 2^order <= max(1, 1 << order_cap_log2).
std::vector<Subset> all_subsets(const GroupRef& g, int order_cap_log2 = 16);

/// Identity on a subset.
MapGraph identity_on(const Subset& s);

bool is_bijective(const MapGraph& f);

}  // namespace torsorlab

#endif
