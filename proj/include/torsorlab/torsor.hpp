#ifndef TORSORLAB_TORSOR_HPP
#define TORSORLAB_TORSOR_HPP

#include <array>
#include <optional>
#include <string>

#include "torsorlab/structure_maps.hpp"

namespace torsorlab {

/// Raised when a carrier operation leaves its carrier or a basepoint group
/// fails the group axioms; the message carries the witness.
struct TorsorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ternary bracket (x y z) on subsets, with a display label.
struct TernaryLaw {
    std::string label;
    std::function<Subset(const Subset&, const Subset&, const Subset&)> eval;
};

/// (x y z) = gamma(x, a, y, b, z).
TernaryLaw balanced_law(const Subset& a, const Subset& b);
/// (x y z) = gamma_check(x, a, y, b, z).
TernaryLaw balanced_check_law(const Subset& a, const Subset& b);
/// (x y z) = sigma(b, x, y, z).
TernaryLaw unbalanced_law(const Subset& b);
/// (x y z) = sigma_check(b, x, y, z).
TernaryLaw unbalanced_check_law(const Subset& b);
/// (x y z) = inner(z, y, x).
TernaryLaw opposite_law(const TernaryLaw& inner);

/// How a law check scans its domain. Exhaustive requests degrade to seeded
/// sampling when the tuple count exceeds the budget (recorded in the verdict).
struct CheckMode {
    bool exhaustive = true;
    long long samples = 10000;             // seeded sample count
    uint64_t seed = 0;
    std::string stream_label = "check";    // RNG stream derivation
    long long exhaustive_budget = 1 << 24; // max tuples scanned exhaustively
};

struct LawVerdict {
    bool holds = true;
    std::string failed_identity;  // which equality broke
    std::vector<Subset> witness;  // offending tuple, in law order
    std::vector<Subset> sides;    // evaluated sides at the witness
    long long cases = 0;
    std::string mode;             // "exhaustive" or "seeded(N)"
};

/**
 * Para-associativity (x y (z u v)) = (x (u z y) v) = ((x y z) u v) over
 * five-tuples from the domain. An empty domain means the full power set
 * (enumerated when small, sampled otherwise). Exhaustive scans run in
 * lexicographic index order, so a reported witness is the first in that
 * order.
 */
LawVerdict check_para_associativity(const TernaryLaw& law, const std::vector<Subset>& domain,
                                    const GroupRef& g, const CheckMode& mode);

/// Idempotency (x x y) = y = (y x x) over pairs from the domain.
LawVerdict check_idempotent(const TernaryLaw& law, const std::vector<Subset>& domain,
                            const GroupRef& g, const CheckMode& mode);

/**
 * A finite carrier with a ternary law. The law table over carrier indices is
 * built at construction (within budget) and closure violations are recorded,
 * never silently dropped.
 */
struct TorsorCarrier {
    std::string label;
    GroupRef group;
    std::vector<Subset> elements;      // canonical (size, lex) order
    TernaryLaw law;
    bool closure_checked = false;
    bool closed = false;
    std::array<int, 3> escape_witness{-1, -1, -1};
    std::vector<int32_t> table;        // m^3 entries, result index or -1 for escapes

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(const Subset& s) const;
    int32_t at(int i, int j, int k) const {
        return table[(static_cast<size_t>(i) * elements.size() + j) * elements.size() + k];
    }
};

TorsorCarrier make_carrier(std::string label, const GroupRef& g, std::vector<Subset> elements,
                           TernaryLaw law, long long table_budget = 1 << 21);

/// Two-sided sections { x : a ⊤ x and x ⊤ b } under the balanced law.
/// May be empty (a legal degenerate carrier).
TorsorCarrier carrier_U_ab(const Subset& a, const Subset& b, long long count_cap = 1 << 16,
                           long long table_budget = 1 << 21);

/// Sections { x : x ⊤ b } under the unbalanced law for b.
TorsorCarrier carrier_U_b(const Subset& b, long long count_cap = 1 << 16,
                          long long table_budget = 1 << 21);

/// Group structure x * y := (x e y) on a carrier with basepoint e.
/// Throws TorsorError (with witness) when a product escapes the carrier, or
/// CayleyValidationError when the induced table fails the group axioms.
GroupRef group_from_basepoint(const TorsorCarrier& carrier, const Subset& basepoint);

/**
 * Relation composition model. Subsets of the group correspond to relations
 * rel(x) = { (alpha, beta) in a x b : alpha + beta in x } (needs a ⊤ b); the
 * bracket is decode(rel(z) ∘ rel(y)^{-1} ∘ rel(x)).
 */
Subset compose_relations(const Subset& x, const Subset& y, const Subset& z, const Subset& a,
                         const Subset& b);

/// Results of probing a candidate transversal triple (a, b, c).
struct TransversalTripleReport {
    bool all_subgroups = false;
    bool ab_commute = false;  // alpha + beta = beta + alpha elementwise
    bool top_ab = false, top_bc = false, top_ca = false;
    bool is_triple = false;
    bool criterion_checked = false;   // was Omega ≅ a x a decided
    bool product_criterion = false;   // Omega ≅ a x a
    bool aut_model_checked = false;   // was the automorphism model compared
    bool aut_model_ok = false;        // subgroup sections with basepoint c ≅ Aut(a)
    int subgroup_section_count = -1;  // |U_ab ∩ subgroups|
    std::string note;
};

TransversalTripleReport check_transversal_triple(const Subset& a, const Subset& b, const Subset& c);

/// Rebuilds a subgroup subset as a standalone group (elements reindexed in
/// ascending order).
GroupRef subgroup_as_group(const Subset& a);

/// All (i, j, k, l) with l = (i j k) in carrier indices; requires a closed
/// carrier with its table built.
std::vector<std::array<int32_t, 4>> torsor_graph(const TorsorCarrier& carrier);

}  // namespace torsorlab

#endif
