#ifndef TORSORLAB_GROUP_HPP
#define TORSORLAB_GROUP_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsorlab {

/// Element of a finite group, encoded as its row index in the Cayley table.
using Element = int;

class FiniteGroup;

/// Shared handle to an immutable group. Subsets and maps keep one of these;
/// operations mixing operands from different handles are rejected.
using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Raised when a requested computation exceeds the small-order limits this
/// library is built for (exhaustive searches, factorial enumerations, ...).
struct CorpusLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by Cayley-table validation. `kind` identifies the failed axiom and
/// `i, j, k` locate the first offending entry or triple (unused slots are -1).
struct CayleyValidationError : std::runtime_error {
    enum class Kind {
        not_square,
        entry_out_of_range,
        row_not_bijective,
        column_not_bijective,
        no_identity,
        not_associative,
    };

    CayleyValidationError(Kind kind, std::string message, int i = -1, int j = -1, int k = -1)
        : std::runtime_error(std::move(message)), kind(kind), i(i), j(j), k(k) {}

    Kind kind;
    int i, j, k;
};

/**
 * A finite group given by its full Cayley table.
 *
 * The operation is written additively throughout (`add`, `neg`, identity `o`)
 * even for non-abelian groups, matching the conventions of the structure-map
 * calculus built on top: for subsets x, y the sumset is
 * x + y = { xi + eta : xi in x, eta in y } and nothing commutes unless proven.
 *
 * The table is validated on construction: rows and columns must be
 * permutations of 0..n-1, a two-sided identity must exist and the operation
 * must be associative. Instances are immutable after construction.
 */
class FiniteGroup {
  public:
    /// Validates and adopts an explicit table. `table[i][j]` is i + j.
    static GroupRef from_cayley_table(std::string name, const std::vector<std::vector<Element>>& table);

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    Element identity() const { return identity_; }
    bool is_abelian() const { return abelian_; }

    Element add(Element g, Element h) const { return table_[static_cast<size_t>(g) * n_ + h]; }
    Element neg(Element g) const { return inverse_[g]; }
    /// g + h + k with left-to-right evaluation (associativity is validated).
    Element add3(Element g, Element h, Element k) const { return add(add(g, h), k); }

    /// Smallest m >= 1 with m * g = o.
    int element_order(Element g) const;

    /// Elements commuting with everything; sorted ascending.
    std::vector<Element> center_elements() const;

  private:
    FiniteGroup() = default;

    std::string name_;
    int n_ = 0;
    Element identity_ = 0;
    bool abelian_ = true;
    std::vector<Element> table_;    // row-major n*n
    std::vector<Element> inverse_;  // n entries

    friend GroupRef make_raw_group(std::string, int, std::vector<Element>&&);
};

/// Z_n, elements 0..n-1 under addition mod n. n >= 1.
GroupRef make_cyclic(int n);

/// All permutations of {0..n-1} ordered by lexicographic rank of their
/// one-line notation; composition is (s * t)(i) = s(t(i)). Capped at n <= 5.
GroupRef make_symmetric(int n);

/// Dihedral group of order 2n presented as <r, s | r^n = s^2 = (sr)^2 = e>;
/// indices 0..n-1 are r^i, indices n..2n-1 are s*r^i. n >= 1.
GroupRef make_dihedral(int n);

/// Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k in that order.
GroupRef make_quaternion();

/// Z_2 x Z_2 under the name "k4".
GroupRef make_klein_four();

/// Direct product with row-major element encoding (u, v) -> u * |h| + v.
GroupRef make_direct_product(const GroupRef& g, const GroupRef& h);

/// Same underlying set with the mirrored operation g *' h = h * g.
GroupRef opposite(const GroupRef& g);

/// Brute-force isomorphism test via generator-image backtracking.
/// Capped at order 24; throws CorpusLimitError beyond.
bool is_isomorphic(const GroupRef& g, const GroupRef& h);

/// Group of all automorphisms of g, composition (f * h)(x) = f(h(x)).
/// Returns the automorphisms alongside their group structure.
/// Capped at order 8; throws CorpusLimitError beyond.
struct AutomorphismGroup {
    GroupRef group;                              // abstract group of order = #automorphisms
    std::vector<std::vector<Element>> elements;  // elements[i] is the i-th automorphism as a value table
};
AutomorphismGroup automorphism_group(const GroupRef& g);

/// True when both handles denote the same group object.
inline bool same_group(const GroupRef& a, const GroupRef& b) { return a.get() == b.get(); }

/// Throws std::invalid_argument when handles differ; `where` names the caller.
void require_same_group(const GroupRef& a, const GroupRef& b, const char* where);

}  // namespace torsorlab

#endif
