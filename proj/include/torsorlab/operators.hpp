#ifndef TORSORLAB_OPERATORS_HPP
#define TORSORLAB_OPERATORS_HPP

#include "torsorlab/subset.hpp"

namespace torsorlab {

/// Total self-map of a group, materialized as a value array.
struct ElementMap {
    GroupRef group;
    std::vector<Element> value;

    explicit ElementMap(GroupRef g) : group(std::move(g)), value(static_cast<size_t>(group->order())) {}
    Element operator()(Element e) const { return value[e]; }
    bool operator==(const ElementMap& other) const {
        return group.get() == other.group.get() && value == other.value;
    }
};

ElementMap identity_map(const GroupRef& g);

/// f after h: (f ∘ h)(w) = f(h(w)).
ElementMap compose(const ElementMap& f, const ElementMap& h);

/// Pointwise ordered sum (f + h)(w) = f(w) + h(w).
ElementMap pointwise_add(const ElementMap& f, const ElementMap& h);

/// Pointwise negation (-f)(w) = -(f(w)).
ElementMap pointwise_neg(const ElementMap& f);

enum class Side { left, right };

/**
 * Component extractor for the unique decomposition w = u-part + v-part over
 * the pair (u, v) with u ⊤ v. Side::left is the left projection onto v along
 * u (returns the v-part); Side::right projects onto u along v (returns the
 * u-part). Throws std::invalid_argument when u ⊤ v fails.
 */
ElementMap proj(const Subset& u, const Subset& v, Side side);

/**
 * Transvection along b between sections x and y (both ⊤ b):
 * w ↦ x-part(w) − y-part(w) + w, where s-part extracts the section
 * component of the decomposition over (s, b).
 */
ElementMap transvection(const Subset& b, const Subset& x, const Subset& y);

/**
 * Mirror transvection for a on the left (a ⊤ x, a ⊤ y):
 * w ↦ w − y-part_a(w) + x-part_a(w), where s-part_a extracts the second
 * component of the decomposition over (a, s).
 */
ElementMap transvection_check(const Subset& a, const Subset& x, const Subset& y);

/// Which of the three one-sided multiplication operators to build.
enum class MultKind { middle, left, right };

/**
 * Multiplication operators realizing the balanced map as images:
 *   middle M: w ↦ x-part_{a,x}(w) − w + z-part_{z,b}(w)      (a ⊤ x, z ⊤ b)
 *   left   L: w ↦ −a-part_{a,x}(y-part_{y,−b}(w)) + w         (a ⊤ x, y ⊤ −b)
 *   right  R: w ↦ w − b-part_{z,b}(y-part_{−a,y}(w))          (−a ⊤ y, z ⊤ b)
 * where s-part_{u,v} is the s-component of the decomposition over (u, v).
 * The subset arguments are positional (x, a, y, b, z); unused slots are
 * ignored per kind. a and b need not be subgroups.
 */
ElementMap mult_operator(MultKind kind, const Subset& x, const Subset& a, const Subset& y,
                         const Subset& b, const Subset& z);

/**
 * Canonical kernel data for the configuration (a, x, y, b):
 *   K : y -> x restricts x-part_{a,x} to y                            (needs a ⊤ x)
 *   B : y -> y is y-part_{a,y} ∘ x-part_{x,b} on y                    (needs x ⊤ b, a ⊤ y)
 * Both are partial maps materialized on their domains.
 */
struct CanonicalKernel {
    MapGraph K;
    MapGraph B;
};
CanonicalKernel canonical_kernel(const Subset& a, const Subset& x, const Subset& y, const Subset& b);

/// Restricts a total map to a domain, with the stated codomain.
MapGraph restrict_map(const ElementMap& f, const Subset& domain, const Subset& codomain);

}  // namespace torsorlab

#endif
