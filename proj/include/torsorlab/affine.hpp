#ifndef TORSORLAB_AFFINE_HPP
#define TORSORLAB_AFFINE_HPP

#include "torsorlab/operators.hpp"
#include "torsorlab/torsor.hpp"

namespace torsorlab {

/**
 * Section-map product realized by the balanced bracket. For maps X, Z from a
 * section subgroup y into a subgroup b (y ⊤ b) and a pivot a with a ⊤ y and
 * a ⊤ graph(X), this is X + Z ∘ B where B is the kernel bijection of the
 * configuration (a, graph(X), y, b). The graph of the returned map equals
 * the balanced bracket of the two graphs over (a, y, b). X and Z must have
 * domain y and codomain b.
 */
MapGraph affine_product(const MapGraph& X, const MapGraph& Z, const Subset& a, const Subset& y,
                        const Subset& b);

/**
 * Kernel bijection of the configuration (a, x, y, b) computed from the two
 * projections alone. Unlike canonical_kernel this does not require a ⊤ x,
 * only x ⊤ b and a ⊤ y, so it can scan sections x where transversality to
 * the pivot fails.
 */
MapGraph kernel_shift(const Subset& a, const Subset& x, const Subset& y, const Subset& b);

/// Pointwise ordered sum of maps with the same domain into the same codomain;
/// the codomain must be a subgroup so values stay inside it.
MapGraph add_section_maps(const MapGraph& f, const MapGraph& h);

/**
 * Bracket distributivity between the pair torsor on sections common to a and
 * b and the one-sided torsor on sections of b:
 *   (x y (u v w)_b)_ab = ((x y u)_ab (x y v)_ab (x y w)_ab)_b
 * with x, y common sections and u, v, w sections of b. The mirrored
 * right-handed variant fails in general; check_right_distributive reports
 * whether a counterexample was found rather than asserting the law.
 */
struct DistributivityVerdict {
    bool holds = true;
    std::vector<Subset> witness;  // (x, y, u, v, w)
    std::vector<Subset> sides;
    long long cases = 0;
    std::string mode;
};
DistributivityVerdict check_left_distributive(const GroupRef& g, const Subset& a, const Subset& b,
                                              const CheckMode& mode);
DistributivityVerdict check_right_distributive(const GroupRef& g, const Subset& a, const Subset& b,
                                               const CheckMode& mode);

/// Total map between two (possibly different) groups, as a value array.
struct FiniteMap {
    GroupRef src;
    GroupRef dst;
    std::vector<Element> value;

    FiniteMap(GroupRef s, GroupRef d)
        : src(std::move(s)), dst(std::move(d)), value(static_cast<size_t>(src->order())) {}
    Element operator()(Element e) const { return value[e]; }
    bool operator==(const FiniteMap& other) const {
        return src.get() == other.src.get() && dst.get() == other.dst.get() &&
               value == other.value;
    }
};

/// Constant map at the codomain identity; the zero of the near-ring.
FiniteMap zero_map(const GroupRef& src, const GroupRef& dst);
FiniteMap identity_finite_map(const GroupRef& g);
bool is_homomorphism(const FiniteMap& f);
/// f after h.
FiniteMap compose(const FiniteMap& f, const FiniteMap& h);
FiniteMap add_maps(const FiniteMap& f, const FiniteMap& h);
FiniteMap neg_map(const FiniteMap& f);
bool is_bijective(const FiniteMap& f);

/// All homomorphisms src -> dst by filtered enumeration; throws
/// CorpusLimitError when |dst|^|src| exceeds the cap.
std::vector<FiniteMap> enumerate_homomorphisms(const GroupRef& src, const GroupRef& dst,
                                               long long cap = 4096);

/**
 * Twisted composition on Map(V, W) along a homomorphism A : W -> V:
 *   X . Y = Y + X ∘ (id_V + A ∘ Y)
 * The shift id_V + A ∘ X is the base change of X; it is multiplicative,
 * base_change(X . Y) = base_change(X) ∘ base_change(Y), making the maps with
 * bijective base change the unit group of the product.
 */
FiniteMap base_change(const FiniteMap& X, const FiniteMap& A);
FiniteMap near_ring_product(const FiniteMap& X, const FiniteMap& Y, const FiniteMap& A);
bool invertible_in_near_ring(const FiniteMap& X, const FiniteMap& A);
/// -X ∘ base_change(X)^{-1}; two-sided inverse for the twisted product.
/// Throws std::invalid_argument when the base change is not bijective.
FiniteMap quasi_inverse(const FiniteMap& X, const FiniteMap& A);

/// Mechanical audit of the twisted-product laws on Map(V, W) for one choice
/// of A. Unary laws run over every map when |W|^|V| stays within the
/// enumeration cap; pair and triple laws degrade to seeded sampling.
struct NearRingReport {
    bool associative = true;
    bool zero_is_identity = true;
    bool base_change_multiplicative = true;
    bool units_closed = true;
    bool quasi_inverses_two_sided = true;
    long long unit_count = 0;
    long long maps_enumerated = 0;  // 0 when sampling
    long long cases = 0;
    std::string mode;
    std::string failure;  // first broken law, empty when all hold
};
NearRingReport check_near_ring(const GroupRef& V, const GroupRef& W, const FiniteMap& A,
                               const CheckMode& mode, long long enum_cap = 4096);

/**
 * One direct-product configuration: the ambient group is y_factor x b_factor,
 * the section subgroup y and fibre subgroup b are the embedded factors, and
 * the pivot is the graph of a homomorphism A : b_factor -> y_factor.
 */
struct ProductPicture {
    GroupRef product;
    GroupRef y_factor;
    GroupRef b_factor;
    Subset y;
    Subset b;
    Subset pivot;
    FiniteMap hom;

    Element embed_y(Element s) const { return s * b_factor->order(); }
    Element embed_b(Element t) const { return t; }
};
ProductPicture product_picture(const GroupRef& y_factor, const GroupRef& b_factor,
                               const FiniteMap& A);

/// Lifts a factor map X : y_factor -> b_factor to a MapGraph y -> b inside
/// the product.
MapGraph embed_section_map(const ProductPicture& pic, const FiniteMap& X);

/**
 * Direct-product kernel audit. For sections that are graphs of maps X the
 * kernel bijection is -A∘X + id (pointwise ordered), the bracket of two
 * graphs is the graph of X + Z∘B^X, and kernels compose contravariantly:
 * B^{X + Z∘B^X} = B^Z ∘ B^X. Read multiplicatively this makes X ↦ B^X a
 * homomorphism into the opposite group of Bij(y); this is the one place that
 * convention is encoded. Pairs where the pivot fails transversality to a
 * graph are hypothesis violations and count as skipped.
 */
struct KernelHomReport {
    bool kernel_formula = true;
    bool graphs_match = true;
    bool kernel_multiplicative = true;
    long long cases = 0;
    long long skipped = 0;
    std::string mode;
    std::string failure;

    bool holds() const { return kernel_formula && graphs_match && kernel_multiplicative; }
};
KernelHomReport check_kernel_homomorphism(const ProductPicture& pic, const CheckMode& mode,
                                          long long enum_cap = 4096);

}  // namespace torsorlab

#endif
