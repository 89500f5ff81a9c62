#ifndef TORSORLAB_STRUCTURE_MAPS_HPP
#define TORSORLAB_STRUCTURE_MAPS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "torsorlab/subset.hpp"

namespace torsorlab {

/**
 * Balanced structure map in the (a, b)-description:
 *
 *   gamma(x, a, y, b, z) = { w | ∃ alpha in a, beta in b :
 *                                alpha + w + beta in y,
 *                                alpha + w       in z,
 *                                        w + beta in x }.
 *
 * Runs in O(|G| * |a| * |b|) with early exit per w. All five arguments are
 * arbitrary subsets of one group; empty a or b gives the empty set.
 */
Subset gamma(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z);

/// Mirror-ordered variant: beta + w + alpha in y, w + alpha in z, beta + w in x.
Subset gamma_check(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z);

/**
 * Unbalanced structure map; the first parameter is the quantified subgroup:
 *
 *   sigma(b, x, y, z) = { w | ∃ beta, beta' in b :
 *                             w + beta         in x,
 *                             w + beta' + beta in y,
 *                             w + beta'        in z }.
 */
Subset sigma(const Subset& b, const Subset& x, const Subset& y, const Subset& z);

/// Mirror-ordered variant: beta + w in x, beta + beta' + w in y, beta' + w in z.
Subset sigma_check(const Subset& b, const Subset& x, const Subset& y, const Subset& z);

/// Independent slow evaluations through the full (alpha, beta, w) tuple space.
/// Kept as a second code path for cross-checking the fast maps; do not fold.
Subset gamma_oracle(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z);
Subset gamma_check_oracle(const Subset& x, const Subset& a, const Subset& y, const Subset& b, const Subset& z);
Subset sigma_oracle(const Subset& b, const Subset& x, const Subset& y, const Subset& z);
Subset sigma_check_oracle(const Subset& b, const Subset& x, const Subset& y, const Subset& z);

/// Coordinates of the structure space, in display order (xi, zeta; alpha, beta; eta, omega).
enum class Letter : int { xi = 0, zeta = 1, alpha = 2, beta = 3, eta = 4, omega = 5 };
constexpr int kLetterCount = 6;
extern const std::array<const char*, kLetterCount> kLetterNames;

/// Point of Omega^6 indexed by Letter.
struct StructureTuple {
    std::array<Element, kLetterCount> v{};
    Element& operator[](Letter l) { return v[static_cast<int>(l)]; }
    Element operator[](Letter l) const { return v[static_cast<int>(l)]; }
    bool operator==(const StructureTuple&) const = default;
};

/// Structure equations: zeta = alpha + omega, eta = alpha + omega + beta,
/// xi = omega + beta. The solution set has exactly |G|^3 points (alpha, beta,
/// omega free).
bool structure_member(const GroupRef& g, const StructureTuple& t);

/// Streams the solution set without materializing it: callback once per point,
/// ordered by (alpha, beta, omega).
void for_each_structure_tuple(const GroupRef& g, const std::function<void(const StructureTuple&)>& fn);

/// Sign vector over the six coordinates; +1 keeps a letter, -1 negates it.
struct SignVector {
    std::array<int8_t, kLetterCount> s{+1, +1, +1, +1, +1, +1};
    int8_t operator[](Letter l) const { return s[static_cast<int>(l)]; }
    bool operator==(const SignVector&) const = default;
    /// Display form "(s1,s2;s3,s4;s5,s6)" with entries + or -.
    std::string str() const;
    /// All 64 sign vectors in binary counter order (xi fastest).
    static std::vector<SignVector> all();
};

/// Applies a sign vector coordinatewise (negation in the group).
StructureTuple apply_signs(const GroupRef& g, const SignVector& s, const StructureTuple& t);

/// Membership in the signed space s . (solution set): negate per the sign
/// vector (an involution) and test the structure equations.
bool signed_member(const GroupRef& g, const SignVector& s, const StructureTuple& t);

/// One of the equivalent triangular systems: three equations, each expressing
/// the letter `lhs` as an ordered signed sum of other letters.
struct LetterEquation {
    Letter lhs;
    std::vector<std::pair<int, Letter>> rhs;  // (sign, letter), evaluated left to right
};
struct LetterSystem {
    std::string label;
    std::array<LetterEquation, 3> equations;
};

/// The sixteen displayed rearrangements of the structure equations.
const std::vector<LetterSystem>& equivalent_systems();

bool system_holds(const GroupRef& g, const LetterSystem& sys, const StructureTuple& t);

struct SystemsCheckResult {
    bool equivalent;
    StructureTuple witness;        // first tuple where some system disagrees
    std::string witness_systems;   // labels of a disagreeing pair
    long long tuples_checked;
};

/// Verifies all systems carve out the same subset of Omega^6, scanning
/// tuples in lexicographic order. Cost |G|^6; capped by order.
SystemsCheckResult equivalent_systems_check(const GroupRef& g, int order_cap = 8);

}  // namespace torsorlab

#endif
