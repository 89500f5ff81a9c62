#ifndef TORSORLAB_SYMMETRY_HPP
#define TORSORLAB_SYMMETRY_HPP

#include "torsorlab/torsor.hpp"

namespace torsorlab {

/// Permutation of the six letters; sigma[l] is the image of letter l.
using SixPerm = std::array<int, kLetterCount>;

/// Tuple action: the letter-l slot of the result holds the old letter-l value
/// at its new position, (sigma . t)[sigma(l)] = t[l].
StructureTuple permute_tuple(const SixPerm& sigma, const StructureTuple& t);

/// Cycle notation over letter names, e.g. "(alpha omega xi)(beta eta zeta)".
std::string six_perm_cycles(const SixPerm& sigma);

/**
 * One row of the letter-symmetry table: a permutation of four points, the
 * letter permutation it induces through the pairing dictionary
 * alpha = {1,2}, beta = {3,4}, xi = {1,3}, zeta = {2,4}, eta = {1,4},
 * omega = {2,3}, and the expected sign vector over (xi, zeta; alpha, beta;
 * eta, omega).
 */
struct BigKleinEntry {
    std::string label;            // cycle form on {1,2,3,4}
    std::array<int, 4> points;    // images of 1..4 (0-based)
    SixPerm sigma;                // induced letter permutation
    SignVector expected;          // embedded expected signs
};

/// All 24 rows in fixed display order (identity, double transpositions,
/// 3-cycles, transpositions, 4-cycles). The letter permutations are derived
/// from the pairing dictionary at startup, not embedded.
const std::vector<BigKleinEntry>& big_klein_group();

/// Every sign vector s with sigma . (solution set) == s . (solution set),
/// compared as subsets of Omega^6. Empty means the table derivation failed
/// for this group; callers must treat that as an error, never a pass.
std::vector<SignVector> derive_sign_vector(const GroupRef& g, const SixPerm& sigma);

struct SignTableRow {
    std::string label;
    SixPerm sigma;
    SignVector expected;
    std::vector<SignVector> derived;
    bool expected_matches;  // expected is among the derived vectors
    bool unique;            // derived is exactly { expected }
};

struct SignTableReport {
    std::vector<SignTableRow> rows;
    bool all_match;   // every row's expected vector was derived
    bool all_unique;  // every row is pinned to a single vector
};

/// Checks all 24 rows against the embedded table on one group.
SignTableReport verify_sign_table(const GroupRef& g);

/// Number of distinct images of the solution set under the 24 letter
/// permutations. Informational only; size varies with the group.
int klein_orbit_count(const GroupRef& g);

/// Mirror and reversal identities relating the balanced maps under operand
/// exchange, checked over subset 5-tuples (x, a, y, b, z):
///   reversal:         gamma(b,z,y,x,a) = -gamma(x,a,y,b,z)
///   mirror:           gamma(z,b,y,a,x) = gamma_check(x,a,y,b,z)
///   mirror-reversal:  gamma(a,x,y,z,b) = -gamma_check(x,a,y,b,z)
///   symmetric swap:   gamma(x,a,y,b,z) = gamma(a,x,y,z,b) when every
///                     argument satisfies s = -s.
struct SecondSymmetryVerdict {
    bool holds = true;
    std::string failed_identity;
    std::vector<Subset> witness;  // (x, a, y, b, z)
    long long cases = 0;
    std::string mode;
};
SecondSymmetryVerdict check_second_symmetry(const GroupRef& g, const CheckMode& mode);

/// Invariance of { (x,y,z,w) : w = (x y z) } under the position swaps
/// (x y)(z w) and (x z)(y w); needs a closed carrier table.
struct KleinInvarianceVerdict {
    bool holds = true;
    std::string failed_swap;
    std::array<int32_t, 4> witness{-1, -1, -1, -1};
    long long cases = 0;
};
KleinInvarianceVerdict klein_invariance_check(const TorsorCarrier& carrier);

}  // namespace torsorlab

#endif
