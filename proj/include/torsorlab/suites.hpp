#ifndef TORSORLAB_SUITES_HPP
#define TORSORLAB_SUITES_HPP

#include <string>
#include <vector>

#include "torsorlab/affine.hpp"
#include "torsorlab/symmetry.hpp"

namespace torsorlab {

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus s);

/**
 * Outcome of one named check. `witness` carries the offending inputs for a
 * failure, and the recorded reason for a skip; passes may use it for
 * informational findings. `mode` describes how the scan ran (exhaustive
 * counts, seeded sample sizes, hypothesis filters). `elapsed_seconds` is for
 * console display only and never enters serialized reports, which are
 * byte-identical across runs with equal (group, config).
 */
struct CheckResult {
    std::string check_id;
    std::string statement;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
    std::string group;
    std::string mode;
    double elapsed_seconds = 0.0;
};

/// Deliberate bugs the suite can inject into its own evaluation hooks: a
/// flipped sign in the balanced map's third membership condition, or swapped
/// operands in the ordered sumset. The library itself is never mutated; the
/// control checks verify that a corrupted implementation cannot pass.
enum class Mutation { none, gamma_sign_flip, sumset_operand_swap };

struct SuiteConfig {
    uint64_t seed = 0;
    long long samples = 10000;   // per seeded scan
    int subset_threshold = 64;   // exhaustive subset scans iff 2^|G| <= this
    int subgroup_threshold = 20; // exhaustive subgroup-tuple scans iff |Gras| <= this
    Mutation mutation = Mutation::none;
};

struct SuiteReport {
    std::string group;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    long long count(CheckStatus s) const;
    bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

/// One claim of the calculus together with the check ids exercising it. The
/// registry is the completeness ledger: the meta check fails when a claim has
/// no executable check or names an id outside the catalog.
struct RegistryEntry {
    std::string claim;
    std::vector<std::string> check_ids;
};
const std::vector<RegistryEntry>& theorem_registry();

/// Every check id the full suite emits, in emission order.
const std::vector<std::string>& catalog_check_ids();

/// Runs the full catalog on one group. Deterministic: the emitted list is in
/// catalog order and every scan derives its randomness from (seed, check id).
SuiteReport run_all(const GroupRef& g, const SuiteConfig& cfg);

/// Just the subgroup lattice identities (the checks with id prefix
/// "lattice/").
SuiteReport run_lattice_suite(const GroupRef& g, const SuiteConfig& cfg);

std::string render_report_json(const SuiteReport& r);
std::string render_report_csv(const SuiteReport& r);
std::string render_report_text(const SuiteReport& r);

}  // namespace torsorlab

#endif
