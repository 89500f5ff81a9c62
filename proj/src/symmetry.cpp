#include "torsorlab/symmetry.hpp"

#include "torsorlab/rng.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace torsorlab {

namespace {

// Pairing dictionary on points {0,1,2,3}, indexed by Letter.
constexpr std::array<std::array<int, 2>, kLetterCount> kLetterPairs = {{
    {0, 2},  // xi
    {1, 3},  // zeta
    {0, 1},  // alpha
    {2, 3},  // beta
    {0, 3},  // eta
    {1, 2},  // omega
}};

SixPerm induced_letter_perm(const std::array<int, 4>& p) {
    SixPerm sigma{};
    for (int l = 0; l < kLetterCount; ++l) {
        int u = p[kLetterPairs[l][0]];
        int v = p[kLetterPairs[l][1]];
        int image = -1;
        for (int m = 0; m < kLetterCount; ++m) {
            if ((kLetterPairs[m][0] == u && kLetterPairs[m][1] == v) ||
                (kLetterPairs[m][0] == v && kLetterPairs[m][1] == u)) {
                image = m;
                break;
            }
        }
        sigma[l] = image;
    }
    return sigma;
}

struct RawRow {
    const char* label;
    std::array<int, 4> points;               // images of the four points
    std::array<int, kLetterCount> signs;     // over (xi, zeta; alpha, beta; eta, omega)
};

// Display order: identity, double transpositions, 3-cycles, transpositions,
// 4-cycles; cycle labels use 1-based points.
constexpr RawRow kRawRows[24] = {
    {"id",       {0, 1, 2, 3}, {+1, +1, +1, +1, +1, +1}},
    {"(12)(34)", {1, 0, 3, 2}, {+1, +1, -1, -1, +1, +1}},
    {"(13)(24)", {2, 3, 0, 1}, {-1, -1, +1, +1, -1, -1}},
    {"(14)(23)", {3, 2, 1, 0}, {-1, -1, -1, -1, -1, -1}},
    {"(123)",    {1, 2, 0, 3}, {+1, -1, -1, +1, -1, -1}},
    {"(132)",    {2, 0, 1, 3}, {-1, +1, -1, -1, -1, +1}},
    {"(124)",    {1, 3, 2, 0}, {-1, +1, +1, +1, +1, -1}},
    {"(142)",    {3, 0, 2, 1}, {-1, +1, +1, -1, +1, +1}},
    {"(134)",    {2, 1, 3, 0}, {+1, -1, -1, +1, +1, +1}},
    {"(143)",    {3, 1, 0, 2}, {+1, -1, +1, +1, +1, -1}},
    {"(234)",    {0, 2, 3, 1}, {+1, -1, -1, -1, -1, +1}},
    {"(243)",    {0, 3, 1, 2}, {-1, +1, +1, -1, -1, -1}},
    {"(12)",     {1, 0, 2, 3}, {+1, +1, +1, -1, +1, +1}},
    {"(13)",     {2, 1, 0, 3}, {+1, -1, -1, +1, +1, -1}},
    {"(14)",     {3, 1, 2, 0}, {+1, +1, +1, +1, +1, -1}},
    {"(23)",     {0, 2, 1, 3}, {-1, -1, -1, -1, -1, +1}},
    {"(24)",     {0, 3, 2, 1}, {-1, +1, +1, -1, +1, -1}},
    {"(34)",     {0, 1, 3, 2}, {+1, +1, -1, +1, +1, +1}},
    {"(1234)",   {1, 2, 3, 0}, {+1, -1, -1, +1, -1, +1}},
    {"(1243)",   {1, 3, 0, 2}, {-1, -1, +1, +1, +1, -1}},
    {"(1324)",   {2, 3, 1, 0}, {-1, -1, +1, -1, -1, -1}},
    {"(1342)",   {2, 0, 3, 1}, {+1, +1, -1, -1, -1, +1}},
    {"(1423)",   {3, 2, 0, 1}, {-1, -1, -1, +1, -1, -1}},
    {"(1432)",   {3, 0, 1, 2}, {-1, +1, +1, -1, -1, +1}},
};

uint64_t pack_tuple(const StructureTuple& t) {
    uint64_t key = 0;
    for (int l = 0; l < kLetterCount; ++l)
        key = (key << 8) | static_cast<uint64_t>(t.v[l]);
    return key;
}

std::vector<uint64_t> mapped_space(const GroupRef& g,
                                   const std::function<StructureTuple(const StructureTuple&)>& f) {
    std::vector<uint64_t> out;
    for_each_structure_tuple(g, [&](const StructureTuple& t) { out.push_back(pack_tuple(f(t))); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

StructureTuple permute_tuple(const SixPerm& sigma, const StructureTuple& t) {
    StructureTuple out;
    for (int l = 0; l < kLetterCount; ++l) out.v[sigma[l]] = t.v[l];
    return out;
}

std::string six_perm_cycles(const SixPerm& sigma) {
    std::ostringstream os;
    std::array<bool, kLetterCount> seen{};
    bool moved = false;
    for (int start = 0; start < kLetterCount; ++start) {
        if (seen[start] || sigma[start] == start) continue;
        os << '(';
        int l = start;
        bool first = true;
        while (!seen[l]) {
            seen[l] = true;
            if (!first) os << ' ';
            os << kLetterNames[l];
            first = false;
            l = sigma[l];
        }
        os << ')';
        moved = true;
    }
    return moved ? os.str() : "id";
}

const std::vector<BigKleinEntry>& big_klein_group() {
    static const std::vector<BigKleinEntry> entries = [] {
        std::vector<BigKleinEntry> out;
        out.reserve(24);
        for (const RawRow& row : kRawRows) {
            BigKleinEntry e;
            e.label = row.label;
            e.points = row.points;
            e.sigma = induced_letter_perm(row.points);
            for (int l = 0; l < kLetterCount; ++l)
                e.expected.s[l] = static_cast<int8_t>(row.signs[l]);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

std::vector<SignVector> derive_sign_vector(const GroupRef& g, const SixPerm& sigma) {
    const std::vector<uint64_t> permuted =
        mapped_space(g, [&](const StructureTuple& t) { return permute_tuple(sigma, t); });
    std::vector<SignVector> matches;
    for (const SignVector& s : SignVector::all()) {
        std::vector<uint64_t> signed_space =
            mapped_space(g, [&](const StructureTuple& t) { return apply_signs(g, s, t); });
        if (signed_space == permuted) matches.push_back(s);
    }
    return matches;
}

SignTableReport verify_sign_table(const GroupRef& g) {
    SignTableReport report;
    report.all_match = true;
    report.all_unique = true;
    for (const BigKleinEntry& e : big_klein_group()) {
        SignTableRow row;
        row.label = e.label;
        row.sigma = e.sigma;
        row.expected = e.expected;
        row.derived = derive_sign_vector(g, e.sigma);
        row.expected_matches =
            std::find(row.derived.begin(), row.derived.end(), e.expected) != row.derived.end();
        row.unique = row.derived.size() == 1 && row.expected_matches;
        report.all_match = report.all_match && row.expected_matches;
        report.all_unique = report.all_unique && row.unique;
        report.rows.push_back(std::move(row));
    }
    return report;
}

int klein_orbit_count(const GroupRef& g) {
    std::set<std::vector<uint64_t>> images;
    for (const BigKleinEntry& e : big_klein_group()) {
        images.insert(
            mapped_space(g, [&](const StructureTuple& t) { return permute_tuple(e.sigma, t); }));
    }
    return static_cast<int>(images.size());
}

SecondSymmetryVerdict check_second_symmetry(const GroupRef& g, const CheckMode& mode) {
    SecondSymmetryVerdict verdict;
    const int n = g->order();

    auto record_failure = [&](const char* identity, const Subset& x, const Subset& a,
                              const Subset& y, const Subset& b, const Subset& z) {
        verdict.holds = false;
        verdict.failed_identity = identity;
        verdict.witness = {x, a, y, b, z};
    };

    // The three identities over arbitrary 5-tuples.
    auto check_tuple = [&](const Subset& x, const Subset& a, const Subset& y, const Subset& b,
                           const Subset& z) {
        const Subset value = gamma(x, a, y, b, z);
        const Subset checked = gamma_check(x, a, y, b, z);
        verdict.cases += 3;
        if (!(gamma(b, z, y, x, a) == negate(value))) {
            record_failure("reversal", x, a, y, b, z);
            return false;
        }
        if (!(gamma(z, b, y, a, x) == checked)) {
            record_failure("mirror", x, a, y, b, z);
            return false;
        }
        if (!(gamma(a, x, y, z, b) == negate(checked))) {
            record_failure("mirror-reversal", x, a, y, b, z);
            return false;
        }
        return true;
    };
    auto check_symmetric_tuple = [&](const Subset& x, const Subset& a, const Subset& y,
                                     const Subset& b, const Subset& z) {
        verdict.cases += 1;
        if (!(gamma(x, a, y, b, z) == gamma(a, x, y, z, b))) {
            record_failure("symmetric-swap", x, a, y, b, z);
            return false;
        }
        return true;
    };

    long long full = 1;
    bool overflow = false;
    for (int i = 0; i < 5 && !overflow; ++i) {
        full *= (1LL << n);
        if (full > mode.exhaustive_budget) overflow = true;
    }

    if (mode.exhaustive && !overflow && n <= 16) {
        verdict.mode = "exhaustive";
        const uint64_t count = 1ULL << n;
        std::vector<Subset> subsets;
        subsets.reserve(count);
        for (uint64_t m = 0; m < count; ++m) subsets.push_back(Subset::from_mask64(g, m));
        std::vector<uint64_t> symmetric;
        for (uint64_t m = 0; m < count; ++m)
            if (subsets[m] == negate(subsets[m])) symmetric.push_back(m);

        for (uint64_t xm = 0; xm < count; ++xm)
            for (uint64_t am = 0; am < count; ++am)
                for (uint64_t ym = 0; ym < count; ++ym)
                    for (uint64_t bm = 0; bm < count; ++bm)
                        for (uint64_t zm = 0; zm < count; ++zm)
                            if (!check_tuple(subsets[xm], subsets[am], subsets[ym], subsets[bm],
                                             subsets[zm]))
                                return verdict;
        for (uint64_t xm : symmetric)
            for (uint64_t am : symmetric)
                for (uint64_t ym : symmetric)
                    for (uint64_t bm : symmetric)
                        for (uint64_t zm : symmetric)
                            if (!check_symmetric_tuple(subsets[xm], subsets[am], subsets[ym],
                                                       subsets[bm], subsets[zm]))
                                return verdict;
        return verdict;
    }

    verdict.mode = "seeded(" + std::to_string(mode.samples) + ",seed=" +
                   std::to_string(mode.seed) + ")";
    CheckRng rng(mode.seed, mode.stream_label);
    auto symmetrize = [&](const Subset& s) { return s | negate(s); };
    for (long long i = 0; i < mode.samples; ++i) {
        Subset x = rng.subset(g), a = rng.subset(g), y = rng.subset(g), b = rng.subset(g),
               z = rng.subset(g);
        if (!check_tuple(x, a, y, b, z)) return verdict;
        if (!check_symmetric_tuple(symmetrize(x), symmetrize(a), symmetrize(y), symmetrize(b),
                                   symmetrize(z)))
            return verdict;
    }
    return verdict;
}

KleinInvarianceVerdict klein_invariance_check(const TorsorCarrier& carrier) {
    if (!carrier.closed || carrier.table.empty())
        throw TorsorError("klein_invariance_check needs a closed carrier with a law table (" +
                          carrier.label + ")");
    KleinInvarianceVerdict verdict;
    const int m = carrier.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const int32_t l = carrier.at(i, j, k);
                verdict.cases += 2;
                // (x,y,z,w) -> (y,x,w,z): w = (x y z) must give z = (y x w).
                if (carrier.at(j, i, l) != k) {
                    verdict.holds = false;
                    verdict.failed_swap = "(x y)(z w)";
                    verdict.witness = {i, j, k, l};
                    return verdict;
                }
                // (x,y,z,w) -> (z,w,x,y): w = (x y z) must give y = (z w x).
                if (carrier.at(k, l, i) != j) {
                    verdict.holds = false;
                    verdict.failed_swap = "(x z)(y w)";
                    verdict.witness = {i, j, k, l};
                    return verdict;
                }
            }
    return verdict;
}

}  // namespace torsorlab
