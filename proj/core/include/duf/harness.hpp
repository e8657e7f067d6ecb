#ifndef DUF_HARNESS_HPP
#define DUF_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "duf/mset.hpp"
#include "duf/poly.hpp"
#include "duf/uniformity.hpp"

namespace duf {

/// Counter-based generator: output i of a stream depends only on (key, i), so
/// samples can be produced in any order or in parallel.
struct CounterRng {
    uint64_t key = 0;
    uint64_t ctr = 0;

    static uint64_t mix(uint64_t z);
    static CounterRng keyed(uint64_t seed, uint64_t stream);
    uint64_t next() { return mix(key + 0x9E3779B97F4A7C15ull * ++ctr); }
};

/// Uniform degree-m polynomial: leading coefficient uniform nonzero (drawn
/// first, by rejection), remaining coefficients uniform, highest degree first.
FqPoly random_poly(const FieldCtx& ctx, int degree, CounterRng& rng);

enum class ExperimentMode { theorem_max_uniformity, conjecture_fraction, morse_census };

struct ExperimentConfig {
    uint64_t m = 7;
    std::vector<unsigned> n_range;
    uint32_t samples = 1;
    uint64_t seed = 0;
    ExperimentMode mode = ExperimentMode::theorem_max_uniformity;
    bool allow_non_member = false; ///< skip the membership gate (exploration)
    unsigned threads = 0;
    uint64_t work_budget = uint64_t{1} << 36;
};

struct ExperimentEntry {
    unsigned n = 0;
    uint32_t samples = 0;
    // theorem mode
    uint32_t failures = 0; ///< samples with delta != m-1
    std::vector<std::string> failure_polys;
    std::map<uint32_t, uint32_t> delta_histogram;
    uint32_t degenerate_samples = 0;  ///< a1^2 + a0*a2 = 0 (tracked for m = 3 mod 8)
    uint32_t degenerate_failures = 0;
    uint32_t coherence_checked = 0, coherence_ok = 0;
    // conjecture mode
    Fraction min_fraction{0, 1};
    uint32_t below_epsilon = 0; ///< samples with fraction < 1/(d! 2^(d+1))
    // morse census mode
    uint64_t max_bad_alphas = 0;
    uint64_t alpha_bound = 0;
    // informational, excluded from the canonical serialization
    double runtime_ms = 0.0;
};

struct ExperimentRecord {
    ExperimentConfig config;
    std::vector<ExperimentEntry> entries;
};

/// Seeded experiment over every n in the config. Identical configs produce
/// identical records regardless of thread count.
ExperimentRecord run_experiment(const ExperimentConfig& cfg);

/// One JSON object per (m, n) entry, newline separated. Stable key order;
/// runtime is only included on demand so records can be compared bit-exactly.
std::string to_jsonl(const ExperimentRecord& rec, bool include_runtime);
std::string to_csv(const ExperimentRecord& rec);

/// Full enumeration of all degree-m f (leading coefficient nonzero) over
/// F_{2^n}, classified by delta value. Desk scale only.
struct ExhaustiveCensus {
    uint64_t m = 0;
    unsigned n = 0;
    uint64_t total = 0;
    std::map<uint32_t, uint64_t> delta_counts;
};
ExhaustiveCensus exhaustive_delta_census(uint64_t m, unsigned n, unsigned threads = 0);
std::string to_json(const ExhaustiveCensus& census);

/// Diff of scan_m(200) and scan_l_primes(200) against the embedded reference
/// lists; one item per check.
struct TableReport {
    struct Item {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    bool all_ok = false;
    std::vector<Item> items;
};
TableReport verify_reference_tables(unsigned threads = 0);

/// Embedded reference lists (exposed for tests).
const std::vector<uint64_t>& reference_non_members_below_200();
const std::vector<uint64_t>& reference_members_7mod8();
const std::vector<uint64_t>& reference_l_failures_below_200();

} // namespace duf

#endif
