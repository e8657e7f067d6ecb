#include "duf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "duf/bounds.hpp"
#include "duf/morse.hpp"
#include "duf/parallel.hpp"

namespace duf {

using json = nlohmann::json;

uint64_t CounterRng::mix(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

CounterRng CounterRng::keyed(uint64_t seed, uint64_t stream) {
    return CounterRng{mix(seed ^ mix(stream)), 0};
}

FqPoly random_poly(const FieldCtx& ctx, int degree, CounterRng& rng) {
    if (degree < 0) fail(errc::invalid_argument, "degree must be nonnegative");
    const uint64_t mask = ctx.elem_mask();
    std::vector<FqElem> asc(static_cast<size_t>(degree) + 1, fq_zero);
    uint64_t lead;
    do {
        lead = rng.next() & mask;
    } while (lead == 0);
    asc[static_cast<size_t>(degree)] = FqElem{lead};
    for (int i = degree - 1; i >= 0; --i) asc[static_cast<size_t>(i)] = FqElem{rng.next() & mask};
    return FqPoly(ctx, std::move(asc));
}

namespace {

const char* mode_name(ExperimentMode m) {
    switch (m) {
        case ExperimentMode::theorem_max_uniformity: return "theorem";
        case ExperimentMode::conjecture_fraction: return "conjecture";
        case ExperimentMode::morse_census: return "morse_census";
    }
    return "?";
}

// pairs / 2^(2n) >= 1 / (d! 2^(d+1)), exactly.
bool fraction_reaches_epsilon(uint64_t pairs, unsigned n, uint64_t d) {
    BigInt lhs = BigInt(pairs);
    for (uint64_t i = 2; i <= d; ++i) lhs *= i;
    lhs <<= static_cast<unsigned>(d + 1);
    return lhs >= (BigInt(1) << (2 * n));
}

struct SampleResult {
    uint32_t delta = 0;
    bool fail = false;
    bool degenerate = false;
    std::string failure_poly;
    uint64_t pairs = 0;
    bool reaches_eps = true;
    uint64_t bad_alphas = 0;
    bool coherence_checked = false;
    bool coherence_ok = true;
};

void check_budget(const ExperimentConfig& cfg) {
    unsigned __int128 work = 0;
    for (unsigned n : cfg.n_range) {
        unsigned __int128 q = static_cast<unsigned __int128>(1) << n;
        if (cfg.mode == ExperimentMode::morse_census)
            work += static_cast<unsigned __int128>(cfg.samples) * q * cfg.m * cfg.m;
        else
            work += static_cast<unsigned __int128>(cfg.samples) * q * q;
    }
    if (work > cfg.work_budget)
        fail(errc::scale_error, "configured work budget exceeded; raise work_budget to proceed");
}

} // namespace

ExperimentRecord run_experiment(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) fail(errc::invalid_argument, "samples must be >= 1");
    if (cfg.n_range.empty()) fail(errc::invalid_argument, "empty n range");
    for (unsigned n : cfg.n_range)
        if (n < 1 || n > 20) fail(errc::scale_error, "experiments are capped at n <= 20");
    if (cfg.m % 4 != 3 || cfg.m < 7)
        fail(errc::unsupported_degree, "experiments need m >= 7 with m = 3 mod 4");
    if (!cfg.allow_non_member && !in_m(cfg.m).member)
        fail(errc::m_not_member, "m = " + std::to_string(cfg.m) +
                                     " is not in the exponent set (override to explore)");
    check_budget(cfg);

    const uint64_t d = (cfg.m - 1) / 2;
    ExperimentRecord rec;
    rec.config = cfg;

    for (unsigned n : cfg.n_range) {
        auto t0 = std::chrono::steady_clock::now();
        FieldCtx ctx = mk_field(n);
        std::vector<SampleResult> results(cfg.samples);

        parallel_chunks(0, cfg.samples, cfg.threads, [&](unsigned, uint64_t lo, uint64_t hi) {
            for (uint64_t i = lo; i < hi; ++i) {
                // stream keyed by (n, i): sample i is reproducible on its own
                CounterRng rng = CounterRng::keyed(cfg.seed, (static_cast<uint64_t>(n) << 32) | i);
                FqPoly f = random_poly(ctx, static_cast<int>(cfg.m), rng);
                SampleResult& sr = results[i];

                if (cfg.mode == ExperimentMode::morse_census) {
                    sr.bad_alphas = count_non_morse_alphas(f, 1).non_morse_count;
                    continue;
                }

                const bool exact = cfg.mode == ExperimentMode::conjecture_fraction;
                DeltaResult dr = delta(f, exact, false, 1);
                sr.delta = dr.delta;
                sr.fail = (dr.delta != cfg.m - 1);
                if (sr.fail) sr.failure_poly = f.to_string();
                // a1^2 + a0 a2 distinguishes the two branches when m = 3 mod 8
                FqElem a0 = f.coeff(static_cast<int>(cfg.m));
                FqElem a1 = f.coeff(static_cast<int>(cfg.m) - 1);
                FqElem a2 = f.coeff(static_cast<int>(cfg.m) - 2);
                sr.degenerate = fq_add(fq_sq(ctx, a1), fq_mul(ctx, a0, a2)) == fq_zero;

                if (cfg.mode == ExperimentMode::conjecture_fraction) {
                    sr.pairs = dr.achieving_pairs;
                    sr.reaches_eps = fraction_reaches_epsilon(dr.achieving_pairs, n, d);
                }

                if (cfg.mode == ExperimentMode::theorem_max_uniformity && cfg.m == 7 && !sr.fail) {
                    sr.coherence_checked = true;
                    bool ok = dr.example_pair &&
                              splits_simply(f, dr.example_pair->first, dr.example_pair->second);
                    if (i < 4) {
                        MorseScan scan = count_non_morse_alphas(f, 1);
                        ok = ok && scan.non_morse_count < ctx.group_order();
                    }
                    sr.coherence_ok = ok;
                }
            }
        });

        ExperimentEntry e;
        e.n = n;
        e.samples = cfg.samples;
        e.alpha_bound = (cfg.mode == ExperimentMode::morse_census) ? morse_alpha_bound(cfg.m) : 0;
        e.min_fraction = Fraction{1, 1};
        bool first_fraction = true;
        for (const auto& sr : results) {
            switch (cfg.mode) {
                case ExperimentMode::theorem_max_uniformity:
                    ++e.delta_histogram[sr.delta];
                    if (sr.fail) {
                        ++e.failures;
                        e.failure_polys.push_back(sr.failure_poly);
                    }
                    if (cfg.m % 8 == 3 && sr.degenerate) {
                        ++e.degenerate_samples;
                        if (sr.fail) ++e.degenerate_failures;
                    }
                    if (sr.coherence_checked) {
                        ++e.coherence_checked;
                        if (sr.coherence_ok) ++e.coherence_ok;
                    }
                    break;
                case ExperimentMode::conjecture_fraction: {
                    ++e.delta_histogram[sr.delta];
                    if (sr.fail) ++e.failures;
                    if (!sr.reaches_eps) ++e.below_epsilon;
                    const unsigned shift = 2 * n;
                    Fraction fr{sr.pairs, uint64_t{1} << shift};
                    // compare sr.pairs / 2^(2n) < min: cross-multiply in 128 bits
                    unsigned __int128 l = static_cast<unsigned __int128>(fr.num) * e.min_fraction.den;
                    unsigned __int128 r = static_cast<unsigned __int128>(e.min_fraction.num) * fr.den;
                    if (first_fraction || l < r) {
                        uint64_t g = std::gcd(fr.num, fr.den);
                        e.min_fraction = g ? Fraction{fr.num / g, fr.den / g} : fr;
                        first_fraction = false;
                    }
                    break;
                }
                case ExperimentMode::morse_census:
                    e.max_bad_alphas = std::max(e.max_bad_alphas, sr.bad_alphas);
                    break;
            }
        }
        e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rec.entries.push_back(std::move(e));
    }
    return rec;
}

std::string to_jsonl(const ExperimentRecord& rec, bool include_runtime) {
    std::ostringstream os;
    for (const auto& e : rec.entries) {
        json j;
        j["m"] = rec.config.m;
        j["mode"] = mode_name(rec.config.mode);
        j["seed"] = rec.config.seed;
        j["n"] = e.n;
        j["samples"] = e.samples;
        switch (rec.config.mode) {
            case ExperimentMode::theorem_max_uniformity: {
                j["failures"] = e.failures;
                j["failure_polys"] = e.failure_polys;
                json hist = json::object();
                for (auto [dv, c] : e.delta_histogram) hist[std::to_string(dv)] = c;
                j["delta_histogram"] = hist;
                if (rec.config.m % 8 == 3) {
                    j["degenerate_samples"] = e.degenerate_samples;
                    j["degenerate_failures"] = e.degenerate_failures;
                }
                j["coherence_checked"] = e.coherence_checked;
                j["coherence_ok"] = e.coherence_ok;
                break;
            }
            case ExperimentMode::conjecture_fraction: {
                j["failures"] = e.failures;
                j["min_fraction"] = {{"num", e.min_fraction.num}, {"den", e.min_fraction.den}};
                j["below_epsilon"] = e.below_epsilon;
                break;
            }
            case ExperimentMode::morse_census: {
                j["max_bad_alphas"] = e.max_bad_alphas;
                j["alpha_bound"] = e.alpha_bound;
                break;
            }
        }
        if (include_runtime) j["runtime_ms"] = e.runtime_ms;
        os << j.dump() << '\n';
    }
    return os.str();
}

std::string to_csv(const ExperimentRecord& rec) {
    std::ostringstream os;
    os << "mode,m,n,seed,samples,failures,min_fraction_num,min_fraction_den,below_epsilon,"
          "max_bad_alphas,alpha_bound,coherence_checked,coherence_ok\n";
    for (const auto& e : rec.entries) {
        os << mode_name(rec.config.mode) << ',' << rec.config.m << ',' << e.n << ','
           << rec.config.seed << ',' << e.samples << ',' << e.failures << ','
           << e.min_fraction.num << ',' << e.min_fraction.den << ',' << e.below_epsilon << ','
           << e.max_bad_alphas << ',' << e.alpha_bound << ',' << e.coherence_checked << ','
           << e.coherence_ok << '\n';
    }
    return os.str();
}

ExhaustiveCensus exhaustive_delta_census(uint64_t m, unsigned n, unsigned threads) {
    if (n > 8 || m > 9) fail(errc::scale_error, "full enumeration is desk scale only");
    const uint64_t q = uint64_t{1} << n;
    unsigned __int128 span = q - 1;
    for (uint64_t i = 0; i < m; ++i) span *= q;
    if (span > (uint64_t{1} << 26)) fail(errc::scale_error, "enumeration too large");
    const uint64_t total = static_cast<uint64_t>(span);

    FieldCtx ctx = mk_field(n);
    uint64_t qm = 1;
    for (uint64_t i = 0; i < m; ++i) qm *= q;

    unsigned t = effective_threads(threads, total);
    std::vector<std::map<uint32_t, uint64_t>> locals(t);
    parallel_chunks(0, total, t, [&](unsigned w, uint64_t lo, uint64_t hi) {
        auto& counts = locals[w];
        std::vector<FqElem> asc(m + 1);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            uint64_t lead = 1 + idx / qm;
            uint64_t rest = idx % qm;
            asc[m] = FqElem{lead};
            for (uint64_t j = 0; j < m; ++j) {
                asc[j] = FqElem{rest % q};
                rest /= q;
            }
            FqPoly f(ctx, asc);
            ++counts[delta(f, false, false, 1).delta];
        }
    });

    ExhaustiveCensus census;
    census.m = m;
    census.n = n;
    census.total = total;
    for (auto& counts : locals)
        for (auto [dv, c] : counts) census.delta_counts[dv] += c;
    return census;
}

std::string to_json(const ExhaustiveCensus& census) {
    json j;
    j["m"] = census.m;
    j["n"] = census.n;
    j["total"] = census.total;
    json counts = json::object();
    for (auto [dv, c] : census.delta_counts) counts[std::to_string(dv)] = c;
    j["delta_counts"] = counts;
    return j.dump();
}

namespace {

const std::vector<uint64_t> kNonMembersBelow200 = {
    15, 29, 31, 43, 57, 61, 63, 71, 85, 91, 99, 103, 113, 121,
    125, 127, 141, 147, 151, 155, 169, 171, 179, 181, 183, 187, 197};

const std::vector<uint64_t> kMembers7Mod8 = {7,   23,  39,  47,  55,  79,  87,  95, 111,
                                             119, 135, 143, 159, 167, 175, 191, 199};

const std::vector<uint64_t> kLFailuresBelow200 = {7, 31, 73, 89, 127};

std::string join(const std::vector<uint64_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

const std::vector<uint64_t>& reference_non_members_below_200() { return kNonMembersBelow200; }
const std::vector<uint64_t>& reference_members_7mod8() { return kMembers7Mod8; }
const std::vector<uint64_t>& reference_l_failures_below_200() { return kLFailuresBelow200; }

TableReport verify_reference_tables(unsigned threads) {
    TableReport rep;

    std::vector<uint64_t> non_members;
    for (const auto& v : scan_m(200, threads))
        if (!v.member) non_members.push_back(v.m);
    {
        TableReport::Item item;
        item.name = "m_non_members_below_200";
        item.ok = non_members == kNonMembersBelow200;
        if (!item.ok)
            item.detail = "expected {" + join(kNonMembersBelow200) + "} got {" + join(non_members) + "}";
        rep.items.push_back(std::move(item));
    }
    {
        TableReport::Item item;
        item.name = "m_members_7mod8";
        std::vector<uint64_t> wrong;
        for (uint64_t m : kMembers7Mod8)
            if (!in_m(m, threads).member) wrong.push_back(m);
        item.ok = wrong.empty();
        if (!item.ok) item.detail = "not members: {" + join(wrong) + "}";
        rep.items.push_back(std::move(item));
    }
    {
        TableReport::Item item;
        item.name = "l_failures_below_200";
        std::vector<uint64_t> failures;
        for (const auto& v : scan_l_primes(200))
            if (!v.ok) failures.push_back(v.l);
        item.ok = failures == kLFailuresBelow200;
        if (!item.ok)
            item.detail = "expected {" + join(kLFailuresBelow200) + "} got {" + join(failures) + "}";
        rep.items.push_back(std::move(item));
    }

    rep.all_ok = true;
    for (const auto& item : rep.items) rep.all_ok = rep.all_ok && item.ok;
    return rep;
}

} // namespace duf
