// Command-line front end: differential uniformity scans, the L_alpha
// decomposition, Morse certification, exponent-set membership and the
// explicit bound calculator.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "duf/bounds.hpp"
#include "duf/diffop.hpp"
#include "duf/harness.hpp"
#include "duf/morse.hpp"
#include "duf/mset.hpp"
#include "duf/uniformity.hpp"

using namespace duf;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json field_json(const FieldCtx& f) {
    return json{{"n", f.n()}, {"modulus", f.modulus_hex()}};
}

std::vector<unsigned> parse_n_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) return {static_cast<unsigned>(std::stoul(s))};
    unsigned lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
    unsigned hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    if (hi < lo) throw CLI::ValidationError("--n", "range upper bound below lower bound");
    std::vector<unsigned> out;
    for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

json witness_json(const MWitness& w) {
    json j{{"t", w.t},
           {"i", w.i},
           {"j", w.j},
           {"zeta1", w.zeta1_hex},
           {"zeta2", w.zeta2_hex}};
    if (w.field) j["field"] = field_json(*w.field);
    return j;
}

json verdict_json(const MVerdict& v) {
    json j{{"m", v.m}, {"member", v.member}, {"t", v.t}, {"n0", v.n0}};
    j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    return j;
}

json morse_json(const MorseReport& r) {
    json j{{"cond_a", r.cond_a}, {"cond_b", r.cond_b}, {"cond_c", r.cond_c},
           {"is_morse", r.passed()}};
    json w = json::object();
    if (r.degenerate_factor) w["degenerate_factor"] = r.degenerate_factor->to_string();
    if (r.repeated_value_factor) w["repeated_value_factor"] = r.repeated_value_factor->to_string();
    j["witnesses"] = w;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential uniformity toolkit over F_{2^n}"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();

    // ---- lalpha ----
    std::string la_field, la_f, la_alpha;
    auto* la = app.add_subcommand("lalpha", "decompose D_alpha f through x(x+alpha)");
    la->add_option("--field", la_field, "field spec n or n:modulushex")->required();
    la->add_option("--f", la_f, "coefficients, highest degree first")->required();
    la->add_option("--alpha", la_alpha, "direction, hex")->required();

    // ---- morse ----
    auto* morse = app.add_subcommand("morse", "Morse certification");
    std::string mc_field, mc_g;
    auto* mcheck = morse->add_subcommand("check", "check one polynomial g");
    mcheck->add_option("--field", mc_field)->required();
    mcheck->add_option("--g", mc_g, "coefficients, highest degree first")->required();
    std::string msc_field, msc_f;
    bool msc_json = false;
    auto* mscan = morse->add_subcommand("scan", "scan alpha for non-Morse decompositions");
    mscan->add_option("--field", msc_field)->required();
    mscan->add_option("--f", msc_f)->required();
    mscan->add_flag("--json", msc_json);
    morse->require_subcommand(1);

    // ---- mset ----
    auto* mset = app.add_subcommand("mset", "exponent-set membership");
    uint64_t ms_m = 0, ms_limit = 200;
    auto* mset_check = mset->add_subcommand("check", "single membership verdict");
    mset_check->add_option("--m", ms_m)->required();
    bool ms_json = false;
    auto* mset_scan = mset->add_subcommand("scan", "verdicts for all odd m below a limit");
    mset_scan->add_option("--limit", ms_limit)->capture_default_str();
    mset_scan->add_flag("--json", ms_json);
    uint64_t ms_llimit = 200;
    auto* mset_lprime = mset->add_subcommand("lprime", "prime eligibility scan");
    mset_lprime->add_option("--limit", ms_llimit)->capture_default_str();
    std::string fam_kind = "first";
    FamilyParams fam_params;
    auto* mset_fam = mset->add_subcommand("families", "generate exponent families");
    mset_fam->add_option("--kind", fam_kind, "pow2|two-pows|l-power|first|second")
        ->capture_default_str();
    mset_fam->add_option("--l", fam_params.l, "odd prime parameter");
    mset_fam->add_option("--kmax", fam_params.kmax)->capture_default_str();
    mset_fam->add_option("--smax", fam_params.smax)->capture_default_str();
    mset->require_subcommand(1);

    // ---- delta / ddt ----
    std::string dl_field, dl_f;
    bool dl_exact = false;
    auto* dl = app.add_subcommand("delta", "differential uniformity");
    dl->add_option("--field", dl_field)->required();
    dl->add_option("--f", dl_f)->required();
    dl->add_flag("--exact-pairs", dl_exact, "full enumeration for the achieving-pair count");

    std::string dd_field, dd_f, dd_alpha;
    auto* dd = app.add_subcommand("ddt", "difference distribution rows");
    dd->add_option("--field", dd_field)->required();
    dd->add_option("--f", dd_f)->required();
    dd->add_option("--alpha", dd_alpha, "single row (hex); omit for per-row maxima");

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "explicit constants");
    uint64_t b_m = 7;
    bool b_json = false;
    auto* minn = bounds->add_subcommand("min-n", "smallest guaranteed n");
    minn->add_option("--m", b_m)->required();
    minn->add_flag("--json", b_json);
    bounds->require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "seeded experiments and golden tables");
    uint64_t v_m = 7, v_seed = 42, v_budget = uint64_t{1} << 36;
    std::string v_nrange = "8";
    uint32_t v_samples = 100;
    bool v_csv = false, v_force = false;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", v_m)->capture_default_str();
        cmd->add_option("--n", v_nrange, "single n or a..b")->capture_default_str();
        cmd->add_option("--samples", v_samples)->capture_default_str();
        cmd->add_option("--seed", v_seed)->capture_default_str();
        cmd->add_option("--budget", v_budget, "work budget in field evaluations")
            ->capture_default_str();
        cmd->add_flag("--csv", v_csv, "CSV instead of JSON lines");
        cmd->add_flag("--force", v_force, "skip the membership gate");
    };
    auto* v_theorem = verify->add_subcommand("theorem", "delta = m-1 census");
    add_common(v_theorem);
    auto* v_conj = verify->add_subcommand("conjecture", "achieving-fraction census");
    add_common(v_conj);
    auto* v_census = verify->add_subcommand("morse-census", "non-Morse alpha census");
    add_common(v_census);
    auto* v_tables = verify->add_subcommand("tables", "golden membership and prime tables");
    uint64_t e_m = 7;
    unsigned e_n = 3;
    auto* v_exh = verify->add_subcommand("exhaustive", "full enumeration of degree-m inputs");
    v_exh->add_option("--m", e_m)->capture_default_str();
    v_exh->add_option("--n", e_n)->capture_default_str();
    verify->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (la->parsed()) {
            FieldCtx f = parse_field_spec(la_field);
            FqPoly poly = FqPoly::from_string(f, la_f);
            FqElem alpha = elem_from_hex(f, la_alpha);
            LAlphaResult r = l_alpha(poly, alpha);
            bool roundtrip = compose_talpha(r.g, alpha) == d_alpha(poly, alpha);
            json j;
            j["field"] = field_json(f);
            j["f"] = poly.to_string();
            j["alpha"] = to_hex(alpha);
            j["g"] = r.g.to_string();
            json btop = json::array();
            for (FqElem b : r.b_top) btop.push_back(to_hex(b));
            j["b_top"] = btop;
            j["d"] = decomposition_degree(poly.degree());
            j["checks"] = {{"roundtrip", roundtrip}};
            std::cout << j.dump() << '\n';
        } else if (mcheck->parsed()) {
            FieldCtx f = parse_field_spec(mc_field);
            FqPoly g = FqPoly::from_string(f, mc_g);
            json j = morse_json(is_morse(g));
            j["g"] = g.to_string();
            j["field"] = field_json(f);
            std::cout << j.dump() << '\n';
        } else if (mscan->parsed()) {
            FieldCtx f = parse_field_spec(msc_field);
            FqPoly poly = FqPoly::from_string(f, msc_f);
            auto t0 = Clock::now();
            MorseScan scan = count_non_morse_alphas(poly, threads);
            if (msc_json) {
                json j;
                j["field"] = field_json(f);
                j["f"] = poly.to_string();
                j["count"] = scan.non_morse_count;
                j["fail_a"] = scan.fail_a;
                j["fail_b"] = scan.fail_b;
                j["fail_c"] = scan.fail_c;
                json bad = json::array();
                for (const auto& b : scan.bad) {
                    json e = morse_json(b.report);
                    e["alpha"] = to_hex(b.alpha);
                    bad.push_back(e);
                }
                j["bad"] = bad;
                j["runtime_ms"] = ms_since(t0);
                std::cout << j.dump() << '\n';
            } else {
                std::printf("non-Morse alpha: %llu of %llu (a:%llu b:%llu c:%llu)\n",
                            static_cast<unsigned long long>(scan.non_morse_count),
                            static_cast<unsigned long long>(f.group_order()),
                            static_cast<unsigned long long>(scan.fail_a),
                            static_cast<unsigned long long>(scan.fail_b),
                            static_cast<unsigned long long>(scan.fail_c));
                for (const auto& b : scan.bad)
                    std::printf("  alpha=%s a=%d b=%d c=%d\n", to_hex(b.alpha).c_str(),
                                b.report.cond_a, b.report.cond_b, b.report.cond_c);
            }
        } else if (mset_check->parsed()) {
            std::cout << verdict_json(in_m(ms_m, threads)).dump() << '\n';
        } else if (mset_scan->parsed()) {
            auto verdicts = scan_m(ms_limit, threads);
            if (ms_json) {
                for (const auto& v : verdicts) std::cout << verdict_json(v).dump() << '\n';
            } else {
                std::string nonmembers;
                for (const auto& v : verdicts)
                    if (!v.member) nonmembers += (nonmembers.empty() ? "" : ", ") + std::to_string(v.m);
                std::printf("odd m below %llu: %zu scanned, non-members: %s\n",
                            static_cast<unsigned long long>(ms_limit), verdicts.size(),
                            nonmembers.c_str());
            }
        } else if (mset_lprime->parsed()) {
            for (const auto& v : scan_l_primes(ms_llimit)) {
                json j{{"l", v.l},
                       {"wieferich_ok", v.wieferich_ok},
                       {"roots_ok", v.roots_ok},
                       {"ok", v.ok},
                       {"n0", v.n0}};
                std::cout << j.dump() << '\n';
            }
        } else if (mset_fam->parsed()) {
            FamilyKind kind;
            if (fam_kind == "pow2") kind = FamilyKind::pow2;
            else if (fam_kind == "two-pows") kind = FamilyKind::two_pows;
            else if (fam_kind == "l-power") kind = FamilyKind::l_power;
            else if (fam_kind == "first") kind = FamilyKind::first_family;
            else if (fam_kind == "second") kind = FamilyKind::second_family;
            else throw CLI::ValidationError("--kind", "unknown family kind " + fam_kind);
            for (const auto& e : gen_families(kind, fam_params)) {
                json j{{"m", e.m},
                       {"mod8", e.mod8},
                       {"provenance", e.provenance},
                       {"congruence_ok", e.congruence_ok}};
                std::cout << j.dump() << '\n';
            }
        } else if (dl->parsed()) {
            FieldCtx f = parse_field_spec(dl_field);
            FqPoly poly = FqPoly::from_string(f, dl_f);
            auto t0 = Clock::now();
            DeltaResult r = delta(poly, dl_exact, false, threads);
            json j;
            j["field"] = field_json(f);
            j["f"] = poly.to_string();
            j["delta"] = r.delta;
            j["achieving_pairs"] = r.achieving_pairs;
            j["exact"] = r.exact;
            if (r.exact) {
                uint64_t den = uint64_t{1} << (2 * f.n());
                uint64_t g = std::gcd(r.achieving_pairs, den);
                j["fraction"] = {{"num", r.achieving_pairs / (g ? g : 1)},
                                 {"den", den / (g ? g : 1)}};
            }
            if (r.example_pair)
                j["example"] = {{"alpha", to_hex(r.example_pair->first)},
                                {"beta", to_hex(r.example_pair->second)}};
            j["runtime_ms"] = ms_since(t0);
            std::cout << j.dump() << '\n';
        } else if (dd->parsed()) {
            FieldCtx f = parse_field_spec(dd_field);
            FqPoly poly = FqPoly::from_string(f, dd_f);
            auto t0 = Clock::now();
            if (!dd_alpha.empty()) {
                FqElem alpha = elem_from_hex(f, dd_alpha);
                DdtRow row = ddt_row(poly, alpha);
                json r = json::object();
                for (uint64_t b = 0; b < row.size(); ++b)
                    if (row[b]) r[to_hex(FqElem{b})] = row[b];
                json j{{"field", field_json(f)},
                       {"f", poly.to_string()},
                       {"alpha", to_hex(alpha)},
                       {"row", r},
                       {"runtime_ms", ms_since(t0)}};
                std::cout << j.dump() << '\n';
            } else {
                DeltaResult r = delta(poly, true, true, threads);
                json j{{"field", field_json(f)},
                       {"f", poly.to_string()},
                       {"delta", r.delta},
                       {"achieving_pairs", r.achieving_pairs},
                       {"per_alpha_max", r.per_alpha_max},
                       {"runtime_ms", ms_since(t0)}};
                std::cout << j.dump() << '\n';
            }
        } else if (minn->parsed()) {
            BoundReport rep = min_n_guarantee(b_m);
            json j{{"m", rep.m},
                   {"d", rep.d},
                   {"morse_alpha_bound", rep.morse_alpha_bound},
                   {"d_omega_cap", rep.d_omega_cap.str()},
                   {"genus_cap", rep.genus_cap.str()},
                   {"min_n", rep.min_n}};
            std::cout << j.dump() << '\n';
            (void)b_json;
        } else if (v_tables->parsed()) {
            TableReport rep = verify_reference_tables(threads);
            for (const auto& item : rep.items) {
                json j{{"check", item.name}, {"ok", item.ok}};
                if (!item.detail.empty()) j["detail"] = item.detail;
                std::cout << j.dump() << '\n';
            }
            return rep.all_ok ? 0 : 2;
        } else if (v_exh->parsed()) {
            std::cout << to_json(exhaustive_delta_census(e_m, e_n, threads)) << '\n';
        } else if (v_theorem->parsed() || v_conj->parsed() || v_census->parsed()) {
            ExperimentConfig cfg;
            cfg.m = v_m;
            cfg.n_range = parse_n_range(v_nrange);
            cfg.samples = v_samples;
            cfg.seed = v_seed;
            cfg.threads = threads;
            cfg.allow_non_member = v_force;
            cfg.work_budget = v_budget;
            cfg.mode = v_theorem->parsed() ? ExperimentMode::theorem_max_uniformity
                       : v_conj->parsed()  ? ExperimentMode::conjecture_fraction
                                           : ExperimentMode::morse_census;
            ExperimentRecord rec = run_experiment(cfg);
            std::cout << (v_csv ? to_csv(rec) : to_jsonl(rec, true));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
