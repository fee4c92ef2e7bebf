// prodeq - exact and asymptotic counting for multiplicative product equations.
//
// Subcommands: count, correlation, fc, zeta, identity, verify, bench.
// Global flags: --format json|csv, --threads N, --budget-mem BYTES, --out FILE,
// --timings.  Each global flag can also be set via PRODEQ_<NAME>.
// Exit codes: 0 ok, 1 verification/computation failure, 2 usage error,
// 3 memory budget exceeded.

#include <chrono>
#include <cmath>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "prodeq/budget.hpp"
#include "prodeq/constants.hpp"
#include "prodeq/correlation.hpp"
#include "prodeq/counting.hpp"
#include "prodeq/fc_sets.hpp"
#include "prodeq/identities.hpp"
#include "prodeq/report.hpp"
#include "prodeq/tau_table.hpp"
#include "prodeq/verify.hpp"
#include "prodeq/zeta_sums.hpp"

namespace {

using namespace prodeq;

struct GlobalOpts {
    std::string format = "json";
    std::string out;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    u64 budget_mem = u64(1) << 30;
    double budget_time_s = 0.0;  // 0 = unlimited; consumed by bench
    bool timings = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<u64> parse_u64_list(const std::string& csv) {
    std::vector<u64> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(std::stoull(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("empty list");
    return out;
}

std::string join_u64(const std::vector<u64>& v) {
    std::string out;
    for (u64 e : v) out += (out.empty() ? "" : ",") + std::to_string(e);
    return out;
}

// ---- count ----

struct CountArgs {
    int k = 1;
    u64 b = 1;
    std::string method = "oracle";
    bool report_asymptotic = false;
};

int run_count(const CountArgs& a, const GlobalOpts& g) {
    Budget budget{g.budget_mem};
    auto t0 = std::chrono::steady_clock::now();
    CountReport rep;
    rep.k = a.k;
    rep.B = a.b;
    rep.method = a.method;
    if (a.method == "oracle") {
        rep.value = count_nk_oracle(a.k, a.b, budget);
    } else if (a.method == "coprime") {
        rep.value = count_nk_coprime(a.k, a.b, g.threads, budget);
    } else if (a.method == "fast") {
        if (a.k != 1) throw CLI::ValidationError("--method fast requires --k 1");
        SieveTable s(a.b, {2}, budget);
        rep.value = count_n1_fast(a.b, s);
    } else {
        throw CLI::ValidationError("unknown method: " + a.method);
    }
    rep.wall_time_s = seconds_since(t0);

    if (a.report_asymptotic) {
        double bd = static_cast<double>(a.b);
        if (a.k == 1 && a.b >= 10) {
            double main = kN1Leading * bd * bd * std::log(bd) + kN1Secondary * bd * bd;
            rep.main_term = main;
            rep.gap = rep.value.to_double() - main;
        } else if (a.k >= 2 && a.b >= 2) {
            double lb = std::log(bd);
            double bk1 = std::pow(bd, a.k + 1);
            rep.ratio_lower = rep.value.to_double() / (bk1 * std::pow(lb, a.k * a.k));
            rep.ratio_upper =
                rep.value.to_double() / (bk1 * std::pow(lb, a.k * a.k + 2 * a.k - 2));
        }
    }
    emit_table(json::array({count_report_row(rep, g.timings)}), g.format, g.out);
    return 0;
}

// ---- correlation ----

struct CorrArgs {
    int k = 2;
    u64 x = 1, n = 1, m = 1;
    u64 box = 0;
    std::string method = "direct";
};

int run_correlation(const CorrArgs& a, const GlobalOpts& g) {
    Budget budget{g.budget_mem};
    auto t0 = std::chrono::steady_clock::now();
    ExactCount value;
    if (a.method == "direct") {
        SieveTable s(std::max<u64>(a.x, 2), {2}, budget);
        value = corr_direct({a.k, a.x, a.n, a.m, {}}, s);
    } else if (a.method == "br1") {
        if (a.k != 2) throw CLI::ValidationError("--method br1 requires --k 2");
        SieveTable s(std::max<u64>(a.x, 2), {2}, budget);
        value = corr_br1(a.x, a.n, a.m, s);
    } else if (a.method == "restricted") {
        if (a.box == 0) throw CLI::ValidationError("--method restricted requires --box");
        CorrelationQuery q{a.k, a.x, a.n, a.m, a.box};
        value = corr_restricted(q, budget);
    } else {
        throw CLI::ValidationError("unknown method: " + a.method);
    }
    json row;
    row["k"] = a.k;
    row["x"] = a.x;
    row["n"] = a.n;
    row["m"] = a.m;
    if (a.box) row["box"] = a.box;
    row["method"] = a.method;
    row["value"] = value.str();
    if (g.timings) row["wall_time_s"] = seconds_since(t0);
    emit_table(json::array({row}), g.format, g.out);
    return 0;
}

// ---- fc ----

struct FcArgs {
    u64 b = 1;
    std::string set_csv;
    std::string primes_csv;
    std::string method = "oracle";
    bool close = false;
    bool fit_c = false;
    double alpha = 0.5;
};

FcSet fc_set_from_args(const FcArgs& a) {
    std::vector<u64> elems = parse_u64_list(a.set_csv);
    if (a.close) {
        FcSet F = FcSet::closure(elems);
        std::cerr << "note: closure applied, set has " << F.size() << " elements: "
                  << join_u64(F.elements()) << "\n";
        return F;
    }
    return FcSet::checked(elems);
}

int run_fc_count(const FcArgs& a, const GlobalOpts& g) {
    Budget budget{g.budget_mem};
    auto t0 = std::chrono::steady_clock::now();
    ExactCount value;
    json row;
    row["B"] = a.b;
    if (!a.primes_csv.empty()) {
        PrimeFamily fam(parse_u64_list(a.primes_csv));
        row["primes"] = a.primes_csv;
        if (a.method == "family") value = count_nbf_prime_family(a.b, fam);
        else if (a.method == "oracle") value = count_nbf_oracle(a.b, fam.induced_set(), budget);
        else if (a.method == "formula") value = count_nbf_formula(a.b, fam.induced_set());
        else throw CLI::ValidationError("unknown method: " + a.method);
    } else if (!a.set_csv.empty()) {
        FcSet F = fc_set_from_args(a);
        row["set"] = join_u64(F.elements());
        if (a.method == "oracle") value = count_nbf_oracle(a.b, F, budget);
        else if (a.method == "formula") value = count_nbf_formula(a.b, F);
        else throw CLI::ValidationError("--method family requires --primes");
    } else {
        throw CLI::ValidationError("need --set or --primes");
    }
    row["method"] = a.method;
    row["value"] = value.str();
    if (g.timings) row["wall_time_s"] = seconds_since(t0);
    emit_table(json::array({row}), g.format, g.out);
    return 0;
}

int run_fc_bounds(const FcArgs& a, const GlobalOpts& g) {
    if (a.primes_csv.empty()) throw CLI::ValidationError("fc bounds requires --primes");
    auto t0 = std::chrono::steady_clock::now();
    PrimeFamily fam(parse_u64_list(a.primes_csv));
    LowerBoundResult lo = np_lower_bound(a.b, fam);
    ExactCount exact = count_nbf_prime_family(a.b, fam);

    json row;
    row["B"] = a.b;
    row["primes"] = a.primes_csv;
    row["lower_bound"] = lo.value;
    row["lower_bound_exact"] = lo.exact_value.str();
    row["exact"] = exact.str();
    row["hypothesis_ok"] = lo.hypothesis_ok;
    if (!lo.hypothesis_ok)
        std::cerr << "warning: B < product of the primes, bounds outside their hypothesis\n";
    if (a.fit_c) {
        u64 stride = fam.primorial();
        std::vector<u64> grid;
        for (u64 B = stride; B <= std::max(a.b, stride); B += stride) grid.push_back(B);
        double c = fit_upper_c(fam, grid);
        row["fitted_c"] = c;
        row["upper_at_fitted_c"] = np_upper_form(a.b, fam, c);
    } else {
        row["upper_at_c0"] = np_upper_form(a.b, fam, 0.0);
    }
    if (g.timings) row["wall_time_s"] = seconds_since(t0);
    emit_table(json::array({row}), g.format, g.out);
    return 0;
}

int run_fc_nf(const FcArgs& a, const GlobalOpts& g) {
    Budget budget{g.budget_mem};
    auto t0 = std::chrono::steady_clock::now();
    NfCheckResult r = theorem_nf_check(a.b, a.alpha, budget);
    json row;
    row["B"] = a.b;
    row["alpha"] = a.alpha;
    row["bound"] = r.bound;
    row["exact"] = r.exact.str();
    row["set_size"] = r.f_elements.size();
    row["holds"] = r.exact.to_double() <= r.bound;
    if (g.timings) row["wall_time_s"] = seconds_since(t0);
    emit_table(json::array({row}), g.format, g.out);
    return r.exact.to_double() <= r.bound ? 0 : 1;
}

// ---- zeta ----

struct ZetaArgs {
    u64 b = 1;
    double t0 = 1.0;
    double t1 = 100.0;
    double step = 0.0;
};

int run_zeta(const ZetaArgs& a, const GlobalOpts& g) {
    auto start = std::chrono::steady_clock::now();
    Interval I{a.t0, a.t1, a.step};
    SupBound sb = sup_lower_bound(a.b, I, g.threads);
    json row;
    row["B"] = a.b;
    row["interval"] = "[" + format_g12(a.t0) + ", " + format_g12(a.t1) + "]";
    row["step"] = sb.moments.step;
    row["mean2"] = sb.moments.mean2;
    row["mean4"] = sb.moments.mean4;
    row["sup_sampled"] = sb.moments.sup_sampled;
    row["discretization_slack"] = sb.moments.discretization_slack;
    row["lower_bound"] = sb.lower_bound;
    row["ratio_to_sqrt_BlogB"] = sb.ratio_to_sqrt_blogb;
    if (g.timings) row["wall_time_s"] = seconds_since(start);
    emit_table(json::array({row}), g.format, g.out);
    return 0;
}

// ---- identity ----

struct IdentityArgs {
    u64 a = 1, b = 1, u = 1, v = 1, d = 1, x = 0;
    std::string method = "direct";
};

int run_identity(const std::string& which, const IdentityArgs& a, const GlobalOpts& g) {
    SieveTable s(std::max<u64>(a.x, 1'000), {2});
    json row;
    if (which == "br") {
        row["a"] = a.a;
        row["b"] = a.b;
        row["rhs"] = busche_ramanujan_rhs(a.a, a.b, s).str();
        row["d_a_times_d_b"] =
            (ExactCount(dk_value_u64(2, s.factorize(a.a))) * ExactCount(dk_value_u64(2, s.factorize(a.b)))).str();
    } else if (which == "ramanujan") {
        row["u"] = a.u;
        row["v"] = a.v;
        row["rhs"] = ramanujan_f_rhs(a.u, a.v, s).str();
        row["d_uv"] = dk_value(2, s.factorize(a.u * a.v)).str();
    } else if (which == "wilson") {
        row["v"] = a.v;
        Rat alpha = wilson_alpha(a.v, s);
        row["alpha"] = alpha.str();
        row["alpha_real"] = alpha.to_double();
        row["beta_printed"] = wilson_beta_as_printed(a.v, s);
        if (a.x >= 100) row["beta_empirical"] = wilson_beta_empirical(a.v, a.x, s);
    } else if (which == "rho") {
        row["d"] = a.d;
        row["a"] = a.a;
        row["rho"] = rho(a.d, a.a, s).str();
    } else if (which == "dan2") {
        u64 x = a.x ? a.x : 1'000;
        row["a"] = a.a;
        row["x"] = x;
        SumDan2Method m =
            a.method == "rho" ? SumDan2Method::rho_formula : SumDan2Method::direct;
        row["method"] = a.method == "rho" ? "rho_formula" : "direct";
        row["value"] = sum_d_an2(a.a, x, m, s).str();
    }
    emit_table(json::array({row}), g.format, g.out);
    return 0;
}

// ---- verify ----

int run_verify_cmd(std::vector<std::string> suites, const VerifyGrids& grids, const GlobalOpts& g) {
    if (suites.empty()) suites = {"identities", "correlation", "counting", "fc", "zeta"};
    std::vector<VerificationSummary> results = run_verify(suites, grids, g.threads);
    bool any_fail = false;
    u64 cases = 0;
    for (const VerificationSummary& r : results) {
        cases += r.cases;
        std::cout << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size()
                  << " failures (" << format_g12(r.wall_s) << " s)\n";
        for (const Failure& f : r.failures) {
            std::cout << "  FAIL " << f.what << "\n       repro: " << f.repro << "\n";
            any_fail = true;
        }
        for (const std::string& w : r.warnings) std::cout << "  note: " << w << "\n";
    }
    std::cout << (any_fail ? "FAILED" : "OK") << " (" << cases << " cases)\n";
    return any_fail ? 1 : 0;
}

// ---- bench ----

struct BenchArgs {
    int k = 1;
    std::string sizes_csv = "100";
    std::vector<std::string> methods = {"oracle", "coprime", "fast"};
};

int run_bench(const BenchArgs& a, const GlobalOpts& g, bool format_given) {
    Budget budget{g.budget_mem};
    json rows = json::array();
    bool disagreement = false;
    auto bench_start = std::chrono::steady_clock::now();
    for (u64 B : parse_u64_list(a.sizes_csv)) {
        std::optional<ExactCount> reference;
        std::vector<json> size_rows;
        for (const std::string& method : a.methods) {
            json row;
            row["method"] = method;
            row["k"] = a.k;
            row["B"] = B;
            if (g.budget_time_s > 0.0 && seconds_since(bench_start) > g.budget_time_s) {
                row["value"] = "";
                row["wall_time_s"] = nullptr;
                row["status"] = "skipped (time)";
                size_rows.push_back(row);
                continue;
            }
            auto t0 = std::chrono::steady_clock::now();
            try {
                ExactCount value;
                if (method == "oracle") value = count_nk_oracle(a.k, B, budget);
                else if (method == "coprime") value = count_nk_coprime(a.k, B, g.threads, budget);
                else if (method == "fast") {
                    if (a.k != 1) throw CLI::ValidationError("fast method requires k = 1");
                    SieveTable s(B, {2}, budget);
                    value = count_n1_fast(B, s);
                } else throw CLI::ValidationError("unknown method: " + method);
                row["value"] = value.str();
                row["wall_time_s"] = seconds_since(t0);
                row["status"] = "ok";
                if (reference && *reference != value) {
                    row["status"] = "DISAGREES";
                    disagreement = true;
                }
                if (!reference) reference = value;
            } catch (const BudgetError& e) {
                row["value"] = "";
                row["wall_time_s"] = nullptr;
                row["status"] = "skipped (budget)";
            }
            size_rows.push_back(row);
        }
        // correctness precedes speed: no timings unless every method agreed
        if (disagreement)
            for (auto& r : size_rows) r["wall_time_s"] = nullptr;
        for (auto& r : size_rows) rows.push_back(r);
    }
    emit_table(rows, format_given ? g.format : "csv", g.out);
    if (disagreement) {
        std::cerr << "error: methods disagree, timings are not valid\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting workbench for multiplicative product equations"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("PRODEQ_FORMAT");
    app.add_option("--out", g.out, "write output to this file instead of stdout")
        ->envname("PRODEQ_OUT");
    app.add_option("--threads", g.threads, "parallelism degree (default: machine width)")
        ->check(CLI::PositiveNumber)
        ->envname("PRODEQ_THREADS");
    app.add_option("--budget-mem", g.budget_mem, "memory budget in bytes for any single table")
        ->check(CLI::PositiveNumber)
        ->envname("PRODEQ_BUDGET_MEM");
    app.add_option("--budget-time", g.budget_time_s,
                   "wall-time budget in seconds; bench skips runs past it (0 = unlimited)")
        ->envname("PRODEQ_BUDGET_TIME");
    app.add_flag("--timings", g.timings, "include wall_time_s in emitted tables")
        ->envname("PRODEQ_TIMINGS");

    // count
    CountArgs ca;
    CLI::App* count = app.add_subcommand("count", "exact N_k(B) by one of the methods");
    count->add_option("--k", ca.k, "equation order k")->required()->check(CLI::Range(1, 6));
    count->add_option("--b", ca.b, "box bound B")->required()->check(CLI::PositiveNumber);
    count->add_option("--method", ca.method, "oracle | coprime | fast")->required();
    count->add_flag("--report-asymptotic", ca.report_asymptotic,
                    "add main term and gap (k=1) or bound ratios (k>=2)");

    // correlation
    CorrArgs ra;
    CLI::App* corr = app.add_subcommand("correlation", "sum_{j<=x} d_k(jn) d_k(jm)");
    corr->add_option("--k", ra.k)->check(CLI::Range(1, 6));
    corr->add_option("--x", ra.x)->required()->check(CLI::PositiveNumber);
    corr->add_option("--n", ra.n)->required()->check(CLI::PositiveNumber);
    corr->add_option("--m", ra.m)->required()->check(CLI::PositiveNumber);
    corr->add_option("--box", ra.box, "box bound for the restricted route");
    corr->add_option("--method", ra.method, "direct | br1 | restricted")->required();

    // fc
    FcArgs fa;
    CLI::App* fc = app.add_subcommand("fc", "factor-closed set counts and bounds");
    fc->require_subcommand(1);
    CLI::App* fc_count = fc->add_subcommand("count", "exact N(B,F)");
    fc_count->add_option("--b", fa.b)->required()->check(CLI::PositiveNumber);
    fc_count->add_option("--set", fa.set_csv, "comma-separated elements of F");
    fc_count->add_option("--primes", fa.primes_csv, "comma-separated primes generating F");
    fc_count->add_option("--method", fa.method, "oracle | formula | family")->required();
    fc_count->add_flag("--close", fa.close, "apply factor closure to --set before counting");
    CLI::App* fc_bounds = fc->add_subcommand("bounds", "prime-family sandwich bounds");
    fc_bounds->add_option("--b", fa.b)->required()->check(CLI::PositiveNumber);
    fc_bounds->add_option("--primes", fa.primes_csv)->required();
    fc_bounds->add_flag("--fit-c", fa.fit_c, "fit the free constant in the upper form");
    CLI::App* fc_nf = fc->add_subcommand("nf", "product-set family bound at exponent alpha");
    fc_nf->add_option("--b", fa.b)->required()->check(CLI::PositiveNumber);
    fc_nf->add_option("--alpha", fa.alpha)->required()->check(CLI::Range(0.0, 0.5));

    // zeta
    ZetaArgs za;
    CLI::App* zeta = app.add_subcommand("zeta", "zeta partial-sum moments");
    zeta->require_subcommand(1);
    CLI::App* zmom = zeta->add_subcommand("moments", "interval moments of |S_B|");
    zmom->add_option("--b", za.b)->required()->check(CLI::PositiveNumber);
    zmom->add_option("--t0", za.t0)->required();
    zmom->add_option("--t1", za.t1)->required();
    zmom->add_option("--step", za.step, "grid step (default: required resolution)");
    CLI::App* zsup = zeta->add_subcommand("supbound", "certified sup lower bound over the interval");
    zsup->add_option("--b", za.b)->required()->check(CLI::PositiveNumber);
    zsup->add_option("--t0", za.t0)->required();
    zsup->add_option("--t1", za.t1)->required();
    zsup->add_option("--step", za.step);

    // identity
    IdentityArgs ia;
    CLI::App* ident = app.add_subcommand("identity", "classical identity evaluators");
    ident->require_subcommand(1);
    CLI::App* id_br = ident->add_subcommand("br", "Busche-Ramanujan right-hand side");
    id_br->add_option("--a", ia.a)->required();
    id_br->add_option("--b", ia.b)->required();
    CLI::App* id_ram = ident->add_subcommand("ramanujan", "Ramanujan (F) right-hand side");
    id_ram->add_option("--u", ia.u)->required();
    id_ram->add_option("--v", ia.v)->required();
    CLI::App* id_wil = ident->add_subcommand("wilson", "Wilson coefficients for d(nv)");
    id_wil->add_option("--v", ia.v)->required();
    id_wil->add_option("--x", ia.x, "also report the empirical beta at this x");
    CLI::App* id_rho = ident->add_subcommand("rho", "rho(d; a)");
    id_rho->add_option("--d", ia.d)->required();
    id_rho->add_option("--a", ia.a)->required();
    CLI::App* id_dan2 = ident->add_subcommand("dan2", "sum_{n<=x} d(a n^2)");
    id_dan2->add_option("--a", ia.a)->required();
    id_dan2->add_option("--x", ia.x)->required();
    id_dan2->add_option("--method", ia.method, "direct | rho");

    // verify
    std::vector<std::string> suites;
    VerifyGrids grids;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suites,
                       "suites to run (identities, correlation, counting, fc, zeta); default all")
        ->delimiter(',');
    const VerifyGrids defaults;
    verify->add_option("--wilson-x", grids.wilson_x, "wilson grid size (>= default)")
        ->check(CLI::Range(defaults.wilson_x, ~u64(0)));
    verify->add_option("--moebius-max", grids.moebius_max, "moebius grid size (>= default)")
        ->check(CLI::Range(defaults.moebius_max, ~u64(0)));
    verify->add_option("--sandwich-b-max", grids.sandwich_b_max,
                       "prime-family sandwich sweep limit (>= default)")
        ->check(CLI::Range(defaults.sandwich_b_max, ~u64(0)));

    // bench
    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "compare counting methods, CSV with timings");
    bench->add_option("--k", ba.k)->check(CLI::Range(1, 6));
    bench->add_option("--sizes", ba.sizes_csv, "comma-separated B values")->required();
    bench->add_option("--methods", ba.methods, "subset of oracle, coprime, fast")->delimiter(',');

    // let --format/--out/--threads/... appear after any subcommand
    for (CLI::App* sub : {count, corr, fc, fc_count, fc_bounds, fc_nf, zeta, zmom, zsup, ident,
                          id_br, id_ram, id_wil, id_rho, id_dan2, verify, bench})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*count) return run_count(ca, g);
        if (*corr) return run_correlation(ra, g);
        if (*fc) {
            if (*fc_count) return run_fc_count(fa, g);
            if (*fc_bounds) return run_fc_bounds(fa, g);
            if (*fc_nf) return run_fc_nf(fa, g);
        }
        if (*zeta) return run_zeta(za, g);
        if (*ident) {
            for (CLI::App* sub : {id_br, id_ram, id_wil, id_rho, id_dan2})
                if (sub->parsed()) return run_identity(sub->get_name(), ia, g);
        }
        if (*verify) return run_verify_cmd(suites, grids, g);
        if (*bench) return run_bench(ba, g, app.count("--format") > 0);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
