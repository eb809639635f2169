// friable: smooth-number sieving, exact Psi(x,y), bounded S-unit equation
// enumeration, and windowed decomposition search from one command line.
//
// Subcommands: sieve, psi, sunit, decomp, report.  Output goes to stdout
// (JSON by default, --format text|csv), diagnostics to stderr.  Exit codes:
// 0 success, 2 argument errors, 3 capacity/budget errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "friable/decomp.hpp"
#include "friable/errors.hpp"
#include "friable/factor_table.hpp"
#include "friable/psi.hpp"
#include "friable/smooth_sets.hpp"
#include "friable/sorted_set.hpp"
#include "friable/sunit.hpp"
#include "friable/threshold.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace friable;

namespace {

struct RunConfig {
    std::uint64_t table_limit = 1'000'000;
    std::string format = "json";
    unsigned threads = 0; // 0 = hardware concurrency
    double corridor_lo = kDebruijnCorridorLo;
    double corridor_hi = kDebruijnCorridorHi;
    std::uint64_t psi_max_x = kDefaultPsiMaxX;
    SearchLimits search;
};

// --config JSON file provides defaults; explicit flags win.
void load_config_file(const std::string &path, RunConfig &cfg) {
    std::ifstream in(path);
    if (!in)
        throw argument_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception &e) {
        throw argument_error("bad config file: " + std::string(e.what()));
    }
    if (j.contains("table_limit"))
        cfg.table_limit = j["table_limit"].get<std::uint64_t>();
    if (j.contains("format"))
        cfg.format = j["format"].get<std::string>();
    if (j.contains("threads"))
        cfg.threads = j["threads"].get<unsigned>();
    if (j.contains("psi_max_x"))
        cfg.psi_max_x = j["psi_max_x"].get<std::uint64_t>();
    if (j.contains("corridor")) {
        cfg.corridor_lo = j["corridor"].value("lo", cfg.corridor_lo);
        cfg.corridor_hi = j["corridor"].value("hi", cfg.corridor_hi);
    }
    if (j.contains("search")) {
        const auto &s = j["search"];
        cfg.search.node_budget = s.value("node_budget", cfg.search.node_budget);
        cfg.search.max_certificates =
            s.value("max_certificates", cfg.search.max_certificates);
        cfg.search.max_set_size = s.value("max_set_size", cfg.search.max_set_size);
    }
    if (cfg.corridor_lo >= cfg.corridor_hi)
        throw argument_error("config: corridor lower bound must be below upper");
}

// Integral doubles print as integers ("y":5, not "y":5.0).
ordered_json json_number(double v) {
    if (v == static_cast<double>(static_cast<std::int64_t>(v)))
        return static_cast<std::int64_t>(v);
    return v;
}

mpq_class parse_rational(const std::string &s) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw argument_error("bad rational '" + s + "' (want n or n/d)");
    if (q.get_den() == 0)
        throw argument_error("bad rational '" + s + "': zero denominator");
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class &q) {
    return q.get_str();
}

ordered_json sunit_json(const SUnit &u, const PrimeSet &S) {
    const mpq_class v = u.value(S);
    ordered_json j;
    j["sign"] = u.sign;
    j["exponents"] = u.exponents;
    j["numerator"] = v.get_num().get_str();
    j["denominator"] = v.get_den().get_str();
    return j;
}

ordered_json solution_list_json(const SolutionList &sol) {
    ordered_json j;
    j["U"] = rational_string(sol.equation.U);
    j["V"] = rational_string(sol.equation.V);
    j["primes"] = sol.S.primes();
    j["s"] = sol.S.size();
    j["domain"] = to_string(sol.domain);
    j["bound"] = sol.exponent_bound;
    j["M"] = sol.count();
    ordered_json arr = ordered_json::array();
    for (const auto &[X, Y] : sol.solutions) {
        ordered_json pair;
        pair["X"] = sunit_json(X, sol.S);
        pair["Y"] = sunit_json(Y, sol.S);
        arr.push_back(std::move(pair));
    }
    j["solutions"] = std::move(arr);
    return j;
}

std::string solution_pairs_text(const SolutionList &sol, char sep) {
    std::string out;
    for (const auto &[X, Y] : sol.solutions) {
        out += X.value(sol.S).get_str();
        out += sep;
        out += Y.value(sol.S).get_str();
        out += '\n';
    }
    return out;
}

ordered_json certificate_json(const DecompositionCertificate &c) {
    ordered_json j;
    j["B"] = c.B.values();
    j["C"] = c.C.values();
    j["mode"] = to_string(c.mode);
    j["verify_lo"] = c.verify_lo;
    j["verify_hi"] = c.verify_hi;
    return j;
}

ordered_json pipeline_json(const PipelineReport &r) {
    ordered_json j;
    j["y"] = json_number(r.y_value);
    j["a1"] = r.a1;
    j["a2"] = r.a2;
    j["n0"] = r.n0;
    j["N"] = r.N;
    j["m"] = r.m;
    j["s"] = r.s;
    j["psi"] = r.psi;
    j["log2_psi"] = r.log2_psi;
    j["M"] = r.M;
    j["b_values"] = r.b_values;
    j["lhs"] = r.lhs;
    j["lhs_log2"] = r.lhs_log2;
    j["rhs_exponent"] = r.rhs_exponent;
    j["case"] = to_string(r.case_label);
    j["contradiction_reached"] = r.contradiction_reached;
    return j;
}

// Flat key/value rendering for --format text and csv.
void emit_flat(const ordered_json &j, const std::string &format) {
    if (format == "text") {
        for (auto &[k, v] : j.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                      << '\n';
        return;
    }
    std::string header, row;
    for (auto &[k, v] : j.items()) {
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += k;
        std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
        if (cell.find(',') != std::string::npos) {
            std::string quoted = "\"";
            for (char ch : cell)
                quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
            quoted += '"';
            cell = quoted;
        }
        row += cell;
    }
    std::cout << header << '\n' << row << '\n';
}

void emit(const ordered_json &j, const std::string &format) {
    if (format == "json") {
        std::cout << j.dump() << '\n';
        return;
    }
    emit_flat(j, format);
}

void emit_set(const SortedIntSet &s, const std::string &format) {
    if (format == "json") {
        std::cout << s.to_json() << '\n';
        return;
    }
    if (format == "csv")
        std::cout << "value\n";
    std::cout << s.to_text();
}

std::uint64_t env_table_limit() {
    if (const char *v = std::getenv("FRIABLE_TABLE_LIMIT")) {
        try {
            return std::stoull(v);
        } catch (const std::exception &) {
            throw argument_error("FRIABLE_TABLE_LIMIT is not an integer");
        }
    }
    return 1'000'000;
}

std::pair<std::uint64_t, std::uint64_t> parse_window(const std::string &s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw argument_error("window must be lo:hi, got '" + s + "'");
    try {
        return {std::stoull(s.substr(0, colon)), std::stoull(s.substr(colon + 1))};
    } catch (const std::exception &) {
        throw argument_error("window must be lo:hi, got '" + s + "'");
    }
}

int run(int argc, char **argv) {
    RunConfig cfg;
    cfg.table_limit = env_table_limit();

    // config file defaults are loaded before CLI11 parses flags
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config")
            load_config_file(argv[i + 1], cfg);

    CLI::App app{"smooth numbers, Psi(x,y), S-unit equations, decompositions"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    std::string config_path;
    app.add_option("--config", config_path, "JSON config with defaults");
    app.add_option("--format", cfg.format, "json | text | csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--threads", cfg.threads,
                   "worker threads (0 = hardware concurrency)");
    app.add_option("--table-limit", cfg.table_limit,
                   "factor table size (env FRIABLE_TABLE_LIMIT)");

    auto table = [&]() { return FactorTable::build(cfg.table_limit, cfg.threads); };

    // ---- sieve ----------------------------------------------------------
    auto *sieve = app.add_subcommand("sieve", "factor table and smooth windows");
    sieve->require_subcommand(1);

    std::uint64_t gpf_n = 0;
    auto *sieve_gpf = sieve->add_subcommand("gpf", "greatest prime factor");
    sieve_gpf->add_option("--n", gpf_n, "argument")->required();
    sieve_gpf->callback([&] {
        auto t = table();
        ordered_json j;
        j["n"] = gpf_n;
        j["gpf"] = t.greatest_prime_factor(gpf_n);
        emit(j, cfg.format);
    });

    std::uint64_t win_lo = 1, win_hi = 100;
    std::string threshold_spec = "constant:2";
    bool shifted = false;
    auto *sieve_window = sieve->add_subcommand("window", "friable window F_y (or G_y)");
    sieve_window->add_option("--lo", win_lo, "window start")->required();
    sieve_window->add_option("--hi", win_hi, "window end")->required();
    sieve_window->add_option("--threshold", threshold_spec,
                             "constant:y0 | log_scaled:c | power:eps")
        ->required();
    sieve_window->add_flag("--shifted", shifted, "emit G_y = F_y + {1}");
    sieve_window->callback([&] {
        auto t = table();
        auto y = SmoothnessThreshold::parse(threshold_spec);
        auto s = shifted ? shifted_friable_window(y, win_lo, win_hi, t)
                         : friable_window(y, win_lo, win_hi, t);
        emit_set(s, cfg.format);
    });

    double pi_y = 0;
    auto *sieve_pi = sieve->add_subcommand("pi", "prime counting function");
    sieve_pi->add_option("--y", pi_y, "cutoff")->required();
    sieve_pi->callback([&] {
        ordered_json j;
        j["y"] = json_number(pi_y);
        j["pi"] = prime_count(pi_y);
        emit(j, cfg.format);
    });

    std::string count_set;
    std::uint64_t count_x = 0;
    auto *sieve_count = sieve->add_subcommand("count", "counting function of a set");
    sieve_count->add_option("--set", count_set, "comma-separated elements")
        ->required();
    sieve_count->add_option("--x", count_x, "upper bound")->required();
    sieve_count->callback([&] {
        auto s = SortedIntSet::parse(count_set);
        ordered_json j;
        j["x"] = count_x;
        j["count"] = s.counting(count_x);
        emit(j, cfg.format);
    });

    // ---- psi ------------------------------------------------------------
    auto *psi_cmd = app.add_subcommand("psi", "smooth counting function");
    psi_cmd->require_subcommand(1);

    std::uint64_t psi_x = 0;
    double psi_y = 0;
    auto *psi_exact_cmd = psi_cmd->add_subcommand("exact", "exact Psi(x, y)");
    psi_exact_cmd->add_option("--x", psi_x, "range end")->required();
    psi_exact_cmd->add_option("--y", psi_y, "smoothness cutoff")->required();
    psi_exact_cmd->callback([&] {
        const PsiValue v = psi_value(psi_x, psi_y);
        ordered_json j;
        j["x"] = v.x;
        j["y"] = json_number(v.y);
        j["count"] = v.count;
        emit(j, cfg.format);
    });

    std::uint64_t base2_x = 0;
    auto *psi_base2_cmd = psi_cmd->add_subcommand("base2", "Psi(x, 2) closed form");
    psi_base2_cmd->add_option("--x", base2_x, "range end")->required();
    psi_base2_cmd->callback([&] {
        ordered_json j;
        j["x"] = base2_x;
        j["count"] = psi_base2(base2_x);
        emit(j, cfg.format);
    });

    std::uint64_t db_x = 0;
    double db_y = 0;
    auto *psi_db = psi_cmd->add_subcommand("debruijn", "log Psi versus the Z term");
    psi_db->add_option("--x", db_x, "range end")->required();
    psi_db->add_option("--y", db_y, "smoothness cutoff")->required();
    psi_db->add_option("--corridor-lo", cfg.corridor_lo, "corridor lower bound");
    psi_db->add_option("--corridor-hi", cfg.corridor_hi, "corridor upper bound");
    psi_db->add_option("--max-x", cfg.psi_max_x, "exact-Psi feasibility cap");
    psi_db->callback([&] {
        if (cfg.corridor_lo >= cfg.corridor_hi)
            throw argument_error("corridor lower bound must be below upper");
        auto r = debruijn_ratio(db_x, db_y, cfg.psi_max_x);
        ordered_json j;
        j["x"] = r.x;
        j["y"] = json_number(r.y);
        j["Z"] = r.Z;
        j["log_psi"] = r.log_psi;
        j["ratio"] = r.ratio;
        j["in_corridor"] =
            r.ratio >= cfg.corridor_lo && r.ratio <= cfg.corridor_hi;
        emit(j, cfg.format);
    });

    // ---- sunit ----------------------------------------------------------
    auto *sunit = app.add_subcommand("sunit", "S-unit equations");
    sunit->require_subcommand(1);

    std::uint64_t bound_s = 0;
    bool bound_value = false;
    auto *sunit_bound = sunit->add_subcommand("bound", "solution-count ceiling 2^{8(2s+2)}");
    sunit_bound->add_option("--s", bound_s, "number of primes in S")->required();
    sunit_bound->add_flag("--value", bound_value, "materialize the integer");
    sunit_bound->callback([&] {
        auto b = bs_bound(bound_s);
        ordered_json j;
        j["s"] = bound_s;
        j["exponent"] = b.exponent;
        if (bound_value || b.exponent <= 64)
            j["value"] = b.value().get_str();
        emit(j, cfg.format);
    });

    std::string solve_u, solve_v, solve_primes = "2,3", solve_domain = "signed-rationals";
    std::uint64_t solve_bound = 3;
    auto *sunit_solve = sunit->add_subcommand("solve", "enumerate U X + V Y = 1");
    sunit_solve->add_option("--u", solve_u, "U as n or n/d")->required();
    sunit_solve->add_option("--v", solve_v, "V as n or n/d")->required();
    sunit_solve->add_option("--s-primes", solve_primes, "comma-separated primes");
    sunit_solve->add_option("--bound", solve_bound, "exponent box |e_i| <= bound");
    sunit_solve->add_option("--domain", solve_domain,
                            "positive-integers | signed-rationals");
    sunit_solve->callback([&] {
        auto S = PrimeSet::from_primes(SortedIntSet::parse(solve_primes).values());
        auto eq = SUnitEquation::make(parse_rational(solve_u), parse_rational(solve_v));
        auto sol = enumerate_solutions(eq, S, solve_bound,
                                       domain_from_string(solve_domain));
        if (cfg.format == "json") {
            emit(solution_list_json(sol), cfg.format);
        } else {
            if (cfg.format == "csv")
                std::cout << "X,Y\n";
            std::cout << solution_pairs_text(sol, cfg.format == "csv" ? ',' : ' ');
        }
    });

    double pairs_y = 0;
    std::uint64_t pairs_d = 1, pairs_lo = 1, pairs_hi = 0;
    auto *sunit_pairs = sunit->add_subcommand("pairs", "smooth pairs X - Y = d");
    sunit_pairs->add_option("--y", pairs_y, "fixed smoothness cutoff")->required();
    sunit_pairs->add_option("--d", pairs_d, "difference")->required();
    sunit_pairs->add_option("--lo", pairs_lo, "window start");
    sunit_pairs->add_option("--hi", pairs_hi, "window end")->required();
    sunit_pairs->callback([&] {
        auto t = table();
        auto sol = smooth_pair_difference(pairs_y, pairs_d, pairs_lo, pairs_hi, t);
        if (cfg.format == "json") {
            emit(solution_list_json(sol), cfg.format);
        } else {
            if (cfg.format == "csv")
                std::cout << "X,Y\n";
            std::cout << solution_pairs_text(sol, cfg.format == "csv" ? ',' : ' ');
        }
    });

    std::uint64_t mp_a1 = 1, mp_a2 = 2, mp_n0 = 1, mp_N = 0;
    double mp_y = 0;
    auto *sunit_mpairs = sunit->add_subcommand("mpairs", "b with a1 b - 1, a2 b - 1 both smooth");
    sunit_mpairs->add_option("--a1", mp_a1, "smaller coefficient")->required();
    sunit_mpairs->add_option("--a2", mp_a2, "larger coefficient")->required();
    sunit_mpairs->add_option("--y", mp_y, "fixed smoothness cutoff")->required();
    sunit_mpairs->add_option("--n0", mp_n0, "window start");
    sunit_mpairs->add_option("--N", mp_N, "window end")->required();
    sunit_mpairs->callback([&] {
        auto t = table();
        auto mp = multiplicative_pairs(mp_a1, mp_a2, mp_y, mp_n0, mp_N, t);
        if (cfg.format == "json") {
            ordered_json j = solution_list_json(mp.list);
            j["b_values"] = mp.b_values;
            emit(j, cfg.format);
        } else {
            if (cfg.format == "csv")
                std::cout << "b,X,Y\n";
            for (std::size_t i = 0; i < mp.b_values.size(); ++i) {
                const auto &[X, Y] = mp.list.solutions[i];
                const char sep = cfg.format == "csv" ? ',' : ' ';
                std::cout << mp.b_values[i] << sep
                          << X.value(mp.list.S).get_str() << sep
                          << Y.value(mp.list.S).get_str() << '\n';
            }
        }
    });

    // ---- decomp ---------------------------------------------------------
    auto *decomp = app.add_subcommand("decomp", "windowed decomposition search");
    decomp->require_subcommand(1);

    std::string d_target, d_window, d_mode = "additive";
    std::uint64_t d_max_element = 0;
    auto *d_search = decomp->add_subcommand("search", "find certificates or exhaust");
    d_search->add_option("--target", d_target, "target elements")->required();
    d_search->add_option("--window", d_window, "authoritative window lo:hi")->required();
    d_search->add_option("--mode", d_mode, "additive | multiplicative");
    d_search->add_option("--max-element", d_max_element,
                         "candidate element ceiling (default: window top)");
    d_search->add_option("--node-budget", cfg.search.node_budget, "search node budget");
    d_search->add_option("--max-certificates", cfg.search.max_certificates,
                         "stop after this many certificates");
    d_search->add_option("--max-set-size", cfg.search.max_set_size,
                         "cap on |B| and |C|");
    d_search->callback([&] {
        if (cfg.search.node_budget == 0 || cfg.search.max_certificates == 0 ||
            cfg.search.max_set_size < 2)
            throw argument_error("search limits must be positive "
                                 "(and max-set-size at least 2)");
        auto [lo, hi] = parse_window(d_window);
        auto target = WindowSet::make(SortedIntSet::parse(d_target), lo, hi);
        const std::uint64_t max_el = d_max_element ? d_max_element : hi;
        auto res = search_decompositions(target, mode_from_string(d_mode),
                                         max_el, cfg.search);
        if (cfg.format == "json") {
            ordered_json j;
            j["status"] = res.status == SearchStatus::Exhausted
                              ? "exhausted"
                              : "budget-exceeded";
            j["nodes"] = res.nodes;
            j["universe"] = {{"lo", res.universe_lo}, {"hi", res.universe_hi}};
            j["window"] = {{"lo", res.window_lo}, {"hi", res.window_hi}};
            j["mode"] = to_string(res.mode);
            ordered_json certs = ordered_json::array();
            for (const auto &c : res.certificates)
                certs.push_back(certificate_json(c));
            j["certificates"] = std::move(certs);
            emit(j, cfg.format);
        } else {
            if (cfg.format == "csv")
                std::cout << "mode,B,C\n";
            for (const auto &c : res.certificates) {
                std::string bs, cs;
                for (auto v : c.B.values())
                    bs += (bs.empty() ? "" : " ") + std::to_string(v);
                for (auto v : c.C.values())
                    cs += (cs.empty() ? "" : " ") + std::to_string(v);
                if (cfg.format == "csv")
                    std::cout << to_string(c.mode) << ",\"" << bs << "\",\"" << cs
                              << "\"\n";
                else
                    std::cout << "{" << bs << "} | {" << cs << "}\n";
            }
            std::cerr << (res.status == SearchStatus::Exhausted
                              ? "exhausted"
                              : "budget-exceeded")
                      << " after " << res.nodes << " nodes\n";
        }
    });

    std::string v_target, v_window, v_b, v_c, v_mode = "additive", v_verify_window;
    auto *d_verify = decomp->add_subcommand("verify", "check a certificate");
    d_verify->add_option("--target", v_target, "target elements")->required();
    d_verify->add_option("--window", v_window, "authoritative window lo:hi")->required();
    d_verify->add_option("--b", v_b, "left factor set")->required();
    d_verify->add_option("--c", v_c, "right factor set")->required();
    d_verify->add_option("--mode", v_mode, "additive | multiplicative");
    d_verify->add_option("--verify-window", v_verify_window,
                         "check window lo:hi (default: the target window)");
    d_verify->callback([&] {
        auto [lo, hi] = parse_window(v_window);
        auto target = WindowSet::make(SortedIntSet::parse(v_target), lo, hi);
        auto [vlo, vhi] = v_verify_window.empty()
                              ? std::make_pair(lo, hi)
                              : parse_window(v_verify_window);
        DecompositionCertificate cert{SortedIntSet::parse(v_b),
                                      SortedIntSet::parse(v_c),
                                      mode_from_string(v_mode), vlo, vhi};
        ordered_json j;
        j["valid"] = verify_certificate(target, cert);
        emit(j, cfg.format);
    });

    std::string g_a, g_b;
    std::uint64_t g_m = 1, g_dmax = 100;
    auto *d_growth = decomp->add_subcommand("growth", "scales where A(mD)B(mD) < (m^2+1)A(D)B(D)");
    d_growth->add_option("--a", g_a, "set A")->required();
    d_growth->add_option("--b", g_b, "set B")->required();
    d_growth->add_option("--m", g_m, "scale factor")->required();
    d_growth->add_option("--dmax", g_dmax, "largest D tested")->required();
    d_growth->callback([&] {
        auto ds = growth_scales(SortedIntSet::parse(g_a), SortedIntSet::parse(g_b),
                                g_m, g_dmax);
        emit_set(SortedIntSet::from_sorted(ds), cfg.format);
    });

    // ---- report ---------------------------------------------------------
    auto *report = app.add_subcommand("report", "two-sided inequality reports");
    report->require_subcommand(1);

    double r_y = 0;
    std::uint64_t r_a1 = 1, r_a2 = 2, r_n0 = 1, r_N = 0, r_m = 1;
    auto *r_t1 = report->add_subcommand("theorem1", "additive pipeline report");
    r_t1->add_option("--y", r_y, "fixed smoothness cutoff")->required();
    r_t1->add_option("--a1", r_a1, "smaller shift");
    r_t1->add_option("--a2", r_a2, "larger shift");
    r_t1->add_option("--n0", r_n0, "window start");
    r_t1->add_option("--N", r_N, "window end")->required();
    r_t1->callback([&] {
        auto t = table();
        emit(pipeline_json(theorem1_pipeline(r_y, r_a1, r_a2, r_n0, r_N, t)),
             cfg.format);
    });

    auto *r_t2 = report->add_subcommand("theorem2", "multiplicative pipeline report");
    r_t2->add_option("--y", r_y, "fixed smoothness cutoff")->required();
    r_t2->add_option("--a1", r_a1, "smaller coefficient");
    r_t2->add_option("--a2", r_a2, "larger coefficient");
    r_t2->add_option("--n0", r_n0, "window start");
    r_t2->add_option("--N", r_N, "window end")->required();
    r_t2->add_option("--m", r_m, "scale parameter m")->required();
    r_t2->callback([&] {
        auto t = table();
        emit(pipeline_json(theorem2_pipeline(r_y, r_a1, r_a2, r_n0, r_N, r_m, t)),
             cfg.format);
    });

    double c_log_n = 0, c_y = 0;
    auto *r_cl = report->add_subcommand("classify", "regime of (N, y)");
    r_cl->add_option("--log-n", c_log_n, "ln N")->required();
    r_cl->add_option("--y", c_y, "cutoff y(N)")->required();
    r_cl->callback([&] {
        ordered_json j;
        j["log_N"] = json_number(c_log_n);
        j["y"] = json_number(c_y);
        j["case"] = to_string(case_classifier(c_log_n, c_y));
        emit(j, cfg.format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n" << app.help("", CLI::AppFormatMode::Normal);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const argument_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const range_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const capacity_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
