#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "collatz/backtree.hpp"
#include "collatz/bounds.hpp"
#include "collatz/census.hpp"
#include "collatz/counting.hpp"
#include "collatz/orbit.hpp"
#include "collatz/suites.hpp"
#include "collatz/variational.hpp"

namespace {

using collatz::BigInt;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string terminal_name(collatz::Terminal t) {
    switch (t) {
        case collatz::Terminal::ReachedOneCycle: return "reached-one-cycle";
        case collatz::Terminal::OtherCycle: return "other-cycle";
        case collatz::Terminal::Capped: return "capped";
    }
    return "?";
}

std::string verdict_name(collatz::WVerdict::Status s) {
    switch (s) {
        case collatz::WVerdict::Status::InW: return "in-w";
        case collatz::WVerdict::Status::NotInW: return "not-in-w";
        case collatz::WVerdict::Status::Unresolved: return "unresolved";
    }
    return "?";
}

std::string tuple_string(const collatz::IndexTuple& t) {
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(t[k]);
    }
    return s + ")";
}

int cmd_orbit(const std::string& n_text, bool as_json, bool show_mod18, std::uint64_t cap) {
    BigInt n = collatz::parse_bigint(n_text);
    if (sgn(n) == 0) {
        std::cerr << "orbit: n must be nonzero\n";
        return kExitInvalidInput;
    }

    collatz::OrbitRecord rec = collatz::t_orbit(n, cap);
    collatz::ResidueProfile profile = collatz::residue_profile(rec);
    collatz::ParityStats parity = collatz::parity_stats(rec);
    collatz::WVerdict verdict = collatz::w_membership(n, cap);

    if (as_json) {
        ordered_json j;
        j["n"] = n.get_str();
        j["terminal"] = terminal_name(rec.terminal);
        j["t_steps"] = rec.t_steps;
        j["set_size"] = rec.visited.size();
        j["odd"] = parity.odd;
        j["even"] = parity.even;
        j["mod18"] = profile.counts;
        ordered_json ratios = ordered_json::array();
        for (const auto& r : verdict.ratios) ratios.push_back(r.get_str());
        j["ratios"] = ratios;
        j["verdict"] = verdict_name(verdict.status);
        j["in_w"] = verdict.in_w();
        std::cout << j.dump() << '\n';
        return kExitOk;
    }

    std::cout << "n = " << n.get_str() << '\n'
              << "terminal = " << terminal_name(rec.terminal) << '\n'
              << "t_steps = " << rec.t_steps << '\n'
              << "set_size = " << rec.visited.size() << '\n'
              << "odd = " << parity.odd << "  even = " << parity.even << '\n';
    if (show_mod18) {
        std::cout << "mod18 = (";
        for (int i = 0; i < 18; ++i) std::cout << (i ? "," : "") << profile.counts[i];
        std::cout << ")\n";
    }
    std::cout << "ratios = (";
    for (std::size_t k = 0; k < verdict.ratios.size(); ++k)
        std::cout << (k ? "," : "") << verdict.ratios[k].get_str();
    std::cout << ")\n"
              << "verdict = " << verdict_name(verdict.status) << '\n';
    return kExitOk;
}

int cmd_enumerate(unsigned alpha, const std::optional<std::string>& max_n,
                  std::optional<unsigned> max_index, bool verify_bounds) {
    std::optional<BigInt> value_bound;
    if (max_n) value_bound = collatz::parse_bigint(*max_n);

    auto level = collatz::enumerate_level(alpha, value_bound, max_index);
    bool all_ok = true;
    for (const auto& entry : level) {
        std::cout << tuple_string(entry.tuple) << " -> " << entry.value.get_str();
        if (verify_bounds) {
            auto exponents = collatz::index_to_exponents(entry.tuple);
            auto coarse = collatz::check_coarse_bounds(entry.value, exponents);
            auto lower = collatz::check_index_lower_bound(entry.tuple);
            bool failed = coarse.status == collatz::CheckStatus::Fails ||
                          lower.status == collatz::CheckStatus::Fails;
            all_ok = all_ok && !failed;
            std::cout << (failed ? "  bounds=FAIL" : "  bounds=ok");
        }
        std::cout << '\n';
    }
    std::cout << "count = " << level.size() << '\n';
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_antecedents(std::uint64_t upto, unsigned slack, bool as_json) {
    auto values = collatz::t_antecedents_upto(upto, slack);
    if (as_json) {
        ordered_json j;
        j["upto"] = upto;
        j["count"] = values.size();
        j["values"] = values;
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    for (auto v : values) std::cout << v << '\n';
    std::cout << "count = " << values.size() << '\n';
    return kExitOk;
}

int cmd_census(std::uint64_t from, std::uint64_t to, unsigned threads, std::uint64_t cap,
               const std::string& rows_path, const std::string& members_path,
               const std::string& csv_path) {
    collatz::CensusResult result = collatz::run_census(from, to, threads, cap);
    auto rows = result.rows();

    for (const auto& row : rows)
        std::cout << "upto=" << row.upto << " w_count=" << row.w_count
                  << " resolved=" << row.resolved << " unresolved=" << row.unresolved
                  << " exponent=" << fmt(row.exponent) << '\n';
    if (result.members_truncated)
        std::cout << "member log truncated at " << result.members.size() << " entries\n";

    auto write_file = [](const std::string& path, auto&& writer) {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path + " for writing");
        writer(out);
    };
    if (!rows_path.empty())
        write_file(rows_path, [&](std::ostream& o) { collatz::write_rows_jsonl(rows, o); });
    if (!members_path.empty())
        write_file(members_path, [&](std::ostream& o) {
            collatz::write_members_jsonl(result.members, result.members_truncated, o);
        });
    if (!csv_path.empty())
        write_file(csv_path, [&](std::ostream& o) { collatz::write_csv(rows, o); });
    return kExitOk;
}

int cmd_optimize(double a, double b, double tol) {
    collatz::StationaryPoint sp = collatz::solve_stationary(a, b, tol);
    std::cout << "x0 = " << fmt(sp.x0) << '\n'
              << "y0 = " << fmt(sp.y0) << '\n'
              << "z0 = " << fmt(sp.z0) << '\n'
              << "w0 = " << fmt(sp.w0) << '\n'
              << "residual = " << fmt(sp.residual) << '\n';
    return kExitOk;
}

int run_suite(const std::string& name, std::vector<std::pair<std::uint64_t, std::string>>* csv) {
    std::vector<collatz::CheckResult> results;
    if (name == "constants") results = collatz::suite_constants();
    else if (name == "bounds") results = collatz::suite_bounds();
    else if (name == "multinomial") results = collatz::suite_multinomial();
    else if (name == "upperbis") results = collatz::suite_upperbis(csv);
    else if (name == "roundtrip") results = collatz::suite_roundtrip();
    else return -1;

    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << name << "] " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << '\n';
        failures += r.pass ? 0 : 1;
    }
    return failures;
}

int cmd_verify(const std::string& suite, const std::string& report_path) {
    static const std::vector<std::string> kAll = {"constants", "bounds", "multinomial",
                                                  "upperbis", "roundtrip"};
    std::vector<std::string> to_run;
    if (suite == "all") to_run = kAll;
    else to_run = {suite};

    std::vector<std::pair<std::uint64_t, std::string>> csv_rows;
    int failures = 0;
    for (const auto& name : to_run) {
        int f = run_suite(name, &csv_rows);
        if (f < 0) {
            std::cerr << "verify: unknown suite '" << name << "'\n";
            return kExitInvalidInput;
        }
        failures += f;
    }

    if (!report_path.empty() && !csv_rows.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot open " + report_path + " for writing");
        out << "N,bruteforce,relaxation\n";
        for (const auto& [n, row] : csv_rows) out << row << '\n';
    }

    std::cout << (failures == 0 ? "all checks passed" : "FAILURES: " + std::to_string(failures))
              << '\n';
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3x+1 orbit statistics, antecedent tree and census toolkit"};
    app.require_subcommand(1);

    // orbit
    std::string orbit_n;
    bool orbit_json = false, orbit_mod18 = false;
    std::uint64_t orbit_cap = collatz::kDefaultOrbitCap;
    auto* orbit = app.add_subcommand("orbit", "inspect the T-orbit of n");
    orbit->add_option("n", orbit_n, "starting integer (any size)")->required();
    orbit->add_flag("--json", orbit_json, "one JSON object instead of text");
    orbit->add_flag("--mod18", orbit_mod18, "include the residue profile");
    orbit->add_option("--cap", orbit_cap, "step limit");

    // enumerate
    unsigned enum_alpha = 1;
    std::string enum_max_n;
    unsigned enum_max_index = 0;
    bool enum_verify = false;
    auto* enumerate = app.add_subcommand("enumerate", "antecedents of 1 at a fixed depth");
    enumerate->add_option("--alpha", enum_alpha, "tree depth")->required();
    auto* opt_max_n = enumerate->add_option("--max-n", enum_max_n, "value bound");
    auto* opt_max_i = enumerate->add_option("--max-index", enum_max_index, "coordinate bound");
    opt_max_n->excludes(opt_max_i);
    enumerate->add_flag("--verify-bounds", enum_verify, "check the sandwich and lower bounds");

    // antecedents
    std::uint64_t ant_upto = 0;
    unsigned ant_slack = 64;
    bool ant_json = false;
    auto* antecedents =
        app.add_subcommand("antecedents", "all n <= bound whose T-orbit reaches 1");
    antecedents->add_option("--upto", ant_upto, "value bound")->required();
    antecedents->add_option("--slack", ant_slack, "pool factor for the S-antecedent set");
    antecedents->add_flag("--json", ant_json, "one JSON object instead of text");

    // census
    std::uint64_t census_from = 1, census_to = 0, census_cap = collatz::kDefaultOrbitCap;
    unsigned census_threads = 0;
    std::string census_out, census_members, census_csv;
    auto* census = app.add_subcommand("census", "sweep W membership over a range");
    census->add_option("--from", census_from, "range start")->required();
    census->add_option("--to", census_to, "range end")->required();
    census->add_option("--threads", census_threads, "worker count (default COLLATZ_THREADS)");
    census->add_option("--cap", census_cap, "orbit step limit");
    census->add_option("--out", census_out, "checkpoint rows JSONL");
    census->add_option("--members", census_members, "member log JSONL");
    census->add_option("--csv", census_csv, "summary CSV");

    // optimize
    double opt_a = collatz::kOddIndexCoeff, opt_b = collatz::kEvenIndexCoeff, opt_tol = 1e-12;
    auto* optimize = app.add_subcommand("optimize", "stationary point and exponent w0");
    optimize->add_option("--a", opt_a, "x coefficient of z");
    optimize->add_option("--b", opt_b, "y coefficient of z");
    optimize->add_option("--tol", opt_tol, "gradient residual tolerance");

    // verify
    std::string verify_suite, verify_report;
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--suite", verify_suite,
                       "constants|bounds|multinomial|upperbis|roundtrip|all")
        ->required();
    verify->add_option("--report", verify_report, "CSV report (upperbis suite)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (orbit->parsed()) return cmd_orbit(orbit_n, orbit_json, orbit_mod18, orbit_cap);
        if (enumerate->parsed()) {
            if (opt_max_n->count() == 0 && opt_max_i->count() == 0) {
                std::cerr << "enumerate: exactly one of --max-n / --max-index is required\n";
                return kExitInvalidInput;
            }
            return cmd_enumerate(
                enum_alpha,
                opt_max_n->count() ? std::optional<std::string>(enum_max_n) : std::nullopt,
                opt_max_i->count() ? std::optional<unsigned>(enum_max_index) : std::nullopt,
                enum_verify);
        }
        if (antecedents->parsed()) return cmd_antecedents(ant_upto, ant_slack, ant_json);
        if (census->parsed())
            return cmd_census(census_from, census_to, census_threads, census_cap, census_out,
                              census_members, census_csv);
        if (optimize->parsed()) return cmd_optimize(opt_a, opt_b, opt_tol);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_report);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitInvalidInput;
}
