// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "collatz/backtree.hpp"
#include "collatz/bounds.hpp"
#include "collatz/census.hpp"
#include "collatz/counting.hpp"
#include "collatz/orbit.hpp"
#include "collatz/variational.hpp"
#include "oracles.hpp"

using namespace collatz;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void criterion_1_remark() {
    auto start = Clock::now();
    CensusResult result = run_census(1, 26);
    auto rows = result.rows();
    const std::array<std::uint64_t, 18> expected = {28, 41, 5, 49, 22, 4, 5, 37, 2,
                                                    23, 10, 2, 11, 4, 1, 47, 13, 1};
    bool pass = !rows.empty() && rows.back().upto == 26 && rows.back().residue_sums == expected;
    std::uint64_t odd = 0, even = 0;
    for (int i = 1; i <= 18; ++i) (i % 2 ? odd : even) += rows.back().residue_sums[i - 1];
    pass = pass && odd == 97 && even == 208;
    double elapsed = seconds_since(start);
    pass = pass && elapsed < 1.0;
    std::ostringstream detail;
    detail << "odd sum " << odd << ", even sum " << even << ", " << elapsed << " s";
    report(1, "residue sums over n = 1..26", pass, detail.str());
}

void criterion_2_exponent_window() {
    auto start = Clock::now();
    bool pass = false;
    std::ostringstream detail;
    try {
        StationaryPoint sp = solve_stationary(0.05749, 0.39083);
        double elapsed = seconds_since(start);
        pass = (sp.w0 - 0.9998 > 0.0) && (sp.w0 - 0.9998 < 1e-4) && sp.residual <= 1e-12 &&
               elapsed < 1.0;
        detail << "w0 = " << sp.w0 << ", residual = " << sp.residual << ", " << elapsed << " s";
    } catch (const std::exception& e) {
        detail << "solver failed: " << e.what();
    }
    report(2, "w0 window (0.9998, 0.9999)", pass, detail.str());
}

void criterion_3_big_orbit() {
    auto start = Clock::now();
    BigInt n = parse_bigint("31415926535897932384626433832795028800");
    OrbitRecord rec = t_orbit(n);
    ParityStats parity = parity_stats(rec);
    double elapsed = seconds_since(start);
    bool pass = rec.terminal == Terminal::ReachedOneCycle;
    pass = pass && parity.total >= 900 - 135 && parity.total <= 900 + 135;
    pass = pass && parity.odd >= 300 - 60 && parity.odd <= 300 + 60;
    pass = pass && elapsed < 1.0;
    std::ostringstream detail;
    detail << "set size " << parity.total << ", odd " << parity.odd << ", " << elapsed << " s";
    report(3, "orbit of 100*floor(pi*10^35)", pass, detail.str());
}

template <class F>
void sweep_tuples(unsigned max_alpha, unsigned max_coord, F&& fn) {
    IndexTuple tuple;
    auto rec = [&](auto&& self, unsigned depth) -> void {
        if (depth > 0) fn(tuple);
        if (depth == max_alpha) return;
        for (unsigned i = (depth == 0 ? 2 : 1); i <= max_coord; ++i) {
            tuple.push_back(i);
            self(self, depth + 1);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
}

void criterion_4_bijection() {
    auto start = Clock::now();
    std::set<BigInt> seen;
    std::size_t total = 0, bad = 0;
    sweep_tuples(5, 4, [&](const IndexTuple& tuple) {
        ++total;
        BigInt n = index_to_n(tuple);
        bool ok = seen.insert(n).second;
        IndexResult inv = n_to_index(n);
        ok = ok && inv.status == IndexResult::Status::Ok && inv.tuple == tuple;
        SChain chain = s_orbit(n);
        ok = ok && chain.reached_one && chain.steps() == tuple.size();
        BigInt walk = 1;
        for (std::size_t k = 0; k < tuple.size() && ok; ++k) {
            auto [value, e] = child_with_exponent(walk, tuple[k]);
            const ExponentRule& rule = exponent_rule_for(residue_mod18(walk));
            long mod6 = static_cast<long>(e % 6);
            ok = (mod6 == rule.odd_class || mod6 == rule.even_class);
            walk = value;
        }
        if (!ok) ++bad;
    });
    double elapsed = seconds_since(start);
    bool pass = bad == 0 && total == 3 * (1 + 4 + 16 + 64 + 256) && elapsed < 10.0;
    std::ostringstream detail;
    detail << total << " tuples, " << bad << " failures, " << elapsed << " s";
    report(4, "bijection suite, depth <= 5, coords <= 4", pass, detail.str());
}

void criterion_5_bounds() {
    std::size_t bad = 0, lb_count = 0, coarse_count = 0;
    sweep_tuples(5, 4, [&](const IndexTuple& tuple) {
        BigInt n = index_to_n(tuple);
        auto exponents = index_to_exponents(tuple);
        CoarseBoundCheck coarse = check_coarse_bounds(n, exponents);
        if (coarse.status != CheckStatus::NotApplicable) {
            ++coarse_count;
            if (coarse.status != CheckStatus::Holds) ++bad;
        }
        if (tuple.size() >= 2) {
            ++lb_count;
            if (check_index_lower_bound(tuple).status != CheckStatus::Holds) ++bad;
        }
    });

    CensusResult census = run_census(1, 10'000);
    std::size_t w_checked = 0;
    for (const CensusMember& m : census.members) {
        BigInt n(static_cast<unsigned long>(m.n));
        if (!in_sqcap(n)) continue;
        IndexResult idx = n_to_index(n);
        if (idx.status != IndexResult::Status::Ok) {
            ++bad;
            continue;
        }
        ++w_checked;
        if (check_w_inequality(idx.tuple, n).status != CheckStatus::Holds) ++bad;
    }
    bool pass = bad == 0;
    std::ostringstream detail;
    detail << coarse_count << " sandwich, " << lb_count << " lower-bound, " << w_checked
           << " W-member checks, " << bad << " failures";
    report(5, "bound suite (exact rational comparisons)", pass, detail.str());
}

void criterion_6_power_bounds() {
    auto start = Clock::now();
    std::size_t bad = 0;
    for (unsigned m = 0; m <= 60; ++m)
        for (unsigned n = 0; n <= 60; ++n)
            if (!binomial_upper_holds(m, n)) ++bad;
    for (unsigned m = 0; m <= 30; ++m)
        for (unsigned n = 0; n <= 30; ++n)
            for (unsigned p = 0; p <= 30; ++p)
                if (!multinomial_upper_holds(m, n, p)) ++bad;
    double elapsed = seconds_since(start);
    bool pass = bad == 0 && elapsed < 30.0;
    std::ostringstream detail;
    detail << "3721 binomial + 29791 trinomial cases, " << bad << " failures, " << elapsed
           << " s";
    report(6, "power bounds, exact arithmetic", pass, detail.str());
}

void criterion_7_relaxation() {
    std::size_t bad = 0;
    std::ostringstream detail;
    for (std::uint64_t n : {100ull, 1000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
        MaxCell mc = bruteforce_max(n);
        double bound = relaxation_bound(n);
        if (!(BigRat(mc.value) <= BigRat(bound))) ++bad;
        detail << "N=" << n << " ratio " << (bound / mc.value.get_d()) << "  ";
    }
    report(7, "cell maximum below the continuous relaxation", bad == 0, detail.str());
}

void criterion_8_ledger() {
    ConstantLedger ledger = verify_constant_ledger();
    std::size_t bad = 0;
    for (const LedgerEntry& e : ledger.entries)
        if (!e.pass) ++bad;
    std::ostringstream detail;
    detail << ledger.entries.size() << " entries, " << bad << " failures";
    report(8, "constant ledger with exact coefficient identities", bad == 0, detail.str());
}

void criterion_9_oracles() {
    bool levels_ok = true;
    auto oracle_levels = oracles::reverse_search_levels(4, BigInt(100'000));
    for (unsigned alpha = 1; alpha <= 4; ++alpha) {
        auto level = enumerate_level(alpha, BigInt(100'000), std::nullopt);
        std::set<BigInt> values;
        for (const auto& entry : level) values.insert(entry.value);
        levels_ok = levels_ok && values == oracle_levels[alpha];
    }

    auto reconstructed = t_antecedents_upto(1000, 64);
    auto forward = oracles::reaching_one_upto(1000);
    bool antecedents_ok = reconstructed == forward;

    std::ostringstream detail;
    detail << "levels " << (levels_ok ? "match" : "differ") << ", reconstruction "
           << (antecedents_ok ? "matches" : "differs") << " (" << reconstructed.size()
           << " values)";
    report(9, "independent oracle equivalence", levels_ok && antecedents_ok, detail.str());
}

void criterion_10_density_proxy() {
    auto start = Clock::now();
    CensusResult result = run_census(1, 1'000'000, 8);
    auto rows = result.rows();
    double elapsed = seconds_since(start);

    bool pass = !rows.empty() && rows.back().upto == 1'000'000;
    std::ostringstream detail;
    for (const CensusRow& row : rows) {
        if (row.upto >= 1000) {
            double cap = std::pow(double(row.upto), 0.9999);
            if (double(row.w_count) > cap) pass = false;
        }
        detail << "N=" << row.upto << " #W=" << row.w_count << " exp=" << row.exponent << "  ";
    }
    pass = pass && rows.back().unresolved == 0 && elapsed < 600.0;
    detail << elapsed << " s on 8 workers";
    report(10, "census to 10^6 under the N^0.9999 envelope", pass, detail.str());
}

}  // namespace

int main() {
    criterion_1_remark();
    criterion_2_exponent_window();
    criterion_3_big_orbit();
    criterion_4_bijection();
    criterion_5_bounds();
    criterion_6_power_bounds();
    criterion_7_relaxation();
    criterion_8_ledger();
    criterion_9_oracles();
    criterion_10_density_proxy();

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
