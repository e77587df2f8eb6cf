#include "collatz/suites.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "collatz/backtree.hpp"
#include "collatz/bounds.hpp"
#include "collatz/census.hpp"
#include "collatz/counting.hpp"
#include "collatz/orbit.hpp"
#include "collatz/variational.hpp"

namespace collatz {

namespace {

CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
    return {name, pass, detail};
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// every tuple of the sweep: depth 1..max_alpha, first coordinate 2..max_coord,
// later coordinates 1..max_coord
template <class F>
void for_each_tuple(unsigned max_alpha, unsigned max_coord, F&& fn) {
    IndexTuple tuple;
    auto rec = [&](auto&& self, unsigned depth) -> void {
        if (depth > 0) fn(tuple);
        if (depth == max_alpha) return;
        unsigned lo = (depth == 0) ? 2 : 1;
        for (unsigned i = lo; i <= max_coord; ++i) {
            tuple.push_back(i);
            self(self, depth + 1);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<CheckResult> suite_constants() {
    std::vector<CheckResult> out;
    ConstantLedger ledger = verify_constant_ledger();
    for (const LedgerEntry& e : ledger.entries) out.push_back(check(e.name, e.pass, e.detail));
    return out;
}

std::vector<CheckResult> suite_roundtrip() {
    std::vector<CheckResult> out;

    std::set<BigInt> values;
    std::size_t total = 0;
    bool injective = true, roundtrip = true, exact_depth = true, classes_ok = true,
         closed_form = true, in_cap = true;
    for_each_tuple(5, 4, [&](const IndexTuple& tuple) {
        ++total;
        BigInt n = index_to_n(tuple);
        injective = injective && values.insert(n).second;
        in_cap = in_cap && in_sqcap(n);

        IndexResult inv = n_to_index(n);
        roundtrip = roundtrip && inv.status == IndexResult::Status::Ok && inv.tuple == tuple;

        SChain chain = s_orbit(n);
        exact_depth = exact_depth && chain.reached_one && chain.steps() == tuple.size();

        auto exponents = index_to_exponents(tuple);
        BigInt walk = 1;
        for (std::size_t k = 0; k < tuple.size() && classes_ok; ++k) {
            const ExponentRule& rule = exponent_rule_for(residue_mod18(walk));
            long mod6 = static_cast<long>(exponents[k] % 6);
            classes_ok = (mod6 == rule.odd_class || mod6 == rule.even_class);
            walk = child(walk, tuple[k]);
        }
        closed_form = closed_form && value_from_exponents(exponents) == n;
    });

    std::string scope = "over " + std::to_string(total) + " tuples, depth <= 5, coords <= 4";
    out.push_back(check("indexation is injective", injective, scope));
    out.push_back(check("n_to_index inverts index_to_n", roundtrip, scope));
    out.push_back(check("values lie in the odd non-multiple-of-3 classes", in_cap, scope));
    out.push_back(check("chains reach 1 in exactly the tuple depth", exact_depth, scope));
    out.push_back(check("exponents match their residue classes mod 6", classes_ok, scope));
    out.push_back(check("closed form agrees with the child fold", closed_form, scope));
    return out;
}

std::vector<CheckResult> suite_bounds() {
    std::vector<CheckResult> out;

    bool coarse_ok = true, upper_all = true, lb_ok = true;
    std::size_t coarse_applicable = 0, lb_checked = 0;
    for_each_tuple(5, 4, [&](const IndexTuple& tuple) {
        BigInt n = index_to_n(tuple);
        auto exponents = index_to_exponents(tuple);

        CoarseBoundCheck cb = check_coarse_bounds(n, exponents);
        if (cb.status != CheckStatus::NotApplicable) {
            ++coarse_applicable;
            coarse_ok = coarse_ok && cb.status == CheckStatus::Holds;
        }

        // upper half needs no precondition
        unsigned long sum = 0;
        for (auto e : exponents) sum += e;
        upper_all = upper_all &&
                    BigRat(n) <= BigRat(pow2(sum), pow_ui(3, exponents.size()));

        if (tuple.size() >= 2) {
            ++lb_checked;
            lb_ok = lb_ok && check_index_lower_bound(tuple).status == CheckStatus::Holds;
        }
    });
    out.push_back(check("sandwich bound on applicable tuples", coarse_ok,
                        std::to_string(coarse_applicable) + " applicable"));
    out.push_back(check("upper bound on all tuples", upper_all, "no precondition"));
    out.push_back(check("index lower bound on depth >= 2 tuples", lb_ok,
                        std::to_string(lb_checked) + " tuples"));

    // growth identity spot values
    bool growth = true;
    for (unsigned long n : {1ul, 2ul, 3ul, 17ul, 1000000ul})
        growth = growth && check_growth_identity(BigInt(n)).holds;
    out.push_back(check("growth identity 3n+1 = 3^(1+a(n)) n", growth, "n in {1,2,3,17,1e6}"));

    // every W member below 10^4 that sits in the backward tree
    CensusResult census = run_census(1, 10'000);
    bool ineq_ok = true;
    std::size_t ineq_checked = 0;
    for (const CensusMember& m : census.members) {
        BigInt n(static_cast<unsigned long>(m.n));
        if (!in_sqcap(n)) continue;
        IndexResult idx = n_to_index(n);
        if (idx.status != IndexResult::Status::Ok) {
            ineq_ok = false;
            continue;
        }
        ++ineq_checked;
        ineq_ok = ineq_ok && check_w_inequality(idx.tuple, n).status == CheckStatus::Holds;
    }
    out.push_back(check("W-member inequality below 10^4", ineq_ok,
                        std::to_string(ineq_checked) + " members in the tree"));
    return out;
}

std::vector<CheckResult> suite_multinomial() {
    std::vector<CheckResult> out;

    bool binom = true;
    for (unsigned m = 0; m <= 60; ++m)
        for (unsigned n = 0; n <= 60; ++n) binom = binom && binomial_upper_holds(m, n);
    out.push_back(check("binomial power bound", binom, "all m, n <= 60, exact"));

    bool trinom = true;
    for (unsigned m = 0; m <= 30; ++m)
        for (unsigned n = 0; n <= 30; ++n)
            for (unsigned p = 0; p <= 30; ++p) trinom = trinom && multinomial_upper_holds(m, n, p);
    out.push_back(check("trinomial power bound", trinom, "all m, n, p <= 30, exact"));

    // g(x) = (x/(x-1))^(x-1) increasing, grid 1.1 .. 50
    bool g_incr = true;
    double prev = 0.0;
    for (double x = 1.1; x <= 50.0 + 1e-9; x += 0.1) {
        double g = std::pow(x / (x - 1.0), x - 1.0);
        g_incr = g_incr && g >= prev;
        prev = g;
    }
    out.push_back(check("(x/(x-1))^(x-1) increasing", g_incr, "grid 1.1..50 step 0.1"));
    return out;
}

std::vector<CheckResult> suite_upperbis(std::vector<std::pair<std::uint64_t, std::string>>* csv_rows) {
    std::vector<CheckResult> out;

    for (std::uint64_t n : {100ull, 1000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
        MaxCell mc = bruteforce_max(n);
        double relax = relaxation_bound(n);
        bool pass = BigRat(mc.value) <= BigRat(relax);
        std::ostringstream detail;
        detail << "max " << mc.value.get_str() << " at (" << mc.cell.odd_indices << ","
               << mc.cell.even_indices << "," << mc.cell.remainder << ") <= " << fmt(relax);
        out.push_back(check("cell maximum below relaxation, N = " + std::to_string(n), pass,
                            detail.str()));
        if (csv_rows) {
            std::ostringstream row;
            row << n << ',' << mc.value.get_str() << ',' << fmt(relax);
            csv_rows->push_back({n, row.str()});
        }
    }

    // monotone continuation: t -> (s+t)^(s+t) / (s_parts * t^t) on sampled cells
    bool monotone = true;
    for (std::uint64_t n : {100ull, 10'000ull}) {
        for (const CountingCell& cell : admissible_set(n)) {
            if ((cell.odd_indices + cell.even_indices) % 7 != 0) continue;  // sample
            double s = double(cell.odd_indices) + double(cell.even_indices);
            auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
            double prev = -1e300;
            for (double t = double(cell.remainder); t <= double(cell.remainder) + 1.0 + 1e-9;
                 t += 0.1) {
                double lg = xlogx(s + t) - xlogx(t);
                monotone = monotone && lg >= prev - 1e-9;
                prev = lg;
            }
        }
    }
    out.push_back(check("power ratio non-decreasing past the floored budget", monotone,
                        "grid step 0.1, sampled cells"));
    return out;
}

}  // namespace collatz
