#include "collatz/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "collatz/constants.hpp"
#include "collatz/variational.hpp"

namespace collatz {

BigInt multinomial(unsigned m, unsigned n, unsigned p) {
    BigInt a, b;
    mpz_bin_uiui(a.get_mpz_t(), m + n + p, m);
    mpz_bin_uiui(b.get_mpz_t(), n + p, n);
    return a * b;
}

namespace {

double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

// m^m n^n p^p as an exact integer, 0^0 = 1.
BigInt self_power_product(unsigned m, unsigned n, unsigned p) {
    BigInt r = 1;
    for (unsigned v : {m, n, p})
        if (v > 0) r *= pow_ui(v, v);
    return r;
}

}  // namespace

double multinomial_upper(unsigned m, unsigned n, unsigned p) {
    double s = double(m) + double(n) + double(p);
    return std::exp(xlogx(s) - xlogx(m) - xlogx(n) - xlogx(p));
}

bool multinomial_upper_holds(unsigned m, unsigned n, unsigned p) {
    unsigned s = m + n + p;
    BigInt lhs = multinomial(m, n, p) * self_power_product(m, n, p);
    BigInt rhs = (s == 0) ? BigInt(1) : pow_ui(s, s);
    return lhs <= rhs;
}

bool binomial_upper_holds(unsigned m, unsigned n) {
    unsigned s = m + n;
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), s, m);
    BigInt lhs = binom * self_power_product(m, n, 0);
    BigInt rhs = (s == 0) ? BigInt(1) : pow_ui(s, s);
    return lhs <= rhs;
}

double budget(std::uint64_t census_bound) {
    if (census_bound < 1) throw std::invalid_argument("budget: N must be >= 1");
    return kBudgetSlope * std::log(double(census_bound)) + kBudgetOffset;
}

long budget_remainder(std::uint64_t census_bound, unsigned odd_indices, unsigned even_indices) {
    return static_cast<long>(std::floor(budget(census_bound) - kOddIndexCoeff * odd_indices -
                                        kEvenIndexCoeff * even_indices));
}

std::vector<CountingCell> admissible_set(std::uint64_t census_bound) {
    std::vector<CountingCell> cells;
    for (unsigned even = 0; budget_remainder(census_bound, 0, even) >= 0; ++even) {
        for (unsigned odd = 0;; ++odd) {
            long rem = budget_remainder(census_bound, odd, even);
            if (rem < 0) break;
            cells.push_back({census_bound, odd, even, rem});
        }
    }
    return cells;
}

MaxCell bruteforce_max(std::uint64_t census_bound) {
    MaxCell best;
    best.value = -1;
    for (const CountingCell& cell : admissible_set(census_bound)) {
        BigInt v = multinomial(cell.odd_indices, cell.even_indices,
                               static_cast<unsigned>(cell.remainder));
        if (v > best.value) {
            best.cell = cell;
            best.value = v;
        }
    }
    return best;
}

double relaxation_bound(std::uint64_t census_bound) {
    StationaryPoint sp = solve_stationary();
    return std::exp(budget(census_bound) * phi(sp.x0, sp.y0));
}

}  // namespace collatz
