#pragma once

#include <cstdint>
#include <vector>

#include "collatz/bigint.hpp"

namespace collatz {

// Counting machinery: exact multinomials, their power-ratio upper bounds, the
// admissible index-budget cells for a census bound N, and the continuous
// relaxation of the cell maximum.

struct CountingCell {
    std::uint64_t census_bound = 1;  // N
    unsigned odd_indices = 0;        // number of odd tuple coordinates
    unsigned even_indices = 0;       // number of even tuple coordinates
    long remainder = 0;              // floored leftover budget; admissible iff >= 0

    bool admissible() const { return remainder >= 0; }
};

/// (m+n+p)! / (m! n! p!), exact.
BigInt multinomial(unsigned m, unsigned n, unsigned p);

/// (m+n+p)^(m+n+p) / (m^m n^n p^p) with the convention 0^0 = 1.
double multinomial_upper(unsigned m, unsigned n, unsigned p);

/// multinomial(m,n,p) <= multinomial_upper(m,n,p), compared in exact integer
/// arithmetic (cross-multiplied).
bool multinomial_upper_holds(unsigned m, unsigned n, unsigned p);

/// Binomial special case: (m+n)!/(m!n!) <= (m+n)^(m+n)/(m^m n^n), exact.
bool binomial_upper_holds(unsigned m, unsigned n);

/// ln-budget 0.2405 ln N + 0.345 of the counting argument.
double budget(std::uint64_t census_bound);

/// floor(budget(N) - 0.05749*odd - 0.39083*even); may be negative.
long budget_remainder(std::uint64_t census_bound, unsigned odd_indices, unsigned even_indices);

/// All cells with nonnegative remainder, even_indices ascending outer,
/// odd_indices ascending inner. Finite since both coefficients are positive.
std::vector<CountingCell> admissible_set(std::uint64_t census_bound);

struct MaxCell {
    CountingCell cell;
    BigInt value;
};

/// Exhaustive scan of the admissible set for the maximal multinomial; ties
/// keep the first cell in iteration order.
MaxCell bruteforce_max(std::uint64_t census_bound);

/// exp(budget(N) * phi(x0,y0)) at the default stationary point: the
/// continuous bound dominating bruteforce_max(N).value.
double relaxation_bound(std::uint64_t census_bound);

}  // namespace collatz
