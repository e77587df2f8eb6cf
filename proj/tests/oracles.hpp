#pragma once

// Independent oracles for the test suites. Everything here recomputes results
// from first principles and stays off the library's code paths wherever the
// two are compared.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "collatz/bigint.hpp"

namespace oracles {

using collatz::BigInt;

// Reverse search for antecedents of 1 under S: from each node try every
// exponent e <= 60, keep (2^e v - 1)/3 when it is integral, odd and not
// divisible by 3. Level 1 excludes the fixed point 1 itself. No pruning
// beyond the exponent cap; values are filtered by bound at the end.
inline std::vector<std::set<BigInt>> reverse_search_levels(unsigned max_depth,
                                                           const BigInt& value_bound) {
    std::vector<std::set<BigInt>> levels(max_depth + 1);
    levels[0].insert(1);
    for (unsigned d = 1; d <= max_depth; ++d) {
        for (const BigInt& v : levels[d - 1]) {
            BigInt p = 1;
            for (unsigned e = 1; e <= 60; ++e) {
                p *= 2;  // p = 2^e
                BigInt num = p * v - 1;
                if (num % 3 != 0) continue;
                BigInt m = num / 3;
                if (m == 1) continue;  // the trivial self-antecedent of 1
                if (mpz_odd_p(m.get_mpz_t()) == 0) continue;
                if (m % 3 == 0) continue;
                levels[d].insert(m);
            }
        }
    }
    for (auto& level : levels) {
        for (auto it = level.begin(); it != level.end();)
            it = (*it > value_bound) ? level.erase(it) : std::next(it);
    }
    return levels;
}

// Forward oracle: does the T-orbit of n reach 1? Plain iteration, no sets.
inline bool reaches_one(std::uint64_t n, std::uint64_t max_steps = 1'000'000) {
    BigInt cur = n;
    for (std::uint64_t k = 0; k < max_steps; ++k) {
        if (cur == 1) return true;
        if (mpz_odd_p(cur.get_mpz_t()))
            cur = 3 * cur + 1;
        else
            cur /= 2;
    }
    return cur == 1;
}

inline std::set<std::uint64_t> reaching_one_upto(std::uint64_t limit) {
    std::set<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (reaches_one(n)) out.insert(n);
    return out;
}

// Central finite difference of a 2-argument function.
template <class F>
std::pair<double, double> central_difference(F&& f, double x, double y, double h = 1e-6) {
    return {(f(x + h, y) - f(x - h, y)) / (2 * h), (f(x, y + h) - f(x, y - h)) / (2 * h)};
}

}  // namespace oracles
