#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace collatz {

using BigInt = mpz_class;
using BigRat = mpq_class;

// The six residue classes of odd non-multiples of 3, in vector order.
inline constexpr std::array<int, 6> kOddClasses = {1, 5, 7, 11, 13, 17};

/// Residue of n modulo 18, normalized to 1..18 (18 stands for residue 0).
inline int residue_mod18(const BigInt& n) {
    unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 18);
    return r == 0 ? 18 : static_cast<int>(r);
}

/// True iff n is odd and not divisible by 3 (n may be negative).
inline bool in_sqcap(const BigInt& n) {
    return mpz_odd_p(n.get_mpz_t()) != 0 && mpz_fdiv_ui(n.get_mpz_t(), 3) != 0;
}

/// Largest k with 2^k | n. Requires n != 0.
inline unsigned long two_adic_valuation(const BigInt& n) {
    if (sgn(n) == 0) throw std::invalid_argument("two_adic_valuation: n must be nonzero");
    return mpz_scan1(n.get_mpz_t(), 0);
}

inline BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline BigInt pow_ui(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Natural log of a positive BigInt, exact to double precision at any size.
inline double natural_log(const BigInt& n) {
    if (sgn(n) <= 0) throw std::invalid_argument("natural_log: n must be positive");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

/// Parse a decimal integer of any size; throws std::invalid_argument on junk.
inline BigInt parse_bigint(const std::string& text) {
    BigInt n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return n;
}

}  // namespace collatz
