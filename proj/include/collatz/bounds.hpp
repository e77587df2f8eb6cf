#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collatz/backtree.hpp"
#include "collatz/bigint.hpp"

namespace collatz {

// Inequality checks for the antecedent tree and the ledger of decimal
// constants. Comparisons that mix powers of 2 and 3 with tree values are done
// in exact rational arithmetic; floats appear only where the quantities are
// genuinely transcendental.

enum class CheckStatus { Holds, Fails, NotApplicable };

/// Weighted odd-class count 2c1 + c5 + 3c11 + 2c13 + 3c17 over the T-orbit.
/// Throws when the orbit does not resolve within cap.
std::uint64_t odd_class_weight(const BigInt& n, std::uint64_t cap = kDefaultOrbitCap);

/// Number of odd coordinates of a tuple.
unsigned odd_index_count(const IndexTuple& tuple);

struct CoarseBoundCheck {
    CheckStatus status = CheckStatus::NotApplicable;
    BigRat lower;  // 2^sum / (alpha 3^alpha)
    BigRat upper;  // 2^sum / 3^alpha
};

/// Sandwich bound for a depth >= 2 antecedent with root exponent != 2, from
/// its backward exponent sequence. Both comparisons exact.
CoarseBoundCheck check_coarse_bounds(const BigInt& n,
                                     const std::vector<unsigned long>& exponents);

struct GrowthIdentityCheck {
    bool holds = false;
    double alpha_n = 0.0;    // ln(1 + 1/(3n)) / ln 3
    double rel_error = 0.0;  // |3^(1+alpha_n) n - (3n+1)| / (3n+1)
};

/// 3n+1 = 3^(1+a) n with a = ln(1+1/(3n))/ln 3 <= 1/(3n), checked in floating
/// point to 1e-10 relative.
GrowthIdentityCheck check_growth_identity(const BigInt& n);

struct LowerBoundCheck {
    CheckStatus status = CheckStatus::NotApplicable;
    BigInt value;
    BigRat bound;  // 2^(3 sum(i) - weight(parent) + odd count) / (alpha 3^alpha)
};

/// Index lower bound for a tuple of depth >= 2: the tree value dominates an
/// explicit power of 2 divided by alpha 3^alpha, where the exponent debits
/// the parent's odd-class weight. Exact rational comparison.
LowerBoundCheck check_index_lower_bound(const IndexTuple& tuple,
                                        std::uint64_t cap = kDefaultOrbitCap);

struct WInequalityCheck {
    CheckStatus status = CheckStatus::NotApplicable;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// For a W member n = index_to_n(tuple): the halved-index sum, debited by the
/// uniformity budget, stays below ln n/(6 ln 2). Not applicable outside W.
WInequalityCheck check_w_inequality(const IndexTuple& tuple, const BigInt& n,
                                    std::uint64_t cap = kDefaultOrbitCap);

struct LedgerEntry {
    std::string name;
    bool pass = false;
    bool exact = false;  // true when checked in exact rational arithmetic
    std::string detail;
};

struct ConstantLedger {
    std::vector<LedgerEntry> entries;
    bool all_pass() const;
};

/// Verify every decimal majorant against its exact value, and the two index
/// coefficients against their defining decimal identities.
ConstantLedger verify_constant_ledger();

}  // namespace collatz
