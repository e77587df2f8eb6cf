#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/constants.hpp"

namespace collatz {

// Forward dynamics: the map T(n) = 3n+1 (n odd) / n/2 (n even) on nonzero
// integers, the Sinai map S(n) = (3n+1)/2^e on odd non-multiples of 3, orbit
// sets with cycle detection, residue statistics modulo 18 and the
// near-uniform-membership verdict.

enum class Terminal { ReachedOneCycle, OtherCycle, Capped };

struct OrbitRecord {
    BigInt start;
    std::vector<BigInt> visited;  // insertion order, all distinct
    Terminal terminal = Terminal::Capped;
    std::vector<BigInt> cycle;    // members of the detected cycle, orbit order
    std::uint64_t t_steps = 0;    // T applications until repeat or cap
};

struct ResidueProfile {
    // counts[i-1] = #{m in the set : m == i (mod 18)}; slot 18 holds residue 0.
    std::array<std::uint64_t, 18> counts{};
    bool partial = false;  // true when computed from a capped orbit

    std::uint64_t at(int residue_1to18) const { return counts.at(residue_1to18 - 1); }
    std::uint64_t total() const;
    std::uint64_t odd_class_total() const;  // sum over the six classes of I
};

struct WVerdict {
    enum class Status { InW, NotInW, Unresolved };
    Status status = Status::Unresolved;
    bool reaches_one = false;
    // c_i / sum_I c_i for i in kOddClasses order; zero sum leaves all ratios 0.
    std::array<BigRat, 6> ratios;

    bool in_w() const { return status == Status::InW; }
};

struct ParityStats {
    std::uint64_t odd = 0;
    std::uint64_t even = 0;
    std::uint64_t total = 0;
};

struct SChain {
    // values[0] = n, values.back() = 1 when reached_one. exponents[j] is the
    // 2-adic exponent consumed by the S application values[j] -> values[j+1];
    // read back-to-front it is the chain's exponent sequence rooted at 1.
    std::vector<BigInt> values;
    std::vector<unsigned long> exponents;
    bool reached_one = false;

    std::size_t steps() const { return exponents.size(); }
};

/// One application of T. Rejects n = 0.
BigInt t_step(const BigInt& n);

/// One application of S with its exponent. Rejects inputs that are even or
/// divisible by 3.
std::pair<BigInt, unsigned long> s_step(const BigInt& n);

/// Iterate T from n, collecting the visited set until a value repeats or cap
/// applications were made. Cycle classification: ReachedOneCycle iff 1 is in
/// the detected cycle.
OrbitRecord t_orbit(const BigInt& n, std::uint64_t cap = kDefaultOrbitCap);

/// Iterate S from n until the value 1 or cap applications. A chain that does
/// not reach 1 within cap is returned with reached_one = false.
SChain s_orbit(const BigInt& n, std::uint64_t cap = kDefaultOrbitCap);

/// Counts of the visited set by residue class mod 18. Negative members are
/// normalized into 1..18.
ResidueProfile residue_profile(const OrbitRecord& record);

/// Exact comparison 6000*c <= 1129*total, the rational form of
/// c/total <= 1/6 + 0.0215. No floating point.
bool within_w_threshold(std::uint64_t class_count, std::uint64_t odd_total);

/// Membership verdict for the near-uniform set W. Capped orbits yield
/// Unresolved, never false.
WVerdict w_membership(const BigInt& n, std::uint64_t cap = kDefaultOrbitCap);

ParityStats parity_stats(const OrbitRecord& record);

/// True iff the T-orbit of n reaches 1 within cap steps. Uses a word-sized
/// fast path when the whole orbit fits in 64 bits.
bool orbit_reaches_one(const BigInt& n, std::uint64_t cap = kDefaultOrbitCap);

}  // namespace collatz
