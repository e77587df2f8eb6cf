#pragma once

#include <cstdint>

namespace collatz {

// Near-uniformity threshold 1/6 + 0.0215 kept as the exact rational 1129/6000.
inline constexpr std::uint64_t kWThresholdNum = 1129;
inline constexpr std::uint64_t kWThresholdDen = 6000;

// Decimal majorants used by the counting argument. The two index coefficients
// are exact decimal identities: 0.05749 = 1 - (0.345 + 0.33334 + 0.26417) and
// 0.39083 = 1 - (0.345 + 0.26417).
inline constexpr double kBudgetSlope = 0.2405;   // majorizes 1/(6 ln 2)
inline constexpr double kBudgetOffset = 0.345;   // majorizes (11/6)(1129/6000)
inline constexpr double kOddIndexCoeff = 0.05749;
inline constexpr double kEvenIndexCoeff = 0.39083;

inline constexpr double kLog3Over6Log2Majorant = 0.26417;
inline constexpr double kThirdMajorant = 0.33334;

inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;

}  // namespace collatz
