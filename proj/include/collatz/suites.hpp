#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace collatz {

// Verification sweeps behind `collatz verify`. Each suite returns one result
// per check; a suite passes iff every check does.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> suite_constants();
std::vector<CheckResult> suite_bounds();
std::vector<CheckResult> suite_multinomial();
std::vector<CheckResult> suite_upperbis(std::vector<std::pair<std::uint64_t, std::string>>* csv_rows = nullptr);
std::vector<CheckResult> suite_roundtrip();

}  // namespace collatz
