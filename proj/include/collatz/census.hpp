#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "collatz/constants.hpp"

namespace collatz {

// Empirical census of W over an integer range: sharded sweep, exact-rational
// verdicts, checkpoint rows at powers of 10, JSONL/CSV persistence.

struct CensusRow {
    std::uint64_t upto = 0;
    std::uint64_t w_count = 0;
    std::uint64_t resolved = 0;
    std::uint64_t unresolved = 0;
    std::array<std::uint64_t, 18> residue_sums{};  // sum of c_i(n) over n <= upto
    double exponent = 0.0;                         // ln(max(w_count,1)) / ln(upto)

    bool operator==(const CensusRow&) const = default;
};

struct CensusMember {
    std::uint64_t n = 0;
    // reduced c_i / sum ratios in kOddClasses order
    std::array<std::pair<std::uint64_t, std::uint64_t>, 6> ratios{};

    bool operator==(const CensusMember&) const = default;
};

inline constexpr std::size_t kDefaultMemberCap = 100'000;

struct CensusResult {
    // Counters bucketed by the smallest power of 10 >= n; a pure function of
    // n, so shard merging is plain bucket addition.
    struct Bucket {
        std::uint64_t w_count = 0;
        std::uint64_t resolved = 0;
        std::uint64_t unresolved = 0;
        std::array<std::uint64_t, 18> residue_sums{};
    };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;  // disjoint, sorted
    std::map<std::uint64_t, Bucket> buckets;
    std::vector<CensusMember> members;  // sorted by n
    bool members_truncated = false;
    std::uint64_t cap = kDefaultOrbitCap;

    bool empty() const { return ranges.empty(); }
    std::uint64_t covered_max() const;

    /// Checkpoint rows: one per power of 10 up to the covered maximum, plus
    /// the covered maximum itself.
    std::vector<CensusRow> rows() const;
};

/// Sweep w_membership over [from, to]. shard_size 0 picks a size that keeps
/// all workers busy; workers share nothing and shards are folded in index
/// order, so output is identical for any thread count.
CensusResult run_census(std::uint64_t from, std::uint64_t to, unsigned threads = 0,
                        std::uint64_t cap = kDefaultOrbitCap, std::uint64_t shard_size = 0,
                        std::size_t member_cap = kDefaultMemberCap);

/// Pure counter reduction over disjoint ranges; throws on overlap.
CensusResult merge(const CensusResult& a, const CensusResult& b,
                   std::size_t member_cap = kDefaultMemberCap);

// JSONL persistence. One object per line; ratios serialized exactly as "p/q"
// strings. Parse errors carry the 1-based line number.
void write_rows_jsonl(const std::vector<CensusRow>& rows, std::ostream& out);
std::vector<CensusRow> read_rows_jsonl(std::istream& in);
void write_members_jsonl(const std::vector<CensusMember>& members, bool truncated,
                         std::ostream& out);
std::vector<CensusMember> read_members_jsonl(std::istream& in, bool* truncated = nullptr);

/// CSV summary, header upto,w_count,resolved,unresolved,exponent.
void write_csv(const std::vector<CensusRow>& rows, std::ostream& out);

}  // namespace collatz
