#include "collatz/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "collatz/bigint.hpp"
#include "collatz/orbit.hpp"

namespace collatz {

namespace {

std::uint64_t bucket_key(std::uint64_t n) {
    std::uint64_t p = 1;
    while (p < n) p *= 10;  // covered range keeps p well below 2^63
    return p;
}

// Open-addressing visited set reused across orbits; generation stamps make
// reset O(1).
class VisitedSet {
  public:
    void reset() {
        if (++gen_ == 0) {  // stamp wrap: wipe and restart
            std::fill(stamps_.begin(), stamps_.end(), 0);
            gen_ = 1;
        }
        count_ = 0;
    }

    // true if v was newly inserted, false if already present
    bool insert(std::uint64_t v) {
        if (count_ * 2 >= keys_.size()) grow();
        std::size_t mask = keys_.size() - 1;
        std::size_t idx = hash(v) & mask;
        while (stamps_[idx] == gen_) {
            if (keys_[idx] == v) return false;
            idx = (idx + 1) & mask;
        }
        keys_[idx] = v;
        stamps_[idx] = gen_;
        ++count_;
        return true;
    }

  private:
    static std::size_t hash(std::uint64_t v) {
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        return static_cast<std::size_t>(v);
    }

    void grow() {
        std::size_t cap = keys_.empty() ? 2048 : keys_.size() * 2;
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<std::uint32_t> old_stamps = std::move(stamps_);
        keys_.assign(cap, 0);
        stamps_.assign(cap, 0);
        std::size_t mask = cap - 1;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_stamps[i] != gen_) continue;
            std::size_t idx = hash(old_keys[i]) & mask;
            while (stamps_[idx] == gen_) idx = (idx + 1) & mask;
            keys_[idx] = old_keys[i];
            stamps_[idx] = gen_;
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> stamps_;
    std::uint32_t gen_ = 0;
    std::size_t count_ = 0;
};

struct OrbitStats {
    std::array<std::uint64_t, 18> profile{};
    bool reached_one = false;
    bool capped = false;
};

// Word-sized orbit classification; returns false when 3n+1 would overflow and
// the caller must take the big-integer path.
bool classify_u64(std::uint64_t n, std::uint64_t cap, VisitedSet& seen, OrbitStats& stats) {
    constexpr std::uint64_t kMaxSafe = (~std::uint64_t{0} - 1) / 3;
    stats = OrbitStats{};
    seen.reset();
    seen.insert(n);
    std::uint64_t r = n % 18;
    stats.profile[r == 0 ? 17 : r - 1]++;
    stats.reached_one = (n == 1);

    std::uint64_t cur = n;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (cur & 1) {
            if (cur > kMaxSafe) return false;
            cur = 3 * cur + 1;
        } else {
            cur >>= 1;
        }
        if (!seen.insert(cur)) return true;  // first repeat: cycle reached
        r = cur % 18;
        stats.profile[r == 0 ? 17 : r - 1]++;
        if (cur == 1) stats.reached_one = true;
    }
    stats.capped = true;
    return true;
}

void classify_bigint(std::uint64_t n, std::uint64_t cap, OrbitStats& stats) {
    OrbitRecord rec = t_orbit(BigInt(static_cast<unsigned long>(n)), cap);
    ResidueProfile p = residue_profile(rec);
    stats = OrbitStats{};
    stats.profile = p.counts;
    stats.reached_one = (rec.terminal == Terminal::ReachedOneCycle);
    stats.capped = (rec.terminal == Terminal::Capped);
}

std::array<std::pair<std::uint64_t, std::uint64_t>, 6> reduced_ratios(
    const std::array<std::uint64_t, 18>& profile) {
    std::uint64_t total = 0;
    for (int i : kOddClasses) total += profile[i - 1];
    std::array<std::pair<std::uint64_t, std::uint64_t>, 6> ratios;
    for (std::size_t k = 0; k < kOddClasses.size(); ++k) {
        std::uint64_t c = profile[kOddClasses[k] - 1];
        if (total == 0) {
            ratios[k] = {0, 1};
            continue;
        }
        std::uint64_t g = std::gcd(c, total);
        ratios[k] = {c / (g ? g : 1), total / (g ? g : 1)};
        if (c == 0) ratios[k] = {0, 1};
    }
    return ratios;
}

void scan_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t cap, CensusResult& out) {
    VisitedSet seen;
    OrbitStats stats;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (!classify_u64(n, cap, seen, stats)) classify_bigint(n, cap, stats);

        auto& bucket = out.buckets[bucket_key(n)];
        for (int i = 0; i < 18; ++i) bucket.residue_sums[i] += stats.profile[i];
        if (stats.capped) {
            bucket.unresolved++;
            continue;
        }
        bucket.resolved++;
        if (!stats.reached_one) continue;

        std::uint64_t total = 0;
        for (int i : kOddClasses) total += stats.profile[i - 1];
        bool in_w = true;
        for (int i : kOddClasses)
            in_w = in_w && within_w_threshold(stats.profile[i - 1], total);
        if (in_w) {
            bucket.w_count++;
            out.members.push_back({n, reduced_ratios(stats.profile)});
        }
    }
}

void truncate_members(CensusResult& r, std::size_t member_cap) {
    if (r.members.size() > member_cap) {
        r.members.resize(member_cap);
        r.members_truncated = true;
    }
}

}  // namespace

std::uint64_t CensusResult::covered_max() const {
    std::uint64_t m = 0;
    for (auto& [lo, hi] : ranges) m = std::max(m, hi);
    return m;
}

std::vector<CensusRow> CensusResult::rows() const {
    std::vector<CensusRow> rows;
    if (empty()) return rows;

    std::uint64_t last = covered_max();
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t p = 10; p <= last; p *= 10) {
        checkpoints.push_back(p);
        if (p > last / 10) break;
    }
    if (checkpoints.empty() || checkpoints.back() != last) checkpoints.push_back(last);

    auto it = buckets.begin();
    CensusRow acc;
    for (std::uint64_t c : checkpoints) {
        // every processed n <= c lives in a bucket keyed <= bucket_key(c)
        std::uint64_t key_limit = bucket_key(c);
        for (; it != buckets.end() && it->first <= key_limit; ++it) {
            acc.w_count += it->second.w_count;
            acc.resolved += it->second.resolved;
            acc.unresolved += it->second.unresolved;
            for (int i = 0; i < 18; ++i) acc.residue_sums[i] += it->second.residue_sums[i];
        }
        CensusRow row = acc;
        row.upto = c;
        row.exponent = (c > 1 && row.w_count > 0)
                           ? std::log(double(row.w_count)) / std::log(double(c))
                           : 0.0;
        rows.push_back(row);
    }
    return rows;
}

CensusResult run_census(std::uint64_t from, std::uint64_t to, unsigned threads, std::uint64_t cap,
                        std::uint64_t shard_size, std::size_t member_cap) {
    if (from < 1 || from > to) throw std::invalid_argument("run_census: need 1 <= from <= to");
    if (to > 1'000'000'000'000'000'000ULL)
        throw std::invalid_argument("run_census: range end too large");
    if (shard_size == 0) shard_size = 8192;  // fixed default keeps shards thread-count independent
    if (threads == 0) {
        if (const char* env = std::getenv("COLLATZ_THREADS")) {
            int v = std::atoi(env);
            if (v > 0) threads = static_cast<unsigned>(v);
        }
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    }

    const std::uint64_t span = to - from + 1;
    const std::uint64_t shards = (span + shard_size - 1) / shard_size;
    std::vector<CensusResult> parts(shards);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t idx = next.fetch_add(1); idx < shards; idx = next.fetch_add(1)) {
            std::uint64_t lo = from + idx * shard_size;
            std::uint64_t hi = std::min(to, lo + shard_size - 1);
            parts[idx].ranges.push_back({lo, hi});
            parts[idx].cap = cap;
            scan_range(lo, hi, cap, parts[idx]);
        }
    };

    std::vector<std::thread> pool;
    unsigned n_workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, shards));
    for (unsigned t = 1; t < n_workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // fold in shard order: counters commute, members stay sorted by n
    CensusResult result;
    result.cap = cap;
    result.ranges.push_back({from, to});
    for (CensusResult& part : parts) {
        for (auto& [key, bucket] : part.buckets) {
            auto& dst = result.buckets[key];
            dst.w_count += bucket.w_count;
            dst.resolved += bucket.resolved;
            dst.unresolved += bucket.unresolved;
            for (int i = 0; i < 18; ++i) dst.residue_sums[i] += bucket.residue_sums[i];
        }
        result.members.insert(result.members.end(), part.members.begin(), part.members.end());
    }
    truncate_members(result, member_cap);
    return result;
}

CensusResult merge(const CensusResult& a, const CensusResult& b, std::size_t member_cap) {
    for (auto& [alo, ahi] : a.ranges)
        for (auto& [blo, bhi] : b.ranges)
            if (alo <= bhi && blo <= ahi)
                throw std::invalid_argument("merge: shard ranges overlap");
    if (!a.empty() && !b.empty() && a.cap != b.cap)
        throw std::invalid_argument("merge: shards ran with different caps");

    CensusResult out;
    out.cap = a.empty() ? b.cap : a.cap;
    out.ranges = a.ranges;
    out.ranges.insert(out.ranges.end(), b.ranges.begin(), b.ranges.end());
    std::sort(out.ranges.begin(), out.ranges.end());

    out.buckets = a.buckets;
    for (auto& [key, bucket] : b.buckets) {
        auto& dst = out.buckets[key];
        dst.w_count += bucket.w_count;
        dst.resolved += bucket.resolved;
        dst.unresolved += bucket.unresolved;
        for (int i = 0; i < 18; ++i) dst.residue_sums[i] += bucket.residue_sums[i];
    }

    out.members.reserve(a.members.size() + b.members.size());
    out.members = a.members;
    out.members.insert(out.members.end(), b.members.begin(), b.members.end());
    std::sort(out.members.begin(), out.members.end(),
              [](const CensusMember& x, const CensusMember& y) { return x.n < y.n; });
    out.members_truncated = a.members_truncated || b.members_truncated;
    truncate_members(out, member_cap);
    return out;
}

// ---- persistence ----

namespace {

using ordered_json = nlohmann::ordered_json;

std::string ratio_string(const std::pair<std::uint64_t, std::uint64_t>& r) {
    return std::to_string(r.first) + "/" + std::to_string(r.second);
}

std::pair<std::uint64_t, std::uint64_t> parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw std::runtime_error("ratio is not of the form p/q");
    return {std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

void write_rows_jsonl(const std::vector<CensusRow>& rows, std::ostream& out) {
    for (const CensusRow& row : rows) {
        ordered_json j;
        j["upto"] = row.upto;
        j["w_count"] = row.w_count;
        j["resolved"] = row.resolved;
        j["unresolved"] = row.unresolved;
        j["residue_sums"] = row.residue_sums;
        j["exponent"] = row.exponent;
        out << j.dump() << '\n';
    }
}

std::vector<CensusRow> read_rows_jsonl(std::istream& in) {
    std::vector<CensusRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
            CensusRow row;
            row.upto = j.at("upto").get<std::uint64_t>();
            row.w_count = j.at("w_count").get<std::uint64_t>();
            row.resolved = j.at("resolved").get<std::uint64_t>();
            row.unresolved = j.at("unresolved").get<std::uint64_t>();
            auto sums = j.at("residue_sums");
            if (sums.size() != 18) throw std::runtime_error("residue_sums must have 18 entries");
            for (int i = 0; i < 18; ++i) row.residue_sums[i] = sums[i].get<std::uint64_t>();
            row.exponent = j.at("exponent").get<double>();
            rows.push_back(row);
        } catch (const std::exception& e) {
            parse_fail(line_no, e.what());
        }
    }
    return rows;
}

void write_members_jsonl(const std::vector<CensusMember>& members, bool truncated,
                         std::ostream& out) {
    for (const CensusMember& m : members) {
        ordered_json j;
        j["n"] = m.n;
        ordered_json ratios = ordered_json::array();
        for (const auto& r : m.ratios) ratios.push_back(ratio_string(r));
        j["ratios"] = ratios;
        out << j.dump() << '\n';
    }
    if (truncated) out << ordered_json{{"truncated", true}}.dump() << '\n';
}

std::vector<CensusMember> read_members_jsonl(std::istream& in, bool* truncated) {
    std::vector<CensusMember> members;
    if (truncated) *truncated = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            ordered_json j = ordered_json::parse(line);
            if (j.contains("truncated")) {
                if (truncated) *truncated = j.at("truncated").get<bool>();
                continue;
            }
            CensusMember m;
            m.n = j.at("n").get<std::uint64_t>();
            auto ratios = j.at("ratios");
            if (ratios.size() != 6) throw std::runtime_error("ratios must have 6 entries");
            for (int k = 0; k < 6; ++k) m.ratios[k] = parse_ratio(ratios[k].get<std::string>());
            members.push_back(m);
        } catch (const std::exception& e) {
            parse_fail(line_no, e.what());
        }
    }
    return members;
}

void write_csv(const std::vector<CensusRow>& rows, std::ostream& out) {
    out << "upto,w_count,resolved,unresolved,exponent\n";
    for (const CensusRow& row : rows) {
        char exp_buf[32];
        std::snprintf(exp_buf, sizeof exp_buf, "%.15g", row.exponent);
        out << row.upto << ',' << row.w_count << ',' << row.resolved << ',' << row.unresolved
            << ',' << exp_buf << '\n';
    }
}

}  // namespace collatz
