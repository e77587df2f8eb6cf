#include "collatz/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace collatz {

BigInt t_step(const BigInt& n) {
    if (sgn(n) == 0) throw std::invalid_argument("t_step: n = 0 is outside the dynamics");
    if (mpz_odd_p(n.get_mpz_t())) return 3 * n + 1;
    BigInt half;
    mpz_fdiv_q_2exp(half.get_mpz_t(), n.get_mpz_t(), 1);  // exact, n even
    return half;
}

std::pair<BigInt, unsigned long> s_step(const BigInt& n) {
    if (!in_sqcap(n))
        throw std::invalid_argument("s_step: n must be odd and not divisible by 3");
    BigInt v = 3 * n + 1;
    unsigned long e = two_adic_valuation(v);
    BigInt out;
    mpz_fdiv_q_2exp(out.get_mpz_t(), v.get_mpz_t(), e);
    return {out, e};
}

OrbitRecord t_orbit(const BigInt& n, std::uint64_t cap) {
    if (sgn(n) == 0) throw std::invalid_argument("t_orbit: n = 0 is outside the dynamics");
    if (cap < 1) throw std::invalid_argument("t_orbit: cap must be >= 1");

    OrbitRecord rec;
    rec.start = n;
    rec.visited.push_back(n);
    std::set<BigInt> seen{n};

    BigInt cur = n;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        cur = t_step(cur);
        if (seen.contains(cur)) {
            rec.t_steps = k;
            auto first = std::find(rec.visited.begin(), rec.visited.end(), cur);
            rec.cycle.assign(first, rec.visited.end());
            bool has_one = std::find(rec.cycle.begin(), rec.cycle.end(), BigInt(1)) != rec.cycle.end();
            rec.terminal = has_one ? Terminal::ReachedOneCycle : Terminal::OtherCycle;
            return rec;
        }
        seen.insert(cur);
        rec.visited.push_back(cur);
    }
    rec.t_steps = cap;
    rec.terminal = Terminal::Capped;
    return rec;
}

SChain s_orbit(const BigInt& n, std::uint64_t cap) {
    if (!in_sqcap(n))
        throw std::invalid_argument("s_orbit: n must be odd and not divisible by 3");
    SChain chain;
    chain.values.push_back(n);
    BigInt cur = n;
    for (std::uint64_t k = 0; k < cap && cur != 1; ++k) {
        auto [next, e] = s_step(cur);
        chain.values.push_back(next);
        chain.exponents.push_back(e);
        cur = next;
    }
    chain.reached_one = (cur == 1);
    return chain;
}

std::uint64_t ResidueProfile::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

std::uint64_t ResidueProfile::odd_class_total() const {
    std::uint64_t sum = 0;
    for (int i : kOddClasses) sum += at(i);
    return sum;
}

ResidueProfile residue_profile(const OrbitRecord& record) {
    ResidueProfile profile;
    profile.partial = (record.terminal == Terminal::Capped);
    for (const BigInt& m : record.visited) profile.counts[residue_mod18(m) - 1]++;
    return profile;
}

bool within_w_threshold(std::uint64_t class_count, std::uint64_t odd_total) {
    // 6000 c <= 1129 total without overflow: counts stay below 2^44 in practice,
    // but keep the guard cheap with 128-bit intermediates.
    using u128 = unsigned __int128;
    return u128(kWThresholdDen) * class_count <= u128(kWThresholdNum) * odd_total;
}

WVerdict w_membership(const BigInt& n, std::uint64_t cap) {
    OrbitRecord rec = t_orbit(n, cap);
    ResidueProfile profile = residue_profile(rec);

    WVerdict verdict;
    verdict.reaches_one = (rec.terminal == Terminal::ReachedOneCycle);

    std::uint64_t total = profile.odd_class_total();
    bool all_within = true;
    for (std::size_t k = 0; k < kOddClasses.size(); ++k) {
        std::uint64_t c = profile.at(kOddClasses[k]);
        if (total > 0) {
            verdict.ratios[k] = BigRat(c, total);
            verdict.ratios[k].canonicalize();
        }
        all_within = all_within && within_w_threshold(c, total);
    }

    if (rec.terminal == Terminal::Capped)
        verdict.status = WVerdict::Status::Unresolved;
    else
        verdict.status = (verdict.reaches_one && all_within) ? WVerdict::Status::InW
                                                             : WVerdict::Status::NotInW;
    return verdict;
}

ParityStats parity_stats(const OrbitRecord& record) {
    ParityStats stats;
    for (const BigInt& m : record.visited)
        mpz_odd_p(m.get_mpz_t()) ? ++stats.odd : ++stats.even;
    stats.total = record.visited.size();
    return stats;
}

namespace {

// Word-sized reach-1 test; returns false via *ok when 3n+1 would overflow.
bool reaches_one_u64(std::uint64_t n, std::uint64_t cap, bool* ok) {
    constexpr std::uint64_t kMaxSafe = (~std::uint64_t{0} - 1) / 3;
    *ok = true;
    std::uint64_t cur = n;
    for (std::uint64_t k = 0; k < cap; ++k) {
        if (cur == 1) return true;
        if (cur & 1) {
            if (cur > kMaxSafe) {
                *ok = false;
                return false;
            }
            cur = 3 * cur + 1;
        } else {
            cur >>= 1;
        }
    }
    return cur == 1;
}

}  // namespace

bool orbit_reaches_one(const BigInt& n, std::uint64_t cap) {
    if (sgn(n) <= 0) return false;
    if (n.fits_ulong_p()) {
        bool ok = false;
        bool reached = reaches_one_u64(n.get_ui(), cap, &ok);
        if (ok) return reached;
    }
    // Positive orbits either reach the {1,4,2} cycle or hit the cap; stopping
    // at the first value 1 is equivalent to full cycle detection here.
    BigInt cur = n;
    for (std::uint64_t k = 0; k < cap; ++k) {
        if (cur == 1) return true;
        cur = t_step(cur);
    }
    return cur == 1;
}

}  // namespace collatz
