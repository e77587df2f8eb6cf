#include "collatz/backtree.hpp"

#include <algorithm>
#include <stdexcept>

#include "collatz/orbit.hpp"

namespace collatz {

const std::array<ExponentRule, 6>& exponent_rules() {
    // One row per residue class: exponent = 3i + offset, offset picked by the
    // parity of i; the two admissible classes of the exponent mod 6 follow.
    static const std::array<ExponentRule, 6> rules = {{
        {1, -1, -2, 2, 4},
        {5, 0, -1, 3, 5},
        {7, 1, 0, 4, 0},
        {11, -2, -3, 1, 3},
        {13, -1, 0, 2, 0},
        {17, -2, -1, 1, 5},
    }};
    return rules;
}

const ExponentRule& exponent_rule_for(int residue) {
    for (const auto& rule : exponent_rules())
        if (rule.residue == residue) return rule;
    throw std::invalid_argument("exponent_rule_for: residue " + std::to_string(residue) +
                                " is not an odd non-multiple-of-3 class");
}

unsigned long step_exponent(int residue, unsigned i) {
    if (i < 1) throw std::invalid_argument("step_exponent: i must be >= 1");
    const ExponentRule& rule = exponent_rule_for(residue);
    long e = 3L * i + ((i % 2 == 1) ? rule.odd_offset : rule.even_offset);
    return static_cast<unsigned long>(e);  // >= 1 for every admissible (residue, i)
}

std::pair<BigInt, unsigned long> child_with_exponent(const BigInt& n, unsigned i) {
    if (!in_sqcap(n)) throw std::invalid_argument("child: n must be odd and not divisible by 3");
    unsigned long e = step_exponent(residue_mod18(n), i);
    BigInt v = (pow2(e) * n - 1) / 3;
    return {v, e};
}

BigInt child(const BigInt& n, unsigned i) { return child_with_exponent(n, i).first; }

namespace {

void validate_tuple(const IndexTuple& tuple) {
    if (tuple.empty()) throw std::invalid_argument("index tuple must be nonempty");
    if (tuple.front() < 2) throw std::invalid_argument("first index must be >= 2");
    for (unsigned i : tuple)
        if (i < 1) throw std::invalid_argument("indices must be >= 1");
}

}  // namespace

BigInt index_to_n(const IndexTuple& tuple) {
    validate_tuple(tuple);
    BigInt n = 1;
    for (unsigned i : tuple) n = child(n, i);
    return n;
}

std::vector<unsigned long> index_to_exponents(const IndexTuple& tuple) {
    validate_tuple(tuple);
    std::vector<unsigned long> exponents;
    exponents.reserve(tuple.size());
    BigInt n = 1;
    for (unsigned i : tuple) {
        auto [next, e] = child_with_exponent(n, i);
        exponents.push_back(e);
        n = next;
    }
    return exponents;
}

BigInt value_from_exponents(const std::vector<unsigned long>& exponents) {
    // (2^(e1+...+ea) - sum_k 2^(e_{k+2}+...+e_a) 3^k) / 3^a, suffix sums of
    // the exponent sequence taken from the root step outward.
    const std::size_t alpha = exponents.size();
    if (alpha == 0) return 1;
    unsigned long suffix = 0;
    for (unsigned long e : exponents) suffix += e;
    BigInt acc = pow2(suffix);
    for (std::size_t k = 0; k < alpha; ++k) {
        suffix -= exponents[k];
        acc -= pow2(suffix) * pow_ui(3, k);
    }
    BigInt denom = pow_ui(3, alpha);
    if (acc % denom != 0)
        throw std::invalid_argument("value_from_exponents: sequence violates the congruences");
    return acc / denom;
}

IndexResult n_to_index(const BigInt& n, std::uint64_t cap) {
    IndexResult result;
    if (n == 1) {
        result.status = IndexResult::Status::Root;
        return result;
    }
    SChain chain = s_orbit(n, cap);
    if (!chain.reached_one) {
        result.status = IndexResult::Status::Unresolved;
        return result;
    }
    // Walk the chain from 1 back out to n; at each step the parent's residue
    // class and the consumed exponent pin the branch parity, hence the index.
    const std::size_t alpha = chain.steps();
    result.tuple.reserve(alpha);
    for (std::size_t k = 0; k < alpha; ++k) {
        const BigInt& parent = chain.values[alpha - k];
        unsigned long e = chain.exponents[alpha - 1 - k];
        const ExponentRule& rule = exponent_rule_for(residue_mod18(parent));
        long mod6 = static_cast<long>(e % 6);
        long i;
        if (mod6 == rule.odd_class)
            i = (static_cast<long>(e) - rule.odd_offset) / 3;
        else if (mod6 == rule.even_class)
            i = (static_cast<long>(e) - rule.even_offset) / 3;
        else
            throw std::logic_error("n_to_index: exponent outside the admissible classes");
        result.tuple.push_back(static_cast<unsigned>(i));
    }
    result.status = IndexResult::Status::Ok;
    return result;
}

namespace {

struct LevelScan {
    unsigned alpha;
    const std::optional<BigInt>* max_value;
    std::optional<unsigned> max_index;
    std::vector<LevelEntry>* out;

    // A node at depth d can shrink by at most 2/3 per remaining level (the
    // smallest admissible exponent is 1), so its best descendant at depth
    // alpha is above (2/3)^(alpha-d) (v+1) - 1. Prune once that exceeds the
    // value bound: (v+1) 2^rem > (N+1) 3^rem.
    bool subtree_exceeds(const BigInt& v, unsigned depth) const {
        if (!max_value->has_value()) return false;
        unsigned rem = alpha - depth;
        return (v + 1) * pow2(rem) > (**max_value + 1) * pow_ui(3, rem);
    }

    void descend(const BigInt& node, unsigned depth, IndexTuple& prefix) {
        unsigned i = (depth == 0) ? 2 : 1;
        for (;; ++i) {
            if (max_index && i > *max_index) break;
            BigInt v = child(node, i);
            if (subtree_exceeds(v, depth + 1)) break;  // child increasing in i
            prefix.push_back(i);
            if (depth + 1 == alpha) {
                if (!max_value->has_value() || v <= **max_value)
                    out->push_back({prefix, v});
            } else {
                descend(v, depth + 1, prefix);
            }
            prefix.pop_back();
        }
    }
};

}  // namespace

std::vector<LevelEntry> enumerate_level(unsigned alpha, const std::optional<BigInt>& max_value,
                                        std::optional<unsigned> max_index) {
    if (alpha < 1) throw std::invalid_argument("enumerate_level: alpha must be >= 1");
    if (!max_value && !max_index)
        throw std::invalid_argument("enumerate_level: need a value bound or an index bound");

    std::vector<LevelEntry> out;
    LevelScan scan{alpha, &max_value, max_index, &out};
    IndexTuple prefix;
    scan.descend(1, 0, prefix);
    std::sort(out.begin(), out.end(),
              [](const LevelEntry& a, const LevelEntry& b) { return a.value < b.value; });
    return out;
}

std::set<std::uint64_t> t_antecedents_upto(std::uint64_t limit, unsigned slack, std::uint64_t cap) {
    if (limit < 1) throw std::invalid_argument("t_antecedents_upto: limit must be >= 1");
    if (slack < 1) throw std::invalid_argument("t_antecedents_upto: slack must be >= 1");
    constexpr std::uint64_t kMax = ~std::uint64_t{0};
    if (limit > (kMax - 1) / 3 || limit > kMax / (2 * std::uint64_t{slack}))
        throw std::invalid_argument("t_antecedents_upto: limit too large");

    const std::uint64_t pool_max = std::uint64_t{slack} * 2 * limit;
    const std::uint64_t product_max = 3 * limit + 1;  // 2^j s - 1 = 3q <= 3*limit
    std::set<std::uint64_t> out;
    for (std::uint64_t s = 1; s <= pool_max; s += 2) {
        if (s > product_max / 2) break;  // no j >= 1 can land 2^j s within range
        if (s % 3 == 0) continue;
        if (!orbit_reaches_one(s, cap)) continue;
        // n = 2^i (2^j s - 1)/3 with 2^j s == 1 (mod 3)
        for (std::uint64_t p = 2 * s; p <= product_max; p *= 2) {
            if (p % 3 == 1) {
                std::uint64_t q = (p - 1) / 3;
                for (std::uint64_t n = q; n <= limit; n *= 2) out.insert(n);
            }
            if (p > product_max / 2) break;
        }
    }
    return out;
}

}  // namespace collatz
