#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/constants.hpp"

namespace collatz {

// Backward dynamics: the antecedent tree of 1 under S. Every antecedent at
// depth alpha is addressed by a tuple (i1,...,i_alpha) with i1 >= 2 and
// i_j >= 1; the admissible 2-adic exponent at a node depends only on the
// node's residue class mod 18.

using IndexTuple = std::vector<unsigned>;

struct ExponentRule {
    int residue;       // class mod 18, one of kOddClasses
    int odd_offset;    // exponent = 3i + odd_offset  for odd i
    int even_offset;   // exponent = 3i + even_offset for even i
    int odd_class;     // exponent mod 6 on the odd branch
    int even_class;    // exponent mod 6 on the even branch
};

/// The six exponent rules, indexed by position of the residue in kOddClasses.
const std::array<ExponentRule, 6>& exponent_rules();

/// Rule lookup by residue class; throws on residues outside kOddClasses.
const ExponentRule& exponent_rule_for(int residue);

/// Admissible exponent for the i-th antecedent of a node in the given residue
/// class. Strictly increasing in i, always >= 1.
unsigned long step_exponent(int residue, unsigned i);

/// The i-th antecedent (2^e * n - 1)/3 of n, e = step_exponent(n mod 18, i).
BigInt child(const BigInt& n, unsigned i);
std::pair<BigInt, unsigned long> child_with_exponent(const BigInt& n, unsigned i);

/// Fold child over the tuple starting from 1. Validates i1 >= 2, i_j >= 1.
BigInt index_to_n(const IndexTuple& tuple);

/// Backward exponent sequence (root step first) for a tuple.
std::vector<unsigned long> index_to_exponents(const IndexTuple& tuple);

/// Antecedent value from a backward exponent sequence, evaluated by the
/// alternating closed form rather than by folding child. Used as an
/// independent route in tests.
BigInt value_from_exponents(const std::vector<unsigned long>& exponents);

struct IndexResult {
    enum class Status { Ok, Root, Unresolved };
    Status status = Status::Unresolved;
    IndexTuple tuple;  // populated only when status == Ok
};

/// Invert the indexation: read the chain of n down to 1 and recover the
/// tuple. n = 1 is reported as Root (empty tuple, depth 0); chains that do
/// not reach 1 within cap come back Unresolved.
IndexResult n_to_index(const BigInt& n, std::uint64_t cap = kDefaultOrbitCap);

struct LevelEntry {
    IndexTuple tuple;
    BigInt value;
};

/// All antecedents of 1 at exactly depth alpha, bounded by value and/or by
/// coordinate. Children of a node shrink by at most a factor 2/3 per level,
/// so a subtree can be pruned as soon as its best-case descendant exceeds
/// max_value; within one node the child value is strictly increasing in i.
/// Output is sorted by value.
std::vector<LevelEntry> enumerate_level(unsigned alpha,
                                        const std::optional<BigInt>& max_value,
                                        std::optional<unsigned> max_index);

/// All positive integers <= limit whose T-orbit reaches 1, reconstructed from
/// the S-antecedents: n = 2^i (2^j s - 1)/3 over s reaching 1 under S with
/// s <= slack*2*limit, j >= 1, i >= 0. The s pool is built by forward
/// filtering (chains overshoot value bounds, so reverse search cannot be
/// truncated at 2*limit).
std::set<std::uint64_t> t_antecedents_upto(std::uint64_t limit, unsigned slack = 64,
                                           std::uint64_t cap = kDefaultOrbitCap);

}  // namespace collatz
