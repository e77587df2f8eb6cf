#include "collatz/bounds.hpp"

#include <cmath>
#include <sstream>

#include "collatz/constants.hpp"
#include "collatz/orbit.hpp"

namespace collatz {

std::uint64_t odd_class_weight(const BigInt& n, std::uint64_t cap) {
    OrbitRecord rec = t_orbit(n, cap);
    if (rec.terminal == Terminal::Capped)
        throw std::runtime_error("odd_class_weight: orbit did not resolve within cap");
    ResidueProfile p = residue_profile(rec);
    return 2 * p.at(1) + p.at(5) + 3 * p.at(11) + 2 * p.at(13) + 3 * p.at(17);
}

unsigned odd_index_count(const IndexTuple& tuple) {
    unsigned count = 0;
    for (unsigned i : tuple) count += i % 2;
    return count;
}

namespace {

BigRat rational_pow2(long e) {
    if (e >= 0) return BigRat(pow2(static_cast<unsigned long>(e)));
    BigRat r(1, pow2(static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

}  // namespace

CoarseBoundCheck check_coarse_bounds(const BigInt& n,
                                     const std::vector<unsigned long>& exponents) {
    CoarseBoundCheck check;
    const std::size_t alpha = exponents.size();
    if (alpha < 2 || exponents.front() == 2) return check;  // NotApplicable

    unsigned long sum = 0;
    for (unsigned long e : exponents) sum += e;
    BigInt p = pow2(sum);
    BigInt three_alpha = pow_ui(3, alpha);
    check.lower = BigRat(p, three_alpha * static_cast<unsigned long>(alpha));
    check.upper = BigRat(p, three_alpha);
    check.lower.canonicalize();
    check.upper.canonicalize();
    BigRat value(n);
    check.status =
        (check.lower <= value && value <= check.upper) ? CheckStatus::Holds : CheckStatus::Fails;
    return check;
}

GrowthIdentityCheck check_growth_identity(const BigInt& n) {
    if (sgn(n) < 1) throw std::invalid_argument("check_growth_identity: n must be >= 1");
    GrowthIdentityCheck check;
    const double ln3 = std::log(3.0);
    double log_n = natural_log(n);
    // 1/(3n) without materializing a double n (n may exceed double range)
    double inv3n = std::exp(-std::log(3.0) - log_n);
    check.alpha_n = std::log1p(inv3n) / ln3;
    // relative error via logs: 3^(1+a) n vs 3n+1
    double log_lhs = (1.0 + check.alpha_n) * ln3 + log_n;
    double log_rhs = natural_log(3 * n + 1);
    check.rel_error = std::abs(std::expm1(log_lhs - log_rhs));
    check.holds = check.rel_error <= 1e-10 && check.alpha_n <= inv3n + 1e-15;
    return check;
}

LowerBoundCheck check_index_lower_bound(const IndexTuple& tuple, std::uint64_t cap) {
    LowerBoundCheck check;
    const std::size_t alpha = tuple.size();
    if (alpha < 2) return check;  // parent tuple must exist

    check.value = index_to_n(tuple);
    IndexTuple parent(tuple.begin(), tuple.end() - 1);
    std::uint64_t weight = odd_class_weight(index_to_n(parent), cap);

    long exponent_sum = 0;
    for (unsigned i : tuple) exponent_sum += 3L * i;
    long e = exponent_sum - static_cast<long>(weight) + static_cast<long>(odd_index_count(tuple));
    check.bound = rational_pow2(e) / BigRat(pow_ui(3, alpha) * static_cast<unsigned long>(alpha));
    check.bound.canonicalize();
    check.status = (BigRat(check.value) >= check.bound) ? CheckStatus::Holds : CheckStatus::Fails;
    return check;
}

WInequalityCheck check_w_inequality(const IndexTuple& tuple, const BigInt& n, std::uint64_t cap) {
    WInequalityCheck check;
    if (index_to_n(tuple) != n)
        throw std::invalid_argument("check_w_inequality: tuple does not index n");
    if (!w_membership(n, cap).in_w()) return check;  // NotApplicable

    const double ln2 = std::log(2.0);
    const double ln3 = std::log(3.0);
    const std::size_t alpha = tuple.size();
    std::uint64_t halved_sum = 0;  // sum of ceil(i/2)
    unsigned odd_positions = 0;
    for (unsigned i : tuple) {
        halved_sum += (i + 1) / 2;
        odd_positions += i % 2;
    }
    double ratio_budget =
        (11.0 / 6.0) * (double(kWThresholdNum) / double(kWThresholdDen)) * double(alpha + 1);
    check.lhs = double(halved_sum) - ratio_budget - double(odd_positions) / 3.0 -
                std::log(double(alpha)) / (6.0 * ln2) - double(alpha) * ln3 / (6.0 * ln2);
    check.rhs = natural_log(n) / (6.0 * ln2);
    check.status = (check.lhs <= check.rhs + 1e-12) ? CheckStatus::Holds : CheckStatus::Fails;
    return check;
}

bool ConstantLedger::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

LedgerEntry float_majorant(const std::string& name, double exact, double majorant) {
    std::ostringstream detail;
    detail.precision(12);
    detail << exact << " <= " << majorant;
    return {name, exact <= majorant, false, detail.str()};
}

LedgerEntry exact_majorant(const std::string& name, const BigRat& exact, const BigRat& majorant) {
    std::ostringstream detail;
    detail << exact.get_str() << " <= " << majorant.get_str() << " (exact)";
    return {name, exact <= majorant, true, detail.str()};
}

BigRat decimal(long num, long den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

ConstantLedger verify_constant_ledger() {
    const double ln2 = std::log(2.0);
    const double ln3 = std::log(3.0);
    ConstantLedger ledger;

    ledger.entries.push_back(
        float_majorant("1/(6 ln 2) <= 0.2405", 1.0 / (6.0 * ln2), kBudgetSlope));
    ledger.entries.push_back(
        float_majorant("ln 3/(6 ln 2) <= 0.26417", ln3 / (6.0 * ln2), kLog3Over6Log2Majorant));
    ledger.entries.push_back(exact_majorant("(11/6)(1129/6000) <= 0.345",
                                            BigRat(11 * kWThresholdNum, 6 * kWThresholdDen),
                                            decimal(345, 1000)));
    ledger.entries.push_back(
        exact_majorant("1/3 <= 0.33334", decimal(1, 3), decimal(33334, 100000)));

    // The two index coefficients are decimal identities, required exact.
    BigRat odd_coeff = 1 - (decimal(345, 1000) + decimal(33334, 100000) + decimal(26417, 100000));
    ledger.entries.push_back({"1 - (0.345 + 0.33334 + 0.26417) = 0.05749",
                              odd_coeff == decimal(5749, 100000), true,
                              odd_coeff.get_str() + " (exact identity)"});
    BigRat even_coeff = 1 - (decimal(345, 1000) + decimal(26417, 100000));
    ledger.entries.push_back({"1 - (0.345 + 0.26417) = 0.39083",
                              even_coeff == decimal(39083, 100000), true,
                              even_coeff.get_str() + " (exact identity)"});

    double log_tail = std::log(1e10) / 1e10;
    ledger.entries.push_back(float_majorant("ln(a)/a at a = 10^10 <= 1e-8", log_tail, 1e-8));

    // A circulating variant of the index coefficients reads 0.0575/0.39084;
    // this artifact uses 0.05749/0.39083 everywhere. Recorded so the
    // discrepancy stays visible.
    BigRat variant_odd = decimal(575, 10000), variant_even = decimal(39084, 100000);
    bool variants_differ = variant_odd != decimal(5749, 100000) &&
                           variant_even != decimal(39083, 100000) &&
                           variant_odd > decimal(5749, 100000) &&
                           variant_even > decimal(39083, 100000);
    ledger.entries.push_back({"noted discrepancy: proof-variant coefficients 0.0575/0.39084",
                              variants_differ, true,
                              "statement coefficients 0.05749/0.39083 used everywhere; the "
                              "variants exceed them, so both bound chains remain valid"});
    return ledger;
}

}  // namespace collatz
