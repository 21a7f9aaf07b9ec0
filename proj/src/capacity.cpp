// capacity.cpp -- closed form, recurrences, and the brute-force oracle

#include "anomaly/capacity.hpp"

#include <algorithm>
#include <string>

namespace anomaly {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Overflow("integer overflow computing " + std::to_string(a) + " * " +
                       std::to_string(b));
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw Overflow("integer overflow computing " + std::to_string(a) + " + " +
                       std::to_string(b));
    return out;
}

std::int64_t checked_pow(std::int64_t base, int exponent)
{
    std::int64_t out = 1;
    for (int i = 0; i < exponent; ++i)
        out = checked_mul(out, base);
    return out;
}

void check_k(int k)
{
    if (k < 1)
        throw InvalidParameter("analysis count k must be >= 1, got " + std::to_string(k));
}

} // namespace

std::int64_t capacity_closed_form(AlphabetSize s, int k)
{
    check_k(k);
    return (checked_pow(s.states(), k) - s.states()) / 2;
}

std::int64_t capacity_step_additive(AlphabetSize s, int k, std::int64_t n_k)
{
    check_k(k);
    const std::int64_t step = checked_mul(checked_pow(s.states(), k), s.max_magnitude());
    return checked_add(n_k, step);
}

std::int64_t capacity_step_multiplicative(AlphabetSize s, std::int64_t n_k)
{
    return checked_mul(s.states(), checked_add(n_k, s.max_magnitude()));
}

CapacityReport capacity_cross_check(AlphabetSize s, int k, std::int64_t enumeration_bound)
{
    check_k(k);
    CapacityReport report;
    report.closed_form = capacity_closed_form(s, k);

    std::int64_t additive = 0;        // n_1
    std::int64_t multiplicative = 0;  // n_1
    for (int i = 1; i < k; ++i) {
        additive = capacity_step_additive(s, i, additive);
        multiplicative = capacity_step_multiplicative(s, multiplicative);
    }
    report.recurrence_additive = additive;
    report.recurrence_multiplicative = multiplicative;

    bool within_bound = true;
    std::int64_t space = 1;
    for (int i = 0; i < k && within_bound; ++i) {
        space *= s.states();
        within_bound = space <= enumeration_bound;
    }
    if (within_bound)
        report.enumerated = static_cast<std::int64_t>(admissible_pairs(s, k).size());

    return report;
}

namespace {

// Plain recursive enumeration over (subset, signs). No row-sum pruning: the
// point is to decide feasibility by a route that shares nothing with the
// backtracking construction.
struct OracleSearch {
    const std::vector<StateVector>& pairs;
    int k;
    bool balanced;
    std::vector<StateVector> picked;
    std::uint64_t leaves = 0;

    bool accept()
    {
        ++leaves;
        if (!balanced)
            return true;
        for (int j = 0; j < k; ++j) {
            long long sum = 0;
            for (const StateVector& v : picked)
                sum += v[static_cast<size_t>(j)];
            if (sum != 0)
                return false;
        }
        return true;
    }

    bool search(size_t index, int needed)
    {
        if (needed == 0)
            return accept();
        if (pairs.size() - index < static_cast<size_t>(needed))
            return false;

        const StateVector& v = pairs[index];
        for (int sign : {1, -1}) {
            picked.push_back(sign == 1 ? v : invert(v));
            if (search(index + 1, needed - 1))
                return true;
            picked.pop_back();
        }
        return search(index + 1, needed);
    }
};

} // namespace

FeasibilityResult feasibility_oracle(AlphabetSize s, int k, int n, bool balanced)
{
    check_k(k);
    if (n < 1)
        throw InvalidParameter("element count n must be >= 1, got " + std::to_string(n));

    constexpr std::int64_t kOracleBound = 3 * 3 * 3 * 3 * 3; // 3^5
    if (checked_pow(s.states(), k) > kOracleBound)
        throw ScaleGuard("feasibility oracle is limited to s^k <= 243, got s=" +
                         std::to_string(s.states()) + ", k=" + std::to_string(k));

    const std::vector<StateVector> pairs = admissible_pairs(s, k);
    OracleSearch search{pairs, k, balanced, {}, 0};

    FeasibilityResult result;
    result.feasible = search.search(0, n);
    result.assignments_examined = search.leaves;
    if (result.feasible)
        result.witness = Codebook{s, k, search.picked, balanced};
    return result;
}

} // namespace anomaly
