// codebook.cpp -- enumeration, antipodal-pair bookkeeping, and the balanced
// backtracking construction

#include "anomaly/codebook.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace anomaly {

std::vector<int> AlphabetSize::values() const
{
    std::vector<int> out;
    out.reserve(states_);
    for (int v = -max_magnitude(); v <= max_magnitude(); ++v)
        out.push_back(v);
    return out;
}

StateVector invert(const StateVector& v)
{
    StateVector out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](int e) { return -e; });
    return out;
}

bool is_constant(const StateVector& v)
{
    return std::all_of(v.begin(), v.end(), [&](int e) { return e == v.front(); });
}

StateVector canonical_representative(const StateVector& v)
{
    for (int e : v) {
        if (e > 0)
            return v;
        if (e < 0)
            return invert(v);
    }
    throw ZeroVector("the all-zero vector has no canonical representative");
}

static void check_enumeration_params(AlphabetSize s, int k)
{
    (void)s; // construction already validated it
    if (k < 1)
        throw InvalidParameter("analysis count k must be >= 1, got " + std::to_string(k));
}

std::vector<StateVector> enumerate_vectors(AlphabetSize s, int k)
{
    check_enumeration_params(s, k);
    const int lo = -s.max_magnitude();
    const int hi = s.max_magnitude();

    std::vector<StateVector> out;
    StateVector current(k, lo);
    for (;;) {
        out.push_back(current);
        // odometer increment, last entry fastest
        int pos = k - 1;
        while (pos >= 0 && current[pos] == hi)
            current[pos--] = lo;
        if (pos < 0)
            break;
        ++current[pos];
    }
    return out;
}

std::vector<StateVector> admissible_pairs(AlphabetSize s, int k)
{
    std::vector<StateVector> reps;
    for (const StateVector& v : enumerate_vectors(s, k)) {
        if (is_constant(v))
            continue;
        StateVector c = canonical_representative(v);
        if (c == v) // each pair surfaces exactly once, via its representative
            reps.push_back(std::move(c));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

const StateVector& Codebook::code(int label) const
{
    if (label < 1 || label > elements())
        throw InvalidParameter("element label " + std::to_string(label) +
                               " outside 1.." + std::to_string(elements()));
    return codes[static_cast<size_t>(label - 1)];
}

std::string Defect::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::LengthMismatch:
        os << "code of element " << element_a << " has the wrong length";
        break;
    case Kind::EntryOutOfRange:
        os << "code of element " << element_a << " has an entry outside the alphabet";
        break;
    case Kind::ConstantVector:
        os << "code of element " << element_a << " is a constant vector";
        break;
    case Kind::DuplicateCode:
        os << "elements " << element_a << " and " << element_b << " share a code";
        break;
    case Kind::AntipodalClash:
        os << "elements " << element_a << " and " << element_b << " have mutually inverse codes";
        break;
    case Kind::RowImbalance:
        os << "analysis row " << row << " does not sum to zero";
        break;
    }
    return os.str();
}

std::string ValidationReport::describe() const
{
    std::string out;
    for (const Defect& d : defects) {
        if (!out.empty())
            out += "; ";
        out += d.describe();
    }
    return out;
}

ValidationReport validate_codebook(const Codebook& cb)
{
    ValidationReport report;
    const int n = cb.elements();
    const int k = cb.analyses;

    for (int e = 1; e <= n; ++e) {
        const StateVector& v = cb.codes[static_cast<size_t>(e - 1)];
        if (static_cast<int>(v.size()) != k) {
            report.defects.push_back({Defect::Kind::LengthMismatch, e, 0, 0});
            continue; // remaining checks assume length k
        }
        if (!std::all_of(v.begin(), v.end(), [&](int x) { return cb.s.contains(x); }))
            report.defects.push_back({Defect::Kind::EntryOutOfRange, e, 0, 0});
        if (k >= 1 && is_constant(v))
            report.defects.push_back({Defect::Kind::ConstantVector, e, 0, 0});
    }

    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const StateVector& va = cb.codes[static_cast<size_t>(a - 1)];
            const StateVector& vb = cb.codes[static_cast<size_t>(b - 1)];
            if (va.size() != vb.size())
                continue;
            if (va == vb)
                report.defects.push_back({Defect::Kind::DuplicateCode, a, b, 0});
            else if (va == invert(vb))
                report.defects.push_back({Defect::Kind::AntipodalClash, a, b, 0});
        }
    }

    if (cb.balanced) {
        // zero sum per row; for s = 3 that is exactly equal +1/-1 counts
        for (int j = 0; j < k; ++j) {
            long long sum = 0;
            bool complete = true;
            for (const StateVector& v : cb.codes) {
                if (static_cast<int>(v.size()) != k) {
                    complete = false;
                    break;
                }
                sum += v[static_cast<size_t>(j)];
            }
            if (complete && sum != 0)
                report.defects.push_back({Defect::Kind::RowImbalance, 0, 0, j + 1});
        }
    }

    return report;
}

namespace {

// Backtracking state for the balanced construction. Pairs are visited in
// canonical lexicographic order; at each one we may take it as-is, take it
// sign-flipped, or (when fewer than all pairs are needed) skip it.
struct BalancedSearch {
    const std::vector<StateVector>& pairs;
    int k;
    int max_magnitude;
    // suffix_abs[i][j] = sum over pairs i.. of |entry j|
    std::vector<std::vector<long long>> suffix_abs;
    std::vector<long long> row_sum;
    std::vector<StateVector> chosen;

    BalancedSearch(const std::vector<StateVector>& p, int k_, int mag)
        : pairs(p), k(k_), max_magnitude(mag), row_sum(static_cast<size_t>(k_), 0)
    {
        const size_t count = pairs.size();
        suffix_abs.assign(count + 1, std::vector<long long>(static_cast<size_t>(k), 0));
        for (size_t i = count; i-- > 0;)
            for (int j = 0; j < k; ++j)
                suffix_abs[i][static_cast<size_t>(j)] =
                    suffix_abs[i + 1][static_cast<size_t>(j)] +
                    std::abs(pairs[i][static_cast<size_t>(j)]);
    }

    bool viable(size_t index, int needed) const
    {
        const int remaining = static_cast<int>(pairs.size() - index);
        if (needed > remaining)
            return false;
        const bool take_all = needed == remaining;
        for (int j = 0; j < k; ++j) {
            const long long abs_left = suffix_abs[index][static_cast<size_t>(j)];
            long long reach = static_cast<long long>(needed) * max_magnitude;
            reach = std::min(reach, abs_left);
            const long long sum = row_sum[static_cast<size_t>(j)];
            if (sum > reach || sum < -reach)
                return false;
            // sign flips preserve each entry's parity, so when every
            // remaining pair must be taken the final parity is already fixed
            if (take_all && (sum + abs_left) % 2 != 0)
                return false;
        }
        return true;
    }

    void apply(const StateVector& v, int sign)
    {
        for (int j = 0; j < k; ++j)
            row_sum[static_cast<size_t>(j)] += sign * v[static_cast<size_t>(j)];
    }

    bool dfs(size_t index, int needed)
    {
        if (needed == 0)
            return std::all_of(row_sum.begin(), row_sum.end(),
                               [](long long x) { return x == 0; });
        if (!viable(index, needed))
            return false;

        const StateVector& v = pairs[index];

        // Try the sign that keeps the partial sums smaller first; ties keep
        // the canonical orientation. Both are eventually tried, so the
        // search stays complete.
        long long keep_cost = 0, flip_cost = 0;
        for (int j = 0; j < k; ++j) {
            keep_cost += std::abs(row_sum[static_cast<size_t>(j)] + v[static_cast<size_t>(j)]);
            flip_cost += std::abs(row_sum[static_cast<size_t>(j)] - v[static_cast<size_t>(j)]);
        }
        const int first = keep_cost <= flip_cost ? 1 : -1;

        for (int sign : {first, -first}) {
            apply(v, sign);
            chosen.push_back(sign == 1 ? v : invert(v));
            if (dfs(index + 1, needed - 1))
                return true;
            chosen.pop_back();
            apply(v, -sign);
        }

        if (static_cast<int>(pairs.size() - index) > needed)
            return dfs(index + 1, needed); // exclude
        return false;
    }
};

} // namespace

Codebook build_codebook(int n, int k, AlphabetSize s, bool balanced)
{
    check_enumeration_params(s, k);
    if (n < 1)
        throw InvalidParameter("element count n must be >= 1, got " + std::to_string(n));

    std::vector<StateVector> pairs = admissible_pairs(s, k);
    if (n > static_cast<int>(pairs.size()))
        throw CapacityExceeded("requested " + std::to_string(n) + " elements but only " +
                               std::to_string(pairs.size()) + " codes exist for k=" +
                               std::to_string(k) + ", s=" + std::to_string(s.states()));

    Codebook cb{s, k, {}, balanced};
    if (!balanced) {
        cb.codes.assign(pairs.begin(), pairs.begin() + n);
        return cb;
    }

    BalancedSearch search(pairs, k, s.max_magnitude());
    if (!search.dfs(0, n))
        throw PlanInfeasible("no subset of " + std::to_string(n) +
                             " codes admits a zero-sum sign assignment for k=" +
                             std::to_string(k) + ", s=" + std::to_string(s.states()));
    cb.codes = std::move(search.chosen);
    return cb;
}

} // namespace anomaly
