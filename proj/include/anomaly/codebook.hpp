// codebook.hpp -- state vectors over a symmetric odd alphabet and the
// assignment of one code per element (the identifying codebook)

#pragma once

#include <string>
#include <vector>

#include "anomaly/errors.hpp"

namespace anomaly {

/// Number of states one analysis can report. The alphabet is the set of
/// integers -(s-1)/2 .. (s-1)/2; it always contains 0 and is closed under
/// negation. Only odd s >= 3 is meaningful: an even alphabet has no
/// self-inverse middle state.
class AlphabetSize {
public:
    AlphabetSize() = default; // ternary

    explicit AlphabetSize(int states) : states_(states)
    {
        if (states < 3 || states % 2 == 0)
            throw InvalidParameter("alphabet size must be an odd integer >= 3, got " +
                                   std::to_string(states));
    }

    int states() const { return states_; }

    /// Largest entry magnitude, (s-1)/2.
    int max_magnitude() const { return (states_ - 1) / 2; }

    bool contains(int value) const
    {
        return value >= -max_magnitude() && value <= max_magnitude();
    }

    /// All alphabet values in ascending order.
    std::vector<int> values() const;

    bool operator==(const AlphabetSize&) const = default;

private:
    int states_ = 3;
};

/// One element's code, or one run's outcome syndrome: a length-k sequence of
/// alphabet values, one per analysis.
using StateVector = std::vector<int>;

/// Elementwise negation. Self-inverse: invert(invert(v)) == v.
StateVector invert(const StateVector& v);

/// True iff all entries are equal. Constant vectors never identify anything
/// and are excluded from every codebook.
bool is_constant(const StateVector& v);

/// The preferred member of an antipodal pair {v, -v}: whichever has a
/// positive first nonzero entry. Throws ZeroVector for the all-zero vector,
/// which belongs to no pair.
StateVector canonical_representative(const StateVector& v);

/// All s^k vectors of length k, exactly once, in lexicographic order with the
/// alphabet ordered -(s-1)/2 < ... < (s-1)/2.
std::vector<StateVector> enumerate_vectors(AlphabetSize s, int k);

/// Canonical representatives of every non-constant vector, in lexicographic
/// order. Exactly (s^k - s)/2 of them; this count is the capacity n_k.
std::vector<StateVector> admissible_pairs(AlphabetSize s, int k);

/// Assignment of one state vector per element, labels 1..n.
///
/// Invariants of a well-formed codebook:
///   - codes pairwise distinct
///   - no code is the elementwise negation of another
///   - no code is constant
///   - if `balanced` is set, every analysis row sums to zero (for s = 3 this
///     is the same as equal +1/-1 counts, i.e. equal pan sizes)
struct Codebook {
    AlphabetSize s;
    int analyses = 0; // k
    std::vector<StateVector> codes;
    bool balanced = false;

    int elements() const { return static_cast<int>(codes.size()); }

    /// Code of the element with 1-based label `label`.
    const StateVector& code(int label) const;

    /// Content equality. The `balanced` flag records how the codebook was
    /// constructed, not what it contains, so it does not participate.
    bool operator==(const Codebook& other) const
    {
        return s == other.s && analyses == other.analyses && codes == other.codes;
    }
};

/// One invariant violation found by validate_codebook.
struct Defect {
    enum class Kind {
        LengthMismatch, // code length != k
        EntryOutOfRange,
        ConstantVector,
        DuplicateCode,   // element_a, element_b
        AntipodalClash,  // element_a, element_b
        RowImbalance,    // row
    };

    Kind kind;
    int element_a = 0; // 1-based label, 0 when not applicable
    int element_b = 0;
    int row = 0; // 1-based analysis index, RowImbalance only

    std::string describe() const;
};

/// Violations are data, not faults: an invalid codebook yields a non-empty
/// defect list, never an exception.
struct ValidationReport {
    std::vector<Defect> defects;

    bool ok() const { return defects.empty(); }
    std::string describe() const;
};

/// Check every codebook invariant. Row balance is checked only when the
/// codebook claims it (cb.balanced set).
ValidationReport validate_codebook(const Codebook& cb);

/// Construct a codebook for n elements with k analyses over alphabet s.
///
/// Unbalanced: the first n admissible pairs in canonical order. Balanced:
/// deterministic backtracking over admissible pairs in canonical
/// lexicographic order, branching on include/exclude (when n is below
/// capacity) and on keep/flip sign, pruning branches whose partial row sums
/// cannot reach zero given the remaining vectors' entry bounds. The search is
/// complete: PlanInfeasible is a proof of exhaustion, not a timeout.
///
/// Throws CapacityExceeded when n > (s^k - s)/2, PlanInfeasible when balanced
/// is set and no zero-sum assignment exists, InvalidParameter for bad n or k.
Codebook build_codebook(int n, int k, AlphabetSize s, bool balanced);

} // namespace anomaly
