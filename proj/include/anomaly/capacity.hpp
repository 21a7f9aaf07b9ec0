// capacity.hpp -- how many elements k analyses can distinguish, computed
// three independent ways so the routes can be cross-checked

#pragma once

#include <cstdint>
#include <optional>

#include "anomaly/codebook.hpp"

namespace anomaly {

/// n_k from the closed form (s^k - s)/2. Zero when k = 1: a single analysis
/// admits only constant vectors. All arithmetic is overflow-checked; Overflow
/// is thrown rather than wrapping.
std::int64_t capacity_closed_form(AlphabetSize s, int k);

/// n_{k+1} from n_k by adding the new analysis's contribution:
/// n_{k+1} = n_k + s^k (s-1)/2. For s = 3 this is n_{k+1} = 3^k + n_k.
std::int64_t capacity_step_additive(AlphabetSize s, int k, std::int64_t n_k);

/// n_{k+1} from n_k multiplicatively: n_{k+1} = s (n_k + (s-1)/2).
/// For s = 3 this is n_{k+1} = 3 (n_k + 1).
std::int64_t capacity_step_multiplicative(AlphabetSize s, std::int64_t n_k);

/// n_k via every route at once. The recurrences are iterated from n_1 = 0.
/// `enumerated` is the admissible-pair count and is only computed when
/// s^k stays within `enumeration_bound`; otherwise it is left empty.
struct CapacityReport {
    std::int64_t closed_form = 0;
    std::int64_t recurrence_additive = 0;
    std::int64_t recurrence_multiplicative = 0;
    std::optional<std::int64_t> enumerated;

    /// True when every computed field agrees.
    bool consistent() const
    {
        return closed_form == recurrence_additive &&
               closed_form == recurrence_multiplicative &&
               (!enumerated || *enumerated == closed_form);
    }
};

CapacityReport capacity_cross_check(AlphabetSize s, int k,
                                    std::int64_t enumeration_bound = 1'000'000);

/// Result of the brute-force feasibility search.
struct FeasibilityResult {
    bool feasible = false;
    std::optional<Codebook> witness;       // present iff feasible
    std::uint64_t assignments_examined = 0; // leaves visited before deciding

    /// When infeasible, the whole subset/sign space was exhausted; the
    /// result is a proof, not a sample.
};

/// Exhaustively search all subsets of n admissible pairs and all sign
/// assignments for a valid (optionally balanced) codebook. Deliberately
/// unpruned beyond subset counting: this is the independent oracle that the
/// constructive search is checked against. Guarded to s^k <= 3^5; above that
/// the search space is out of reach and ScaleGuard is thrown.
FeasibilityResult feasibility_oracle(AlphabetSize s, int k, int n, bool balanced);

} // namespace anomaly
