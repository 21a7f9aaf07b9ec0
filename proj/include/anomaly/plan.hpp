// plan.hpp -- executable weighing/measurement plans derived from codebooks,
// their rendering, and the plan file format

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "anomaly/codebook.hpp"

namespace anomaly {

/// One use of the measuring instrument: which elements participate, grouped
/// by the alphabet value their code assigns them. Value 0 means "sits out"
/// and never appears as a key. For s = 3, value -1 is the left pan and +1
/// the right pan.
struct Analysis {
    int index = 0; // 1-based
    std::map<int, std::set<int>> groups;

    bool operator==(const Analysis&) const = default;
};

/// A codebook together with its per-analysis group assignments, ready to
/// execute on a physical instrument.
struct WeighingPlan {
    Codebook codebook;
    std::vector<Analysis> analyses;
    std::optional<std::string> title;

    bool operator==(const WeighingPlan& other) const
    {
        return codebook == other.codebook && analyses == other.analyses &&
               title == other.title;
    }
};

/// Derive the group assignments: element e joins analysis j's group for
/// value v exactly when code(e)[j] = v and v != 0.
WeighingPlan plan_from_codebook(Codebook cb, std::optional<std::string> title = {});

/// Inverse of plan_from_codebook: rebuild the codebook from the groups.
/// Elements absent from an analysis get entry 0. Throws ConflictingAssignment
/// if an element appears under two values in one analysis.
Codebook codebook_from_plan(const WeighingPlan& p);

/// The standard 12-element, 3-weighing balanced plan for the classic
/// counterfeit-coin puzzle. Stable across versions, byte for byte.
WeighingPlan classic_plan_12();

/// One line for a single analysis, e.g.
/// "Analysis 1: LEFT 9 10 11 12 | RIGHT 5 6 7 8". Groups appear in
/// ascending value order with labels ascending; alphabets beyond 3 states
/// use signed value headers ("-2 -1 +1 +2") instead of LEFT/RIGHT.
std::string render_analysis(const Analysis& a, AlphabetSize s);

/// All analyses, one line each, newline-terminated.
std::string render_plan(const WeighingPlan& p);

/// Canonical plan file, format tag "anomaly-plan/1": a JSON document with
/// fields in the fixed order format, states, analyses, elements, codes,
/// title (title omitted when absent). codes[i] holds the vector of element
/// label i+1. Equal plans serialize to identical bytes.
std::string serialize_plan(const WeighingPlan& p);

/// Parse and fully validate a plan file. Structural problems (bad tag,
/// malformed JSON, wrong types, unknown keys) raise FormatError; codebook
/// invariant violations raise InvariantError naming each defect. The
/// balanced flag is not stored; it is re-derived from the row sums.
WeighingPlan deserialize_plan(std::string_view bytes);

/// Parse with structural checks only, returning the plan together with
/// whatever invariant violations it carries. This is how `verify` loads
/// suspect files: a tampered codebook should be diagnosed, not rejected.
struct LoadedPlan {
    WeighingPlan plan;
    ValidationReport validation;
};
LoadedPlan deserialize_plan_lenient(std::string_view bytes);

} // namespace anomaly
