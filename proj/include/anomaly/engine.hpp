// engine.hpp -- single-anomaly simulation, syndrome decoding, and the
// exhaustive plan verifier

#pragma once

#include <cstdint>
#include <optional>

#include "anomaly/plan.hpp"

namespace anomaly {

/// Direction of the anomaly: positive shifts the element's state up (a
/// heavier coin), negative shifts it down (a lighter coin).
enum class Polarity { Positive, Negative };

/// What is (assumed to be, or decoded to be) wrong with the system: nothing,
/// or exactly one element with a polarity.
struct Hypothesis {
    enum class Kind { NoAnomaly, Anomaly };

    Kind kind = Kind::NoAnomaly;
    int element = 0; // 1-based label, Anomaly only
    Polarity polarity = Polarity::Positive;

    static Hypothesis none() { return {}; }
    static Hypothesis anomaly(int element, Polarity polarity)
    {
        return {Kind::Anomaly, element, polarity};
    }

    bool operator==(const Hypothesis& other) const
    {
        if (kind != other.kind)
            return false;
        return kind == Kind::NoAnomaly ||
               (element == other.element && polarity == other.polarity);
    }
};

/// The decoder's output has the same shape as the hypothesis it recovers.
using Verdict = Hypothesis;

/// The k recorded instrument states of one full run. For s = 3: -1 means the
/// left pan was heavier, 0 balance, +1 the right pan heavier.
using Outcome = StateVector;

/// Physical scale parameters for the 3-state cross-check: every genuine
/// element weighs genuine_weight units, the anomalous one gains or loses
/// delta.
struct ScaleModel {
    std::int64_t genuine_weight = 100;
    std::int64_t delta = 1;

    ScaleModel() = default;
    ScaleModel(std::int64_t genuine, std::int64_t d) : genuine_weight(genuine), delta(d)
    {
        if (d < 1)
            throw InvalidParameter("delta must be >= 1");
        if (genuine <= d)
            throw InvalidParameter("genuine_weight must exceed delta so weights stay positive");
    }
};

/// Outcome of running every analysis under hypothesis h: polarity-signed
/// code of the anomalous element, or all zeros for NoAnomaly.
///
/// For s = 3 each outcome is additionally recomputed from pan weight sums
/// under the scale model; disagreement between the two routes is a defect
/// and raises std::logic_error.
Outcome simulate(const WeighingPlan& p, const Hypothesis& h, const ScaleModel& model = {});

/// Decode an outcome, or empty when it is nonzero and matches no code, no
/// inverted code, or more than one (an ambiguous plan).
std::optional<Verdict> try_decode(const WeighingPlan& p, const Outcome& o);

/// Decode an outcome to a verdict. All-zero means NoAnomaly; a match with
/// code(x) convicts element x with positive polarity, a match with the
/// inverted code with negative polarity. Throws InconsistentOutcome when no
/// unique match exists.
Verdict decode(const WeighingPlan& p, const Outcome& o);

/// One hypothesis the plan failed to identify.
struct VerificationFailure {
    Hypothesis hypothesis;
    Outcome outcome;
    std::optional<Verdict> verdict; // empty when decoding was inconsistent
};

struct VerificationReport {
    int hypotheses_checked = 0;
    std::vector<VerificationFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Round-trip every hypothesis (NoAnomaly plus both polarities of every
/// element, 2n+1 in all) through simulate and decode. Failures are data;
/// they are listed in (element, polarity) order with NoAnomaly first.
VerificationReport verify_exhaustive(const WeighingPlan& p);

} // namespace anomaly
