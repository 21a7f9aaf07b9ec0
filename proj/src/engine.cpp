// engine.cpp -- simulation with the dual scale-model route, decoding, and
// exhaustive verification

#include "anomaly/engine.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace anomaly {

namespace {

std::string format_outcome(const Outcome& o)
{
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < o.size(); ++i)
        os << (i ? "," : "") << o[i];
    os << ')';
    return os.str();
}

// State of the scale under the weight model. Equal pans compare raw weight
// sums; unequal pans (possible only in unbalanced plans) are tared against
// their nominal all-genuine weight, which is the same comparison when the
// sizes match.
int scale_state(const Analysis& a, const Hypothesis& h, const ScaleModel& model)
{
    std::int64_t left_dev = 0, right_dev = 0;
    const std::int64_t shift =
        h.polarity == Polarity::Positive ? model.delta : -model.delta;
    if (h.kind == Hypothesis::Kind::Anomaly) {
        if (auto it = a.groups.find(-1); it != a.groups.end() && it->second.count(h.element))
            left_dev = shift;
        if (auto it = a.groups.find(1); it != a.groups.end() && it->second.count(h.element))
            right_dev = shift;
    }
    if (left_dev > right_dev)
        return -1; // left pan heavier
    if (right_dev > left_dev)
        return 1;
    return 0;
}

} // namespace

Outcome simulate(const WeighingPlan& p, const Hypothesis& h, const ScaleModel& model)
{
    const Codebook& cb = p.codebook;
    if (h.kind == Hypothesis::Kind::Anomaly &&
        (h.element < 1 || h.element > cb.elements()))
        throw InvalidHypothesis("element " + std::to_string(h.element) + " outside 1.." +
                                std::to_string(cb.elements()));

    Outcome outcome(static_cast<size_t>(cb.analyses), 0);
    if (h.kind == Hypothesis::Kind::Anomaly) {
        const int sign = h.polarity == Polarity::Positive ? 1 : -1;
        const StateVector& code = cb.code(h.element);
        for (int j = 0; j < cb.analyses; ++j)
            outcome[static_cast<size_t>(j)] = sign * code[static_cast<size_t>(j)];
    }

    // The pan-sum route only speaks the 3-state language; outcomes outside
    // it (possible when verifying a tampered codebook) stay algebraic-only.
    const bool model_applies =
        cb.s.states() == 3 &&
        std::all_of(outcome.begin(), outcome.end(), [&](int x) { return cb.s.contains(x); });
    if (model_applies) {
        for (const Analysis& a : p.analyses) {
            const int physical = scale_state(a, h, model);
            if (physical != outcome[static_cast<size_t>(a.index - 1)])
                throw std::logic_error(
                    "scale model disagrees with the algebraic outcome in analysis " +
                    std::to_string(a.index));
        }
    }

    return outcome;
}

std::optional<Verdict> try_decode(const WeighingPlan& p, const Outcome& o)
{
    const Codebook& cb = p.codebook;
    if (std::all_of(o.begin(), o.end(), [](int x) { return x == 0; }))
        return Verdict::none();

    std::optional<Verdict> match;
    for (int e = 1; e <= cb.elements(); ++e) {
        const StateVector& code = cb.code(e);
        std::optional<Polarity> polarity;
        if (o == code)
            polarity = Polarity::Positive;
        else if (o == invert(code))
            polarity = Polarity::Negative;
        if (!polarity)
            continue;
        if (match)
            return std::nullopt; // ambiguous: two codes claim this syndrome
        match = Verdict::anomaly(e, *polarity);
    }
    return match ? std::optional<Verdict>(*match) : std::nullopt;
}

Verdict decode(const WeighingPlan& p, const Outcome& o)
{
    const Codebook& cb = p.codebook;
    if (static_cast<int>(o.size()) != cb.analyses)
        throw InvalidParameter("outcome has " + std::to_string(o.size()) +
                               " states, expected " + std::to_string(cb.analyses));
    for (int x : o)
        if (!cb.s.contains(x))
            throw InvalidParameter("outcome state " + std::to_string(x) +
                                   " outside the alphabet");

    if (std::optional<Verdict> v = try_decode(p, o))
        return *v;
    throw InconsistentOutcome(
        "outcome " + format_outcome(o) +
        " matches no element; the run saw multiple anomalies, a mis-executed "
        "analysis, or a corrupted plan");
}

VerificationReport verify_exhaustive(const WeighingPlan& p)
{
    VerificationReport report;

    auto check = [&](const Hypothesis& h) {
        ++report.hypotheses_checked;
        const Outcome outcome = simulate(p, h);
        const std::optional<Verdict> verdict = try_decode(p, outcome);
        if (!verdict || !(*verdict == h))
            report.failures.push_back({h, outcome, verdict});
    };

    check(Hypothesis::none());
    for (int e = 1; e <= p.codebook.elements(); ++e) {
        check(Hypothesis::anomaly(e, Polarity::Positive));
        check(Hypothesis::anomaly(e, Polarity::Negative));
    }
    return report;
}

} // namespace anomaly
