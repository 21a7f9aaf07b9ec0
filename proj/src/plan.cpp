// plan.cpp -- plan derivation, rendering, and the anomaly-plan/1 file format

#include "anomaly/plan.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

namespace anomaly {

WeighingPlan plan_from_codebook(Codebook cb, std::optional<std::string> title)
{
    WeighingPlan plan;
    plan.analyses.reserve(static_cast<size_t>(cb.analyses));
    for (int j = 1; j <= cb.analyses; ++j) {
        Analysis a;
        a.index = j;
        for (int e = 1; e <= cb.elements(); ++e) {
            const int value = cb.code(e)[static_cast<size_t>(j - 1)];
            if (value != 0)
                a.groups[value].insert(e);
        }
        plan.analyses.push_back(std::move(a));
    }
    plan.codebook = std::move(cb);
    plan.title = std::move(title);
    return plan;
}

Codebook codebook_from_plan(const WeighingPlan& p)
{
    const int n = p.codebook.elements();
    const int k = p.codebook.analyses;

    Codebook cb{p.codebook.s, k, {}, p.codebook.balanced};
    cb.codes.assign(static_cast<size_t>(n), StateVector(static_cast<size_t>(k), 0));

    for (const Analysis& a : p.analyses) {
        if (a.index < 1 || a.index > k)
            throw InvalidParameter("analysis index " + std::to_string(a.index) +
                                   " outside 1.." + std::to_string(k));
        for (const auto& [value, labels] : a.groups) {
            if (value == 0)
                throw InvalidParameter("analysis " + std::to_string(a.index) +
                                       " assigns elements to value 0");
            for (int e : labels) {
                if (e < 1 || e > n)
                    throw InvalidParameter("analysis " + std::to_string(a.index) +
                                           " references unknown element " + std::to_string(e));
                int& slot = cb.codes[static_cast<size_t>(e - 1)][static_cast<size_t>(a.index - 1)];
                if (slot != 0)
                    throw ConflictingAssignment(
                        "element " + std::to_string(e) + " appears under two values in analysis " +
                        std::to_string(a.index));
                slot = value;
            }
        }
    }
    return cb;
}

WeighingPlan classic_plan_12()
{
    static constexpr std::array<std::array<int, 3>, 12> kCodes = {{
        {{0, 0, -1}},
        {{0, -1, 0}},
        {{0, -1, -1}},
        {{0, -1, 1}},
        {{1, 0, 0}},
        {{1, 0, 1}},
        {{1, 0, -1}},
        {{1, 1, 0}},
        {{-1, -1, 1}},
        {{-1, 1, 0}},
        {{-1, 1, -1}},
        {{-1, 1, 1}},
    }};

    Codebook cb{AlphabetSize(3), 3, {}, true};
    cb.codes.reserve(kCodes.size());
    for (const auto& row : kCodes)
        cb.codes.emplace_back(row.begin(), row.end());
    return plan_from_codebook(std::move(cb), "12-coin problem");
}

std::string render_analysis(const Analysis& a, AlphabetSize s)
{
    std::ostringstream os;
    os << "Analysis " << a.index << ":";
    bool first = true;
    for (int value : s.values()) {
        if (value == 0)
            continue;
        if (!first)
            os << " |";
        first = false;
        if (s.states() == 3)
            os << (value < 0 ? " LEFT" : " RIGHT");
        else
            os << ' ' << (value > 0 ? "+" : "") << value;
        if (auto it = a.groups.find(value); it != a.groups.end())
            for (int e : it->second)
                os << ' ' << e;
    }
    return os.str();
}

std::string render_plan(const WeighingPlan& p)
{
    std::string out;
    for (const Analysis& a : p.analyses) {
        out += render_analysis(a, p.codebook.s);
        out += '\n';
    }
    return out;
}

namespace {

constexpr const char* kFormatTag = "anomaly-plan/1";

bool rows_all_zero_sum(const Codebook& cb)
{
    if (cb.elements() == 0)
        return false;
    for (int j = 0; j < cb.analyses; ++j) {
        long long sum = 0;
        for (const StateVector& v : cb.codes) {
            if (static_cast<int>(v.size()) != cb.analyses)
                return false;
            sum += v[static_cast<size_t>(j)];
        }
        if (sum != 0)
            return false;
    }
    return true;
}

LoadedPlan parse_plan(std::string_view bytes)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("plan file is not well-formed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("plan file must be a JSON object");

    for (const auto& [key, _] : doc.items())
        if (key != "format" && key != "states" && key != "analyses" && key != "elements" &&
            key != "codes" && key != "title")
            throw FormatError("unknown field \"" + key + "\"");

    if (!doc.contains("format") || !doc["format"].is_string())
        throw FormatError("missing format tag");
    if (doc["format"].get<std::string>() != kFormatTag)
        throw FormatError("unsupported format tag \"" + doc["format"].get<std::string>() +
                          "\" (expected \"" + kFormatTag + "\")");

    for (const char* field : {"states", "analyses", "elements"})
        if (!doc.contains(field) || !doc[field].is_number_integer())
            throw FormatError(std::string("field \"") + field + "\" must be an integer");
    if (!doc.contains("codes") || !doc["codes"].is_array())
        throw FormatError("field \"codes\" must be an array");

    const int states = doc["states"].get<int>();
    const int k = doc["analyses"].get<int>();
    const int n = doc["elements"].get<int>();
    if (states < 3 || states % 2 == 0)
        throw InvariantError("states must be an odd integer >= 3, got " +
                             std::to_string(states));
    if (k < 1)
        throw InvariantError("analyses must be >= 1, got " + std::to_string(k));
    if (n < 0)
        throw InvariantError("elements must be >= 0, got " + std::to_string(n));
    if (static_cast<int>(doc["codes"].size()) != n)
        throw InvariantError("codes array has " + std::to_string(doc["codes"].size()) +
                             " rows but elements is " + std::to_string(n));

    Codebook cb{AlphabetSize(states), k, {}, false};
    cb.codes.reserve(static_cast<size_t>(n));
    for (const auto& row : doc["codes"]) {
        if (!row.is_array())
            throw FormatError("every code must be an array of integers");
        StateVector v;
        v.reserve(row.size());
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                throw FormatError("every code entry must be an integer");
            v.push_back(entry.get<int>());
        }
        cb.codes.push_back(std::move(v));
    }

    LoadedPlan loaded;
    loaded.validation = validate_codebook(cb);
    cb.balanced = rows_all_zero_sum(cb);

    std::optional<std::string> title;
    if (doc.contains("title")) {
        if (!doc["title"].is_string())
            throw FormatError("field \"title\" must be a string");
        title = doc["title"].get<std::string>();
    }

    loaded.plan = plan_from_codebook(std::move(cb), std::move(title));
    return loaded;
}

} // namespace

std::string serialize_plan(const WeighingPlan& p)
{
    nlohmann::ordered_json doc;
    doc["format"] = kFormatTag;
    doc["states"] = p.codebook.s.states();
    doc["analyses"] = p.codebook.analyses;
    doc["elements"] = p.codebook.elements();
    doc["codes"] = p.codebook.codes;
    if (p.title)
        doc["title"] = *p.title;
    return doc.dump(2) + "\n";
}

WeighingPlan deserialize_plan(std::string_view bytes)
{
    LoadedPlan loaded = parse_plan(bytes);
    if (!loaded.validation.ok())
        throw InvariantError("plan violates codebook invariants: " +
                             loaded.validation.describe());
    return std::move(loaded.plan);
}

LoadedPlan deserialize_plan_lenient(std::string_view bytes)
{
    return parse_plan(bytes);
}

} // namespace anomaly
