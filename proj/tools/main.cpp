// main.cpp -- the anomaly command line tool: generate, solve, simulate,
// verify, and size non-adaptive single-anomaly identification plans

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"

#include "anomaly/capacity.hpp"
#include "anomaly/engine.hpp"
#include "anomaly/plan.hpp"

namespace {

using namespace anomaly;

// Stable exit contract: 0 success, 1 verification failures or a verdict
// mismatch, 2 usage/input error, 3 inconsistent outcome.
constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open plan file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << bytes))
        throw FormatError("cannot write plan file: " + path);
}

std::string polarity_word(Polarity p, AlphabetSize s)
{
    if (s.states() == 3)
        return p == Polarity::Positive ? "heavier" : "lighter";
    return p == Polarity::Positive ? "positive" : "negative";
}

std::string verdict_text(const Verdict& v, AlphabetSize s)
{
    if (v.kind == Verdict::Kind::NoAnomaly)
        return "No anomaly detected";
    return "Element " + std::to_string(v.element) + " is ANOMALOUS: " +
           polarity_word(v.polarity, s);
}

std::string outcome_text(const Outcome& o)
{
    std::string out;
    for (size_t i = 0; i < o.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(o[i]);
    }
    return out;
}

struct PlanSource {
    std::string file;
    bool builtin_12 = false;

    void attach(CLI::App* cmd)
    {
        auto* pos = cmd->add_option("plan", file, "plan file (anomaly-plan/1)");
        auto* builtin = cmd->add_flag("--paper-12", builtin_12,
                                      "use the built-in 12-coin, 3-weighing plan");
        pos->excludes(builtin);
        builtin->excludes(pos);
    }

    WeighingPlan load() const
    {
        if (builtin_12)
            return classic_plan_12();
        if (file.empty())
            throw FormatError("no plan given: pass a plan file or --paper-12");
        return deserialize_plan(read_file(file));
    }

    LoadedPlan load_lenient() const
    {
        if (builtin_12)
            return {classic_plan_12(), {}};
        if (file.empty())
            throw FormatError("no plan given: pass a plan file or --paper-12");
        return deserialize_plan_lenient(read_file(file));
    }
};

int smallest_k_for(AlphabetSize s, int n)
{
    for (int k = 1;; ++k)
        if (capacity_closed_form(s, k) >= n)
            return k;
}

int run_plan(int n, std::optional<int> k, int states, bool unbalanced,
             const std::string& out, const std::string& title)
{
    const AlphabetSize s(states);
    const int analyses = k ? *k : smallest_k_for(s, n);
    Codebook cb = build_codebook(n, analyses, s, !unbalanced);
    WeighingPlan plan = plan_from_codebook(
        std::move(cb), title.empty() ? std::nullopt : std::optional<std::string>(title));
    if (!out.empty())
        write_file(out, serialize_plan(plan));
    std::cout << render_plan(plan);
    return kExitOk;
}

std::optional<int> parse_outcome_token(const std::string& token, AlphabetSize s)
{
    if (s.states() == 3) {
        if (token == "L" || token == "l")
            return -1;
        if (token == "B" || token == "b")
            return 0;
        if (token == "R" || token == "r")
            return 1;
    }
    try {
        size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used == token.size() && s.contains(value))
            return value;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

int run_solve(const PlanSource& source)
{
    const WeighingPlan plan = source.load();
    const AlphabetSize s = plan.codebook.s;
    const bool interactive = isatty(fileno(stdin)) != 0;

    std::cout << render_plan(plan) << std::flush;

    Outcome outcome;
    for (const Analysis& a : plan.analyses) {
        for (;;) {
            if (interactive) {
                if (s.states() == 3)
                    std::cout << "Analysis " << a.index << " outcome [L/B/R]: " << std::flush;
                else
                    std::cout << "Analysis " << a.index << " outcome [-" << s.max_magnitude()
                              << ".." << s.max_magnitude() << "]: " << std::flush;
            }
            std::string token;
            if (!std::getline(std::cin, token)) {
                std::cerr << "error: input ended before all " << plan.codebook.analyses
                          << " outcomes were recorded\n";
                return kExitUsage;
            }
            if (std::optional<int> value = parse_outcome_token(token, s)) {
                outcome.push_back(*value);
                break;
            }
            if (!interactive) {
                std::cerr << "error: invalid outcome token \"" << token << "\"\n";
                return kExitUsage;
            }
            std::cout << "invalid token \"" << token << "\", try again\n";
        }
    }

    std::cout << verdict_text(decode(plan, outcome), s) << '\n';
    return kExitOk;
}

int run_simulate(const PlanSource& source, std::optional<int> element,
                 const std::string& polarity, bool none)
{
    const WeighingPlan plan = source.load();
    Hypothesis h = Hypothesis::none();
    if (!none) {
        if (!element)
            throw InvalidHypothesis("pass --anomaly <element> --polarity heavy|light, or --none");
        Polarity p;
        if (polarity == "heavy" || polarity == "positive")
            p = Polarity::Positive;
        else if (polarity == "light" || polarity == "negative")
            p = Polarity::Negative;
        else
            throw InvalidHypothesis("polarity must be heavy|light (or positive|negative)");
        h = Hypothesis::anomaly(*element, p);
    }

    const Outcome outcome = simulate(plan, h);
    std::cout << "Outcome: " << outcome_text(outcome) << '\n';
    const Verdict verdict = decode(plan, outcome);
    std::cout << verdict_text(verdict, plan.codebook.s) << '\n';
    return verdict == h ? kExitOk : kExitFailures;
}

int run_verify(const PlanSource& source)
{
    const LoadedPlan loaded = source.load_lenient();
    for (const Defect& d : loaded.validation.defects)
        std::cerr << "warning: " << d.describe() << '\n';

    const VerificationReport report = verify_exhaustive(loaded.plan);
    std::cout << report.hypotheses_checked << " hypotheses, " << report.failures.size()
              << " failures\n";
    const AlphabetSize s = loaded.plan.codebook.s;
    for (const VerificationFailure& f : report.failures) {
        std::cout << "  " << verdict_text(f.hypothesis, s) << " -> outcome "
                  << outcome_text(f.outcome) << " decoded as "
                  << (f.verdict ? verdict_text(*f.verdict, s) : std::string("INCONSISTENT"))
                  << '\n';
    }
    return report.ok() ? kExitOk : kExitFailures;
}

int run_capacity(int k, int states, bool cross_check)
{
    const AlphabetSize s(states);
    if (!cross_check) {
        std::cout << capacity_closed_form(s, k) << '\n';
        return kExitOk;
    }
    const CapacityReport report = capacity_cross_check(s, k);
    std::cout << "closed_form: " << report.closed_form << '\n'
              << "recurrence_additive: " << report.recurrence_additive << '\n'
              << "recurrence_multiplicative: " << report.recurrence_multiplicative << '\n';
    if (report.enumerated)
        std::cout << "enumerated: " << *report.enumerated << '\n';
    else
        std::cout << "enumerated: skipped (s^k above enumeration bound)\n";
    return kExitOk;
}

int run_oracle(int n, int k, int states, bool balanced)
{
    const FeasibilityResult result = feasibility_oracle(AlphabetSize(states), k, n, balanced);
    if (result.feasible) {
        std::cout << "feasible (" << result.assignments_examined << " assignments examined)\n";
        std::cout << render_plan(plan_from_codebook(*result.witness));
        return kExitOk;
    }
    std::cout << "infeasible (search exhausted after " << result.assignments_examined
              << " assignments)\n";
    return kExitFailures;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"non-adaptive single-anomaly identification plans "
                 "(the 12-coin puzzle and its N-state generalization)"};
    app.require_subcommand(1);

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "construct a plan and print it");
    int plan_n = 0;
    std::optional<int> plan_k;
    int plan_states = 3;
    bool plan_unbalanced = false;
    std::string plan_out, plan_title;
    plan_cmd->add_option("--elements,-n", plan_n, "number of elements")->required();
    plan_cmd->add_option("--analyses,-k", plan_k,
                         "number of analyses (default: smallest that fits)");
    plan_cmd->add_option("--states,-s", plan_states, "alphabet size (odd, >= 3)");
    plan_cmd->add_flag("--unbalanced", plan_unbalanced,
                       "drop the zero-row-sum (equal pans) requirement");
    plan_cmd->add_option("--out,-o", plan_out, "write the plan file here");
    plan_cmd->add_option("--title", plan_title, "title stored in the plan file");

    // solve
    auto* solve_cmd = app.add_subcommand(
        "solve", "print the analyses, read their outcomes, name the anomaly");
    PlanSource solve_src;
    solve_src.attach(solve_cmd);

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "inject a hypothesis and decode it back");
    PlanSource sim_src;
    sim_src.attach(sim_cmd);
    std::optional<int> sim_element;
    std::string sim_polarity;
    bool sim_none = false;
    auto* sim_anomaly = sim_cmd->add_option("--anomaly", sim_element, "anomalous element label");
    sim_cmd->add_option("--polarity", sim_polarity, "heavy|light")->needs(sim_anomaly);
    sim_cmd->add_flag("--none", sim_none, "simulate an all-genuine run")->excludes(sim_anomaly);

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "exhaustively round-trip every hypothesis");
    PlanSource verify_src;
    verify_src.attach(verify_cmd);

    // capacity
    auto* cap_cmd = app.add_subcommand("capacity", "maximum elements for k analyses");
    int cap_k = 0;
    int cap_states = 3;
    bool cap_cross = false;
    cap_cmd->add_option("--analyses,-k", cap_k, "number of analyses")->required();
    cap_cmd->add_option("--states,-s", cap_states, "alphabet size (odd, >= 3)");
    cap_cmd->add_flag("--cross-check", cap_cross,
                      "also compute via recurrences and enumeration");

    // oracle
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "brute-force feasibility search (small instances only)");
    int oracle_n = 0, oracle_k = 0, oracle_states = 3;
    bool oracle_balanced = false;
    oracle_cmd->add_option("--elements,-n", oracle_n, "number of elements")->required();
    oracle_cmd->add_option("--analyses,-k", oracle_k, "number of analyses")->required();
    oracle_cmd->add_option("--states,-s", oracle_states, "alphabet size (odd, >= 3)");
    oracle_cmd->add_flag("--balanced", oracle_balanced, "require zero row sums");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (plan_cmd->parsed())
            return run_plan(plan_n, plan_k, plan_states, plan_unbalanced, plan_out, plan_title);
        if (solve_cmd->parsed())
            return run_solve(solve_src);
        if (sim_cmd->parsed())
            return run_simulate(sim_src, sim_element, sim_polarity, sim_none);
        if (verify_cmd->parsed())
            return run_verify(verify_src);
        if (cap_cmd->parsed())
            return run_capacity(cap_k, cap_states, cap_cross);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_n, oracle_k, oracle_states, oracle_balanced);
    } catch (const InconsistentOutcome& e) {
        std::cout << "INCONSISTENT: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
