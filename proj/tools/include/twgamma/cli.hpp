#pragma once

// Command logic behind the twgamma executable: job parsing, report structs
// with JSON round-trip, text rendering and the regression fixture suite.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twgamma/gamma_filtration.hpp"
#include "twgamma/k0_ring.hpp"
#include "twgamma/witness.hpp"

namespace twgamma::cli {

using json = nlohmann::json;

enum ExitCode : int { kSuccess = 0, kUsage = 1, kCheckFailed = 2, kNotApplicable = 3 };

struct JobSpec {
    std::string group;
    std::string isogeny = "sc";
    /// Keys are coordinate tuples of A such as "(1,0)".
    std::map<std::string, std::int64_t> indices;
    int max_degree = 5;
    bool json_output = false;

    friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Parses "(1,0)=4,(0,1)=4"; commas inside parentheses belong to the key.
std::map<std::string, std::int64_t> parse_index_list(const std::string& text);
JobSpec load_job(const std::string& path);

/// Builds the assignment, rejecting unknown keys; nonzero elements without an
/// explicit value read as 1 and produce a warning.
TitsIndexAssignment make_assignment(const K0Ring& ring, const std::map<std::string, std::int64_t>& indices,
                                    std::vector<std::string>& warnings);

struct RingReport {
    std::string group;
    std::string isogeny;
    std::vector<std::int64_t> character_group;   ///< invariant factors of A
    std::vector<std::string> omega_bars;
    std::vector<Integer> dims;
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;
    std::vector<std::string> generators;
    std::vector<std::string> relations;

    friend bool operator==(const RingReport&, const RingReport&) = default;
};

struct PieceReport {
    int degree = 0;
    std::vector<IntVector> generators;            ///< reduced coefficient vectors
    std::vector<std::string> generator_text;
    std::size_t free_rank = 0;                    ///< of the piece modulo I
    std::vector<Integer> invariant_factors;

    friend bool operator==(const PieceReport&, const PieceReport&) = default;
};

struct GradedReport {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;

    friend bool operator==(const GradedReport&, const GradedReport&) = default;
};

struct FiltrationReport {
    std::string group;
    std::string isogeny;
    std::string mode;                             ///< "twisted" or "split"
    int max_degree = 0;
    std::map<std::string, std::int64_t> indices;  ///< every element of A
    std::vector<std::string> classes;
    std::vector<PieceReport> pieces;
    std::vector<GradedReport> graded;
    unsigned sweeps = 0;
    std::vector<std::string> warnings;

    friend bool operator==(const FiltrationReport&, const FiltrationReport&) = default;
};

struct FixtureOutcome {
    std::string id;
    bool passed = false;
    std::string detail;

    friend bool operator==(const FixtureOutcome&, const FixtureOutcome&) = default;
};

struct ExamplesReport {
    std::vector<FixtureOutcome> fixtures;
    std::size_t failures() const;

    friend bool operator==(const ExamplesReport&, const ExamplesReport&) = default;
};

RingReport make_ring_report(const K0Ring& ring);
FiltrationReport make_filtration_report(const FiltrationResult& result, const std::string& mode);

json to_json(const JobSpec& j);
json to_json(const RingReport& r);
json to_json(const FiltrationReport& r);
json to_json(const WitnessReport& r);
json to_json(const ExamplesReport& r);

JobSpec job_from_json(const json& j);
RingReport ring_report_from_json(const json& j);
FiltrationReport filtration_report_from_json(const json& j);
WitnessReport witness_report_from_json(const json& j);
ExamplesReport examples_report_from_json(const json& j);

std::string render_text(const RingReport& r);
std::string render_text(const FiltrationReport& r);
std::string render_text(const WitnessReport& r);
std::string render_text(const ExamplesReport& r);

/// Fault injection for the fixture suite.
struct FixtureOptions {
    /// Rewrites the fundamental dimensions of a ring before it is built.
    std::function<void(const CharacterQuotient&, std::vector<Integer>&)> mutate_dims;
    BinomialFn choose = binomial;
};

K0RingPtr build_ring(const std::string& group, const std::string& isogeny, const FixtureOptions& opt = {});
ExamplesReport run_examples(const FixtureOptions& opt = {});

struct CommandResult {
    int exit_code = kSuccess;
    std::string output;   ///< for stdout
    std::string error;    ///< for stderr
};

CommandResult cmd_ring(const JobSpec& job);
CommandResult cmd_filtration(const JobSpec& job, bool split = false, bool ideal = false);
CommandResult cmd_witness_hspin(int n, int i_A, bool json_output);
CommandResult cmd_witness_e7(int i_A, const std::optional<IntMatrix>& coefficients, bool json_output);
CommandResult cmd_examples(bool json_output);

/// Runs the full command line; used by main() and by the CLI tests.
CommandResult run(int argc, const char* const* argv);

}  // namespace twgamma::cli
