#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "tcover/classify.hpp"
#include "tcover/graph.hpp"

namespace tcover::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2, kResourceAbort = 3 };

/// Bad flags, malformed graph specs or reports that fail the schema.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class GensMode { BruteForce, ClosedForm, Check };

struct RunConfig {
    std::string command;
    /// graph6 | path:n | cycle:n | star:n | complete:n | file:PATH
    std::string graph;
    int t = 0;
    /// 0 means t.
    int s_max = 0;
    int entry_bound = 2;
    /// Comma-separated weight vector for `lp`; empty means all ones.
    std::string alpha;
    GensMode gens_mode = GensMode::BruteForce;

    std::size_t generator_cap = kDefaultGeneratorCap;
    std::uint64_t alpha_cap = 50'000'000;

    // verify-theorem
    int n_max = 0;
    int t_min = 3;
    int t_max = 0;
    int family_n_max = 0;
    int family_t_max = 0;
    bool dedup = true;

    /// `report`: harness report to validate and re-emit.
    std::string input;
    /// Empty means stdout.
    std::string output;
    int threads = 1;
    bool pretty = false;
};

/// Reads TCOVER_GENERATOR_CAP and TCOVER_ALPHA_CAP into `config`. Throws UsageError on
/// values that are not positive integers.
void apply_env_caps(RunConfig& config);

/// Throws UsageError when a field is out of range for the command.
void validate(const RunConfig& config);

Graph parse_graph_spec(const std::string& spec);

Json report_to_json(const HarnessReport& report);
/// Strict inverse of report_to_json(); throws UsageError on any schema violation.
HarnessReport report_from_json(const Json& j);

/// Table rendering of a command's JSON output.
std::string pretty(const Json& j);

/// Dispatches the command, writes its JSON report and returns the exit code.
/// Errors go to `err` as one line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tcover::cli
