#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace antiramsey::cli {

enum class Subcommand { Formula, Construct, Verify, SearchAR, SearchEx, Representing };

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kPatternFound = 1,
    kUsageError = 2,
    kBudgetExhausted = 3,
};

struct RunConfig {
    Subcommand subcommand = Subcommand::Formula;

    // formula
    std::string formulaName;
    std::optional<std::int64_t> n;
    std::optional<int> k;
    std::optional<int> t;
    std::optional<std::string> forestSpec;

    // construct
    std::string family;
    std::string arrangement = "single-edge";
    bool verify = true;
    std::optional<std::string> outPath;

    // verify / representing
    std::optional<std::string> coloringPath;
    std::optional<std::string> graphPath;
    std::uint64_t cap = 1000;
    std::optional<std::uint64_t> seed;
    bool listMembers = false;

    // search-ar / search-ex
    std::uint64_t maxNodes = std::uint64_t{1} << 62;
    std::int64_t maxMillis = 24LL * 3600 * 1000;
    int workers = 1;
    int splitDepth = 4;
    std::optional<std::string> witnessOut;
};

/// Default budget fields, overridable by ANTIRAMSEY_MAX_NODES,
/// ANTIRAMSEY_MAX_MILLIS and ANTIRAMSEY_WORKERS.
RunConfig defaultConfig();

/// Dispatches one subcommand, printing a JSON document to `out`.
int run(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name) and runs. Usage errors print a
/// JSON error object and return kUsageError.
int main(const std::vector<std::string>& args, std::ostream& out);

}  // namespace antiramsey::cli
