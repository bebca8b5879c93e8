#pragma once

#include "tricode/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tricode::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitInvalid = 2,
};

struct RunConfig {
    /// weights, verify, count, cosets or dump-tables.
    std::string command;
    int m = 0;
    std::string method = "closed";  // closed | rank | direct
    std::string suite = "all";      // moments | expsum | variety | codewords | dual | all
    std::string system;             // SystemId name, for count
    bool oracle = false;

    unsigned parallelism = 1;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 1;
    /// Empty means standard output.
    std::string output;
    std::string format = "json";  // json | csv (dump-tables also accepts text)
    /// Directory for rank-enumeration checkpoints (m >= 6 only); empty disables them.
    std::string checkpoint_dir = ".";
    bool progress = true;
};

/// Checkpoint file for a rank enumeration: <dir>/tricode-m<M>-<method>.checkpoint.json.
std::string checkpoint_path(const RunConfig& config);

struct ParseResult {
    std::optional<RunConfig> config;  // empty when parsing ended the run (help, error)
    int exit_code = kExitOk;
};

/// Command-line parsing. Help goes to `out`; parse errors go to `err` as one-line JSON.
ParseResult parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command. Results go to config.output (or `out`), progress and errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config);

/// One-line JSON error object, as written to standard error.
std::string error_json(const std::string& kind, const std::string& message);

} // namespace tricode::cli
