#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqgate::cli {

struct CommandOptions {
    std::string verb; // eval | sweep | optimize | compare | oracle-check
    std::vector<std::string> schemes;
    std::string preset;
    std::string config_path;
    std::vector<std::string> sets; // raw key=value overrides
    std::string output_path;       // empty: stdout
    std::string format = "csv";    // csv | json
    bool raw_angular = false;
    // sweep / compare axes (user units, converted per the field table)
    std::string vs;
    double from = 0.0, to = 0.0;
    int points = 0;
    bool log_scale = false;
    std::string vs2;
    double from2 = 0.0, to2 = 0.0;
    int points2 = 0;
    bool log2_scale = false;
    std::string grid = "coarse"; // oracle-check grid
};

// Runs the command, writing data to `out` and diagnostics to `err`.
// Returns the process exit code: 0 success, 1 config/validation error,
// 2 numerical failure.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

} // namespace tqgate::cli
