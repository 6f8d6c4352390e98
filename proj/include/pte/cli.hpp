#pragma once

#include "pte/json_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pte::cli {

enum ExitCode { Success = 0, Negative = 1, Invalid = 2 };

struct CommandResult {
    int exit_code = Success;
    Json report;              // JSON document for stdout
    bool json_lines = false;  // report is an array printed one compact element per line
    std::string text;         // plain-text stdout (help) instead of a report
    std::string diagnostics;  // stderr
    std::string out_path;     // --out
};

/// Parses and runs one command (arguments without the program name). Never
/// throws; all failures become exit codes plus diagnostics.
CommandResult run(const std::vector<std::string>& args);

/// The stdout bytes for a result.
std::string render(const CommandResult& result);

/// run() plus output: stdout (or --out FILE) and stderr. Returns the exit code.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pte::cli
