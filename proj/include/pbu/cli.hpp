#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace pbu::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode { ok = 0, parse_error = 2, inconclusive = 3, hypothesis_violated = 4 };

struct RunConfig {
    std::string command;            ///< homology, essential, symsquare, bu-solve, chords, corr
    std::string input;              ///< path; empty reads the command's built-in default
    std::string out;                ///< report path; empty writes to stdout
    std::optional<int> res;
    std::optional<double> eps;
    std::optional<unsigned> seed;
    std::string feature;            ///< "" or "n2"
};

/// Input that does not match the command's schema. `location` is a JSON pointer or a
/// line/column from the parser.
struct InputError : std::runtime_error {
    InputError(std::string loc, const std::string& what) : std::runtime_error(what), location(std::move(loc)) {}
    std::string location;
};

struct RunResult {
    int status = ok;
    std::string report;                          ///< JSON text
    std::map<std::string, std::string> artifacts;  ///< extension -> content (svg, csv)
};

/// Runs one command on already-loaded input text. Throws InputError on schema errors.
RunResult execute(const RunConfig& config, const std::string& input_text);

/// Reads the input, executes, writes the report and artifacts, and returns the exit status.
/// Errors are reported on stderr.
int run(const RunConfig& config);

}  // namespace pbu::cli
