#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mono/bigraph.hpp"
#include "mono/constructions.hpp"

namespace mono::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,             // holds, not applicable, AllSatisfy, MinMaxValue
    kCounterexample = 1, // an applicable statement was violated
    kInputError = 2,     // parse errors, invalid specs, unmet preconditions
    kBudget = 3,         // search budget exhausted
};

/// Runs one command line (without the program name). Primary output goes to
/// `out`, diagnostics to `err`. Writes a run manifest unless --no-manifest.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Host given as a file path or a generator spec such as "complete:m=4,n=4",
/// "cyclic:k=3", "lower-bound:r=2,t1=1,t2=1", "double-star-gap:r=2,t1=2,t2=3",
/// "circulant:m=8,n=8,d=2".
ColoredGraph resolve_host(const std::string& text);

}  // namespace mono::cli
