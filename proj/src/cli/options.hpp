#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptosc/parameters.hpp"

namespace ptosc::cli {

enum class Command { Spectrum, Sweep, Compare, Validate };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    Command command = Command::Spectrum;
    PTParameters parameters;
    bool hasWellDepth = false;
    bool hasHalfWidth = false;

    OutputFormat format = OutputFormat::Csv;
    std::string outputPath;  ///< empty: standard output

    long nMax = 10;  // spectrum, compare
    long n = 1;      // sweep

    std::string sweepVar;
    double from = 0.0;
    double to = 0.0;
    long steps = 0;

    std::string method;
    int order = 0;  ///< 0: highest available for the method

    long gridN = 4000;
    int levels = 5;
    int richardson = 3;
    double tolerance = 1e-6;
    double pressureTolerance = 1e-8;
    double eigenPressureTolerance = 1e-5;
};

struct ParseOutcome {
    std::optional<RunConfig> config;  ///< empty when parsing ended the run
    int exitStatus = 0;
};

/// Parses flags and an optional --config key-value file (flags win on conflict).
ParseOutcome parse_arguments(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptosc::cli
