#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypo::cli {

enum class Format { Human, Json, Csv };

/// One fully-specified invocation; `run` is deterministic for a fixed config.
struct RunConfig {
    std::string command;             // project, check, classify, threshold,
                                     // annuli, algebraic, scan, oracle, reproduce
    std::string symbol_text;
    std::vector<std::string> args;   // extra positionals (project/oracle)

    int n = 0, m = 0;
    std::string s, t;                // exact exponent literals
    int max_n = 4096;
    double tol = 1e-12;
    int budget = 200;
    int pencil_size = 4096;

    Format format = Format::Human;
    std::string output_path;         // CSV target; empty = main stream

    // scan grid: exact literals, no defaults
    std::string re_range, im_range;  // "lo:hi"
    std::string step;

    // algebraic: comma-separated exact literals
    std::string powers, coeffs;
};

/// Executes the configured command, writing the report to `out`.
/// Exit status: 0 on a verdict, 2 on Inconclusive, 1 on usage/parse error
/// (and for `reproduce`, 1 if any line fails).
int run(const RunConfig& cfg, std::ostream& out);

}  // namespace hypo::cli
