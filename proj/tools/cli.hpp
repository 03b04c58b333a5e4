#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace treecalc::cli {

enum class OutputFormat { Json, Csv, Text };

struct CliConfig {
    std::size_t max_degree = 7;
    std::size_t truncation_order = 8;
    OutputFormat output_format = OutputFormat::Text;
    bool unsafe_large = false;
};

// Stable exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_guard = 3;

// Runs one invocation. args excludes the program name; env holds the
// TREECALC_* variables visible to the process.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const std::map<std::string, std::string> &env = {});

} // namespace treecalc::cli
