#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace treecalc {

// Outcome of one identity check. lhs and rhs are canonical serialized exact
// values, so equal is exactly (lhs == rhs). Secondary routes that must agree
// as well (series expansion, Picard iteration, ...) go in cross_checks.
struct IdentityReport {
    std::string identity;
    nlohmann::json parameters = nlohmann::json::object();
    std::string lhs;
    std::string rhs;
    bool equal = false;
    std::map<std::string, bool> cross_checks;
    std::optional<nlohmann::json> per_tree;
    double elapsed_ms = 0.0;

    // equal and every cross check.
    bool passed() const;

    // {"identity","parameters","lhs","rhs","equal","cross_checks","per_tree"?,"elapsed_ms"}
    nlohmann::json to_json() const;
};

// Measures wall time from construction.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace treecalc
