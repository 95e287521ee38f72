#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recenters {

inline constexpr const char* kToolName = "recenters";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
    std::string check;
    std::string braiding;
    std::string birank;  // "m|n", empty if not computed
    std::string charge;  // empty if not applicable
    std::vector<std::string> points;
    bool residual_zero = false;
    int residual_norm_terms = 0;
    long elapsed_ms = 0;
    bool asserted = true;  // reported-only records do not affect pass/fail
    std::string note;
};

/// Machine-readable run report. Identical inputs and seed produce an
/// identical body except for the elapsed_ms fields.
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;

    bool overall_pass() const;
    std::string to_json() const;
    std::string to_csv() const;
};

}  // namespace recenters
