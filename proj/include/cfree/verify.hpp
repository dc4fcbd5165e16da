#pragma once

// Self-checks over every module, grouped the way the CLI exposes them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cfree {

struct CheckResult {
    std::string group;
    std::string name;
    bool passed = false;
    /// Worst deviation seen, for numeric checks; exact checks leave these empty.
    std::optional<double> measured;
    std::optional<double> tolerance;
    std::string detail;
};

inline constexpr std::string_view kVerifyGroups[] = {"partitions", "cumulants", "oracle", "series", "laws", "limits"};

/// Runs one group, or every group for "all". Throws std::invalid_argument on an unknown selector.
/// Exceptions raised inside a check are caught and recorded as failures.
std::vector<CheckResult> run_verify(std::string_view selector);

bool all_passed(const std::vector<CheckResult>& results);
/// {"passed":bool,"checks":[{"group","name","passed","measured","tolerance","detail"}...]}
std::string verify_report_json(const std::vector<CheckResult>& results);
/// One "PASS|FAIL group/name ..." line per check.
std::string verify_report_text(const std::vector<CheckResult>& results);

}  // namespace cfree
