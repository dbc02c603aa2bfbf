#pragma once

#include <string>
#include <vector>

namespace gauram::validate {

/// One validation check. Hard checks gate the exit status; informational
/// entries record measured values for reproduction targets that are not
/// asserted (reference tables, consistency notes).
struct CheckResult {
    std::string suite;
    std::string name;
    bool hard = true;
    bool passed = false;
    std::string detail;  // measured evidence, human readable
};

inline constexpr const char* kSuites[] = {
    "specfun", "overlap", "ramanujan", "spectral", "hilbert", "modulation", "wavelet",
};

/// Runs one suite ("all" runs everything). Unknown names throw.
std::vector<CheckResult> run_suite(const std::string& suite);

/// JSON report: per-check results plus the consistency-note evidence.
std::string report_json(const std::vector<CheckResult>& results);

bool all_hard_passed(const std::vector<CheckResult>& results);

}  // namespace gauram::validate
