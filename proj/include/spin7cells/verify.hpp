#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spin7 {

struct CheckConfig {
    double tol = 1e-9;
    int samples = 0;           // 0 = per-check default
    std::uint64_t seed = 42;
    std::string space;         // optional filter for space-parametrized checks
};

struct CheckResult {
    std::string id;
    std::string subject;
    std::string status;        // "pass" | "fail" | "skip"
    double metric = 0.0;       // worst observed error / reported value
    double tolerance = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::string note;
};

struct CheckSpec {
    std::string id;
    std::string suite;
    std::function<std::vector<CheckResult>(const CheckConfig&)> run;
};

const std::vector<CheckSpec>& check_registry();
std::vector<std::string> known_suites(); // cayley, groups, charts, complex, cohomology, all

bool suite_known(const std::string& suite);

/// Runs the suite's checks in registry order (deterministic for a fixed
/// config) and returns the result rows sorted by check id.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckConfig& cfg);

std::string format_report_text(const std::vector<CheckResult>& rows);
std::string format_report_json(const std::vector<CheckResult>& rows);

} // namespace spin7
