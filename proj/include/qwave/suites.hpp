#pragma once

// Verification suites behind `qwave verify`: residual grids, analytic
// derivatives against finite differences, expansion coefficients against
// finite differences in q, and convergence-order fits.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qwave {

enum class suite_id { planewave, separation, gaussian, kleingordon, all };

[[nodiscard]] std::optional<suite_id> parse_suite(std::string_view name);

enum class comparison { at_most, at_least };

struct check_row {
    std::string suite;
    std::string claim;
    /// Tolerance key, overridable from the command line.
    std::string key;
    double measured = 0.0;
    double tolerance = 0.0;
    comparison cmp = comparison::at_most;

    [[nodiscard]] bool pass() const;
};

/// Default tolerance for each key.
[[nodiscard]] const std::map<std::string, double>& default_tolerances();

struct suite_options {
    /// When set, checks run at q = 1 + value only. At q = 1 the order fits
    /// and q-derivative checks are skipped.
    std::optional<double> q_minus_1;
    /// Overrides keyed like default_tolerances(). Unknown keys throw InvalidParameter.
    std::map<std::string, double> tolerances;
    unsigned workers = 1;
};

[[nodiscard]] std::vector<check_row> run_suite(suite_id id, const suite_options& options);

} // namespace qwave
