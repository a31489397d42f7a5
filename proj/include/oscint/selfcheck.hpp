#pragma once

#include <string>
#include <vector>

#include "oscint/series_control.hpp"

/// Identity and cross-method checks over every module, grouped so that a
/// subset can be run by name.
namespace oscint::selfcheck {

struct CheckResult {
    std::string name;
    bool passed = true;
    int points = 0;
    /// Largest |deviation| / tolerance seen; <= 1 for a pass.
    double worst_ratio = 0.0;
    std::string detail; // first failure, or exception text
};

struct GroupResult {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool passed() const;
};

struct Report {
    std::vector<GroupResult> groups;

    bool passed() const;
};

std::vector<std::string> group_names();

/// Runs the named groups (all when empty) in registry order. Throws
/// DomainError for an unknown group name.
Report run(const std::vector<std::string>& only = {}, const SeriesControl& ctl = {});

} // namespace oscint::selfcheck
