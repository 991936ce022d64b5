#pragma once

#include <functional>
#include <string>
#include <vector>

namespace svir {

struct CheckResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail; // witness or first failure
    double millis = 0.0;
};

struct CheckOptions {
    // Scales the largest n swept by the expensive checks; 0 keeps the
    // defaults pinned by the acceptance suite.
    long max_n = 0;
};

// The fourteen acceptance criteria, in order.
std::vector<CheckResult> run_acceptance(const CheckOptions& opts = {});

// Acceptance criteria plus the finer per-module invariants.
std::vector<CheckResult> run_all_checks(const CheckOptions& opts = {});

} // namespace svir
