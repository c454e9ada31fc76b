#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace mubkit {

/// Outcome of a verification pass: a pass/fail flag, the largest residual
/// seen (float mode), and human-readable witnesses for whatever failed.
struct CheckReport {
    std::string name;
    bool passed = true;
    double max_residual = 0.0;
    std::vector<std::string> failures;

    explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

    void require(bool ok, const std::string& witness) {
        if (!ok) {
            passed = false;
            failures.push_back(witness);
        }
    }

    /// Records a float-mode residual and fails the report when it exceeds tol.
    void residual(double value, double tol, const std::string& what) {
        max_residual = std::max(max_residual, value);
        if (!(value <= tol)) {
            passed = false;
            failures.push_back(what + ": residual " + std::to_string(value) +
                               " exceeds tolerance " + std::to_string(tol));
        }
    }

    void merge(const CheckReport& sub) {
        passed = passed && sub.passed;
        max_residual = std::max(max_residual, sub.max_residual);
        for (const auto& f : sub.failures)
            failures.push_back(sub.name.empty() ? f : sub.name + ": " + f);
    }
};

}  // namespace mubkit
