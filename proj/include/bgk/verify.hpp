#pragma once

#include <string>
#include <vector>

namespace bgk {

/// One entry of a verification report. `status` is "pass", "fail" or "info"
/// (reported, not asserted).
struct CheckResult {
    std::string check;
    std::string status;
    double value;
    double tolerance;
    std::string note;
};

/// Runs the invariant suite for one value of a: conservation identities,
/// discrete-solution residuals, normalization consistency, zero counts, the order
/// of the zero at infinity, the boundary-jump comparison, a continuum expansion
/// residual and, for a = 0, agreement with the closed form.
std::vector<CheckResult> spectrum_verify(double a, int nodes);

/// |lambda(z; a) - lambda_a0(z)| maximized over a fixed set of off-axis points.
double closed_form_deviation(double a, int nodes);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace bgk
