#pragma once

#include <vector>

namespace restrlab {

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rms_residual = 0.0;
};

/// Ordinary least squares for y = intercept + slope * x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Log-log slope fitted on the `use_count` smallest abscissae (asymptotic
/// regime of an eps -> 0 scaling law).
double fit_exponent_smallest(const std::vector<double>& eps,
                             const std::vector<double>& values, int use_count = 6);

} // namespace restrlab
