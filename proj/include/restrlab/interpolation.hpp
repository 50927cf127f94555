#pragma once

#include <vector>

#include "restrlab/restriction_lab.hpp"

namespace restrlab {

// Sampled endpoint operator-norm bound y -> M_j(y) with its exponential
// growth fit; the analytic M1 evaluates its closed form directly.
struct EndpointBound {
    enum class Kind { analytic_m1, empirical_m0 };
    Kind kind = Kind::analytic_m1;
    int n = 2;
    std::vector<std::pair<double, double>> samples;  // (y, bound)
    double log_intercept = 0.0;
    double growth_rate = 0.0;

    // log M(y); piecewise-linear in the samples for the empirical bound,
    // linear extrapolation with the fitted rate beyond the last sample.
    double log_value(double y) const;
};

/// Interpolation parameter theta(s) = 1 - 2s/(n+1).
double theta_of(const FracParam& p);

/// Sharp multiplier bound of the L^2 endpoint: 2 sinh(pi |y|) / (sigma_{n-1} pi).
double m1_bound(double y, int n);

/// Empirical L^1 -> L^inf endpoint bound: sup over the xi grid of
/// |K_{-(n-1)/2 + i y}| combined with the asymptotic envelope bound beyond
/// the grid. Requires |y| <= 8.
double m0_bound(double y, int n, const std::vector<double>& xi_grid,
                const QuadConfig& cfg = {});

/// Geometric default grid for the m0 sup (0, xi_max].
std::vector<double> default_m0_xi_grid(double xi_max = 12.0, double step = 0.05);

EndpointBound make_m1_endpoint(int n, const std::vector<double>& y_grid);
EndpointBound make_m0_endpoint(int n, const std::vector<double>& y_grid,
                               const std::vector<double>& xi_grid,
                               const QuadConfig& cfg = {});

/// Stein interpolation constant M_s from the two endpoint bounds (one-sided
/// cosh-kernel form, truncated with an explicit remainder bound).
double stein_constant(const FracParam& p, const EndpointBound& m0, const EndpointBound& m1,
                      const QuadConfig& cfg = {});

/// Restriction budget check: the Gaussian-dilate restriction quotients at
/// q = 2, p = 2(n+1)/(n+1+2s) must stay below sqrt(M_s).
VerificationRecord tomas_stein_budget(const FracParam& p, const QuadConfig& cfg = {},
                                      const EndpointBound* m0 = nullptr,
                                      const EndpointBound* m1 = nullptr);

} // namespace restrlab
