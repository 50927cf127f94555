#pragma once

#include <complex>
#include <functional>

#include "restrlab/config.hpp"
#include "restrlab/profile.hpp"
#include "restrlab/specfun.hpp"

namespace restrlab {

// Declared algebraic endpoint singularity of an integrand: the integrand
// behaves like (distance to endpoint)^exponent times a smooth factor.
struct SingularitySpec {
    enum class Location { none, left, right };
    Location location = Location::none;
    double exponent = 0.0;  // in (-1, 0]

    static SingularitySpec none() { return {}; }
    static SingularitySpec left(double exponent) {
        return {Location::left, exponent};
    }
    static SingularitySpec right(double exponent) {
        return {Location::right, exponent};
    }
};

struct QuadEstimate {
    double value = 0.0;
    double error = 0.0;  // accumulated error estimate
    int intervals = 0;   // adaptive intervals processed
};

struct QuadEstimateC {
    Complex value{};
    double error = 0.0;
    int intervals = 0;
};

/// Adaptive Gauss-Kronrod integration on [a, b]. A declared endpoint
/// singularity is removed by a power substitution before refinement.
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        SingularitySpec sing = {}, const QuadConfig& cfg = {});
Complex integrate_finite_c(const std::function<Complex(double)>& f, double a, double b,
                           SingularitySpec sing = {}, const QuadConfig& cfg = {});

/// Same, returning the error estimate and interval count.
QuadEstimate integrate_finite_full(const std::function<double(double)>& f, double a,
                                   double b, SingularitySpec sing = {},
                                   const QuadConfig& cfg = {});
QuadEstimateC integrate_finite_full_c(const std::function<Complex(double)>& f, double a,
                                      double b, SingularitySpec sing = {},
                                      const QuadConfig& cfg = {});

/// Singular-endpoint variant in which the integrand receives the exact
/// distance to the singular endpoint as a second argument. Writing the
/// singular factor in terms of that distance avoids the cancellation that
/// plain (x*x - a*a)-style expressions suffer next to the endpoint.
double integrate_finite_sing(const std::function<double(double, double)>& f, double a,
                             double b, SingularitySpec sing, const QuadConfig& cfg = {});
Complex integrate_finite_sing_c(const std::function<Complex(double, double)>& f, double a,
                                double b, SingularitySpec sing, const QuadConfig& cfg = {});

// Parameters of the oscillatory integral  int_lower^inf t^mu J_nu(t) dt.
struct OscIntegralSpec {
    Complex mu{};
    Complex nu{};
    double lower = 0.0;

    void validate() const;
};

/// Semi-infinite Bessel moment integral, evaluated by partitioning at the
/// (estimated) zeros of the envelope order Re(nu) and accelerating the
/// alternating block sums by iterated averaging.
Complex bessel_tail(const OscIntegralSpec& spec, const QuadConfig& cfg = {});

/// k-th positive zero of J_nu, McMahon estimate. Only used to bracket sign
/// changes, so the first-order correction is plenty.
double bessel_zero_estimate(double nu, int k);

/// Generic engine: integrate f over [lower, inf) given a strictly increasing
/// sequence of break points zero_at(k). The head interval [lower, first
/// break] may carry a declared singularity at `lower`; when `head_f` is
/// supplied it is used for the head with the exact endpoint distance as its
/// second argument. Block partial sums are accelerated per cfg.
Complex osc_blocks_c(const std::function<Complex(double)>& f,
                     const std::function<double(int)>& zero_at, double lower,
                     SingularitySpec head_sing, const QuadConfig& cfg,
                     const std::function<Complex(double, double)>* head_f = nullptr);
double osc_blocks(const std::function<double(double)>& f,
                  const std::function<double(int)>& zero_at, double lower,
                  SingularitySpec head_sing, const QuadConfig& cfg,
                  const std::function<double(double, double)>* head_f = nullptr);

/// n-dimensional Fourier transform of a radial profile at radius xi_norm
/// (Bochner's reduction to a one-dimensional Bessel-weighted integral).
/// xi_norm = 0 is the plain mass integral.
double bochner_radial_ft(const RadialProfile& profile, int n, double xi_norm,
                         const QuadConfig& cfg = {});

/// sigma_{n-1} int_0^inf f(r) r^{n-1} dr.
double radial_mass_integral(const RadialProfile& profile, int n, const QuadConfig& cfg = {});

/// Surface measure of the unit sphere S^{n-1} in R^n.
double sphere_surface_measure(int n);

} // namespace restrlab
