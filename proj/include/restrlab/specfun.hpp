#pragma once

#include <complex>
#include <vector>

#include "restrlab/config.hpp"

namespace restrlab {

using Complex = std::complex<double>;

/// Gamma function on the complex plane (Lanczos rational approximation,
/// reflection formula for Re z < 1/2). Relative accuracy is better than
/// 1e-13 on the strip Re z in [-10, 20], |Im z| <= 20.
Complex gamma_complex(Complex z);

/// Rising factorial (alpha)_k computed by the direct product, so that
/// alpha = 0 and negative-integer alpha give exact zeros.
Complex pochhammer(Complex alpha, int k);

/// Bessel function of the first kind, complex order, positive real argument.
/// Ascending series below the order-dependent switchover radius, Hankel
/// asymptotic expansion above it.
Complex bessel_j(Complex nu, double x, const SeriesConfig& cfg = {});

/// Real-order fast path.
double bessel_j(double nu, double x, const SeriesConfig& cfg = {});

/// Switchover radius between the ascending series and the Hankel expansion.
double bessel_switchover(Complex nu);

/// Generalized hypergeometric series pFq(a; b; z), p <= q+1.
Complex hyp_pfq(const std::vector<Complex>& a, const std::vector<Complex>& b,
                Complex z, const SeriesConfig& cfg = {});

/// Closed form of the integral of t^mu J_nu(a t) over t in (0, inf):
/// 2^mu a^{-mu-1} Gamma((nu+mu+1)/2) / Gamma((nu-mu+1)/2),
/// valid on the strip -Re nu - 1 < Re mu < 1/2.
Complex weber_schafheitlin(Complex mu, Complex nu, double a);

namespace detail {
// Largest |term| / |sum| ratio seen by the most recent series evaluation on
// this thread; exposed for diagnostics in tests.
double last_series_cancellation();
} // namespace detail

} // namespace restrlab
