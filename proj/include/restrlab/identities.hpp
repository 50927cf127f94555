#pragma once

#include "restrlab/oscquad.hpp"
#include "restrlab/rieszkernel.hpp"
#include "restrlab/verification.hpp"

namespace restrlab {

/// Two-route check of the finite Bessel-moment / 1F2 identity: the series
/// 1F2((a+v)/2; (a+v)/2+1, v+1; -(ac/2)^2) against the closed multiple of
/// int_0^a t^{alpha-1} J_nu(c t) dt computed by quadrature.
VerificationRecord hyp1f2_bessel_identity_check(Complex alpha, Complex nu, double a,
                                                double c, const SeriesConfig& scfg = {},
                                                const QuadConfig& qcfg = {});

/// Two-route check of the semi-infinite Bessel-moment / double-1F2 identity
/// behind the kernel transform: direct oscillatory quadrature of
/// int_1^inf rho^{alpha-1} (rho^2-1)^{beta-1} J_nu(c rho) drho against its
/// hypergeometric closed form.
VerificationRecord bessel_moment_hypergeometric_check(double alpha, double beta,
                                                      double nu, double c,
                                                      const SeriesConfig& scfg = {},
                                                      const QuadConfig& qcfg = {});

/// Two-route check of the key kernel-transform step: the weighted Bessel
/// integral over (1, inf) against the closed combination of gamma factors
/// and the finite Bessel moment, at the kernel's own parameters.
VerificationRecord crux_identity_check(const FracParam& p, double xi_norm,
                                       const QuadConfig& qcfg = {});

/// Direct quadrature of int_1^inf rho^{alpha-1} (rho^2-1)^{beta-1} J_nu(c rho) drho.
double bessel_moment_integral(double alpha, double beta, double nu, double c,
                              const QuadConfig& cfg = {});

} // namespace restrlab
