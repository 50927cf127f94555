#pragma once

#include <vector>

#include "restrlab/fouriertransforms.hpp"
#include "restrlab/rieszkernel.hpp"
#include "restrlab/verification.hpp"

namespace restrlab {

// Geometry of the cap-adapted box: cos(theta_eps) = 1 - eps, so the box
// half-width is R(eps) = sqrt(eps (2 - eps)).
struct KnappGeometry {
    int n = 2;
    double eps = 0.0625;

    double cap_halfwidth() const { return std::sqrt(eps * (2.0 - eps)); }

    void validate() const {
        if (n < 2) throw ValidationError("KnappGeometry: n must be >= 2");
        if (!(eps > 0.0 && eps < 0.5)) throw ValidationError("KnappGeometry: eps must lie in (0, 1/2)");
    }
};

struct ExponentPair {
    double p = 2.0;
    double q = 2.0;

    double p_conj() const { return p / (p - 1.0); }

    void validate() const {
        if (!(p >= 1.0 && p <= 2.0)) throw ValidationError("ExponentPair: p must lie in [1,2]");
        if (!(q >= 1.0)) throw ValidationError("ExponentPair: q must be >= 1");
    }
};

/// Kernel mass of the cap cylinder (the double integral G(eps) by default;
/// with exact_cylinder the full kernel mass of the cylinder, optionally with
/// a scaled radius).
double knapp_mass(const FracParam& p, const KnappGeometry& g, const QuadConfig& cfg = {},
                  bool exact_cylinder = false, double radius_scale = 1.0);

/// Kernel mass of the box K_eps intersected with the exterior of the unit
/// ball (n in {2, 3}).
double knapp_box_mass(const FracParam& p, const KnappGeometry& g, const QuadConfig& cfg = {});

/// int_0^inf |sin v|^p v^{-p} dv (periodic blocks + Euler-Maclaurin tail).
double sinc_power_integral(double p, const QuadConfig& cfg = {});

/// One separable factor int_R |sin(c u)/(pi u)|^p du.
double knapp_norm_factor(double c, double p, const QuadConfig& cfg = {});

/// Same factor by a second quadrature arrangement (no rescaling of the
/// integration variable); used as a cross-check.
double knapp_norm_factor_direct(double c, double p, const QuadConfig& cfg = {});

/// L^p norm of the Knapp test function f_eps (product of 1-D factors).
double knapp_norm(const KnappGeometry& g, double p, const QuadConfig& cfg = {});

/// Fitted epsilon-exponent of knapp_mass^{1/q} / knapp_norm over eps_grid;
/// the theory value is ((n+1)/2 - s)/q - (n+1)/(2 p').
double necessity_scan(const FracParam& p_frac, const ExponentPair& ep,
                      const std::vector<double>& eps_grid, const QuadConfig& cfg = {});

/// Weighted transform integral (int |f_hat|^q A_1 dxi)^{1/q} via Bochner
/// quadrature of f_hat.
double weighted_ft_integral(const FracParam& p_frac, const RadialProfile& f, double q,
                            const QuadConfig& cfg = {});

/// L^p norm of a radial profile.
double radial_lp_norm(const RadialProfile& f, double p, int n, const QuadConfig& cfg = {});

/// Restriction quotient (int |f_hat|^q A_1)^{1/q} / ||f||_p for radial f.
double restriction_quotient(const FracParam& p_frac, const ExponentPair& ep,
                            const RadialProfile& f, const QuadConfig& cfg = {});

/// Two-pipeline check of the Plancherel pairing: the weighted square
/// integral of f_hat against the convolution pairing with the transform.
VerificationRecord tomas_stein_identity(const FracParam& p_frac, const RadialProfile& f,
                                        const QuadConfig& cfg = {});

} // namespace restrlab
