#pragma once

#include <vector>

#include "restrlab/rieszkernel.hpp"
#include "restrlab/verification.hpp"

namespace restrlab {

// Which closed form of the kernel transform to evaluate; both agree.
enum class FtForm {
    primary_integral,  // single Bessel-moment tail
    by_parts,          // tail of the next order plus a boundary term
};

/// Fourier transform of A_r^{(s)} at |xi| = xi_norm. Equals 1 at xi_norm = 0.
double ft_riesz(const FracParam& p, double xi_norm, FtForm form = FtForm::primary_integral,
                const QuadConfig& cfg = {});

/// Analytic-family kernel K_z(xi) on the strip -(n+1)/2 < Re z < 1; reduces
/// to the by-parts form of ft_riesz at z = 1-s.
Complex kz_kernel(Complex z, int n, double xi_norm, const QuadConfig& cfg = {});

/// Fourier transform of the unit-sphere surface measure; sigma_{n-1} at 0.
double sphere_ft(int n, double xi_norm);

/// Fourier transform of the Bochner-Riesz kernel (1-|x|^2)_+^z / Gamma(z+1).
double bochner_riesz_ft(double z, int n, double xi_norm);

/// Records the gap |ft_riesz(s) - sphere_ft/sigma| along s_seq increasing to
/// 1; passes when the gaps decrease and the final one is below tol.
VerificationRecord limit_s_to_1(int n, double xi_norm, const std::vector<double>& s_seq,
                                double tol, const QuadConfig& cfg = {});

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    std::vector<std::pair<double, double>> samples;   // (log10 xi, log10 |ft|)
    std::vector<std::pair<double, double>> envelope;  // per-octave maxima
};

/// Least-squares slope of the per-octave envelope of |ft_riesz| on a
/// log-log grid spanning [xi_min, xi_max].
DecayFit decay_exponent_fit(const FracParam& p, double xi_min, double xi_max,
                            int samples_per_octave = 16, const QuadConfig& cfg = {});

/// Dense table of ft_riesz on [0, u_max] with local cubic interpolation;
/// used where the transform appears inside another quadrature.
class FtRieszTable {
public:
    FtRieszTable(const FracParam& p, double u_max, double step, const QuadConfig& cfg = {});
    double operator()(double u) const;
    double u_max() const { return u_max_; }

private:
    double step_;
    double u_max_;
    std::vector<double> values_;
};

} // namespace restrlab
