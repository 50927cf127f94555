#pragma once

#include <vector>

#include "restrlab/oscquad.hpp"
#include "restrlab/profile.hpp"
#include "restrlab/specfun.hpp"

namespace restrlab {

// Order s in (0,1) (complex extension handled by the z-overloads where
// noted), dimension n >= 2, ball radius r > 0.
struct FracParam {
    double s = 0.5;
    int n = 2;
    double r = 1.0;

    void validate() const {
        if (!(s > 0.0 && s < 1.0)) throw ValidationError("FracParam: s must lie in (0,1)");
        if (n < 2) throw ValidationError("FracParam: n must be >= 2");
        if (!(r > 0.0)) throw ValidationError("FracParam: r must be > 0");
    }
};

/// Normalizing constant c(n,s) = 2 / (Gamma(s) Gamma(1-s) sigma_{n-1}).
/// Symmetric under z -> 1-z by construction.
double kernel_constant(const FracParam& p);
Complex kernel_constant_z(Complex z, int n);

/// The kernel value A_r^{(s)}(x) at |x| = radius: zero inside the closed ball
/// of radius r, c(n,s) r^{2s} / ((|x|^2-r^2)^s |x|^n) outside.
double eval_kernel(const FracParam& p, double radius);

/// Kernel as a RadialProfile (with cancellation-free evaluation near the
/// singular sphere and truthful decay metadata).
RadialProfile kernel_profile(const FracParam& p);

/// Total mass of the kernel, by quadrature. Equals 1 for every (n, s, r).
double kernel_mass(const FracParam& p, const QuadConfig& cfg = {});

/// Riesz mean A_r^{(s)} * f evaluated at a point with |x| = center_norm,
/// for radial f. Radial quadrature at the origin, radius-angle quadrature
/// off it.
double mean_operator(const FracParam& p, const RadialProfile& f, double center_norm,
                     const QuadConfig& cfg = {});

/// Spherical average of radial f over the sphere of radius r centered at
/// |x| = center_norm.
double spherical_mean(const RadialProfile& f, double center_norm, double r, int n,
                      const QuadConfig& cfg = {});

/// Normalization constant printed with the pointwise-limit formula for
/// (-Delta)^s: s 2^{2s} Gamma(n/2+s) / (pi^{n/2} Gamma(1-s)). This is the
/// singular-integral constant of the fractional Laplacian.
double fractional_laplacian_constant(int n, double s);

/// Constant that actually scales the Riesz mean-value quotient
/// (A_r f - f)/r^{2s} to (-Delta)^s f: s 2^{2s} Gamma(n/2+s) Gamma(s) / Gamma(n/2).
/// Tends to the classical 2n of the Blaschke-Privalov Laplacian as s -> 1.
double mean_quotient_constant(int n, double s);

/// Pointwise fractional Laplacian of f at |x| = center_norm via the
/// mean-value quotient along r_seq (decreasing to 0), Richardson-extrapolated.
double blaschke_privalov(const FracParam& p, const RadialProfile& f, double center_norm,
                         const std::vector<double>& r_seq, const QuadConfig& cfg = {});

} // namespace restrlab
