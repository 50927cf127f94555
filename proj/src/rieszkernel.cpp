#include "restrlab/rieszkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace restrlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex kernel_constant_z(Complex z, int n) {
    if (n < 2) throw ValidationError("kernel_constant: n must be >= 2");
    if (z.imag() == 0.0 && (z.real() == 0.0 || z.real() == 1.0))
        throw PoleError("kernel_constant: Gamma pole at s in {0,1}");
    double sigma = sphere_surface_measure(n);
    // The product Gamma(z) Gamma(1-z) makes c(n,z) = c(n,1-z) hold exactly.
    return 2.0 / (sigma * (gamma_complex(z) * gamma_complex(1.0 - z)));
}

double kernel_constant(const FracParam& p) {
    p.validate();
    return kernel_constant_z(Complex(p.s, 0.0), p.n).real();
}

double eval_kernel(const FracParam& p, double radius) {
    p.validate();
    if (!(radius >= 0.0)) throw DomainError("eval_kernel: radius must be >= 0");
    if (radius <= p.r) return 0.0;
    double c = kernel_constant(p);
    double q = radius * radius - p.r * p.r;
    return c * std::pow(p.r, 2.0 * p.s) / (std::pow(q, p.s) * std::pow(radius, p.n));
}

RadialProfile kernel_profile(const FracParam& p) {
    p.validate();
    double c = kernel_constant(p);
    double s = p.s, rr = p.r;
    int n = p.n;
    RadialProfile prof;
    prof.eval = [c, s, rr, n](double rho) {
        if (rho <= rr) return 0.0;
        double q = rho * rho - rr * rr;
        return c * std::pow(rr, 2.0 * s) / (std::pow(q, s) * std::pow(rho, n));
    };
    // dist = rho - r exactly; rho^2 - r^2 = dist (rho + r).
    prof.eval_near = [c, s, rr, n](double rho, double dist) {
        if (dist <= 0.0 || rho <= rr) return 0.0;
        double q = dist * (rho + rr);
        return c * std::pow(rr, 2.0 * s) / (std::pow(q, s) * std::pow(rho, n));
    };
    prof.decay_class = RadialProfile::Decay::poly;
    prof.decay_param = n + 2.0 * s;
    prof.singular_at = std::make_pair(rr, -s);
    return prof;
}

namespace {

// Center value of the mean: with u = r/rho the kernel average becomes
// sigma c(n,s) int_0^1 u^{2s-1} (1-u^2)^{-s} f(r/u) du, a finite integral
// with endpoint singularities at both ends (split at 1/2).
double mean_center(const FracParam& p, const std::function<double(double)>& f,
                   const QuadConfig& cfg) {
    double s = p.s, r = p.r;
    double pref = sphere_surface_measure(p.n) * kernel_constant(p);
    auto left = [s, r, &f](double u) {
        return std::pow(u, 2.0 * s - 1.0) * std::pow(1.0 - u * u, -s) * f(r / u);
    };
    auto right = [s, r, &f](double u, double dist) {
        // dist = 1-u; 1-u^2 = dist (1+u)
        return std::pow(u, 2.0 * s - 1.0) * std::pow(dist * (1.0 + u), -s) * f(r / u);
    };
    SingularitySpec ls = (2.0 * s - 1.0 < 0.0)
                             ? SingularitySpec::left(2.0 * s - 1.0)
                             : SingularitySpec::none();
    double i1 = integrate_finite(left, 0.0, 0.5, ls, cfg);
    double i2 = integrate_finite_sing(right, 0.5, 1.0, SingularitySpec::right(-s), cfg);
    return pref * (i1 + i2);
}

// sigma_{n-2} int_0^pi g(cos theta) sin^{n-2}(theta) dtheta for n >= 2.
double angular_average(const std::function<double(double)>& g, int n,
                       const QuadConfig& cfg) {
    double sig = sphere_surface_measure(n - 1 >= 1 ? n - 1 : 1);
    auto h = [&g, n](double th) {
        return g(std::cos(th)) * std::pow(std::sin(th), n - 2.0);
    };
    QuadConfig inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol / 8.0, 1e-13);
    return sig * integrate_finite(h, 0.0, kPi, SingularitySpec::none(), inner);
}

} // namespace

double spherical_mean(const RadialProfile& f, double center_norm, double r, int n,
                      const QuadConfig& cfg) {
    if (n < 2) throw DomainError("spherical_mean: n must be >= 2");
    if (!(r > 0.0)) throw DomainError("spherical_mean: r must be > 0");
    if (center_norm == 0.0) return f.eval(r);
    double x = center_norm;
    auto g = [&f, x, r](double ct) {
        double d2 = x * x + r * r - 2.0 * x * r * ct;
        return f.eval(std::sqrt(std::max(d2, 0.0)));
    };
    return angular_average(g, n, cfg) / sphere_surface_measure(n);
}

double mean_operator(const FracParam& p, const RadialProfile& f, double center_norm,
                     const QuadConfig& cfg) {
    p.validate();
    if (!(center_norm >= 0.0)) throw DomainError("mean_operator: center_norm must be >= 0");
    if (center_norm == 0.0) return mean_center(p, f.eval, cfg);
    // Radius-angle quadrature with the angular integral innermost.
    double x = center_norm;
    int n = p.n;
    auto favg = [&f, &cfg, x, n](double rho) {
        auto g = [&f, x, rho](double ct) {
            double d2 = x * x + rho * rho - 2.0 * x * rho * ct;
            return f.eval(std::sqrt(std::max(d2, 0.0)));
        };
        return angular_average(g, n, cfg) / sphere_surface_measure(n);
    };
    return mean_center(p, favg, cfg);
}

double fractional_laplacian_constant(int n, double s) {
    if (n < 2 || !(s > 0.0 && s < 1.0))
        throw DomainError("fractional_laplacian_constant: need n >= 2, s in (0,1)");
    return s * std::pow(2.0, 2.0 * s) * std::tgamma(0.5 * n + s) /
           (std::pow(kPi, 0.5 * n) * std::tgamma(1.0 - s));
}

double mean_quotient_constant(int n, double s) {
    if (n < 2 || !(s > 0.0 && s < 1.0))
        throw DomainError("mean_quotient_constant: need n >= 2, s in (0,1)");
    return s * std::pow(2.0, 2.0 * s) * std::tgamma(0.5 * n + s) * std::tgamma(s) /
           std::tgamma(0.5 * n);
}

double kernel_mass(const FracParam& p, const QuadConfig& cfg) {
    return mean_center(p, [](double) { return 1.0; }, cfg);
}

namespace {

// (A_r f - f)(x) without the 1 - 1 cancellation: at the origin the
// normalization integral is subtracted inside the integrand.
double mean_diff_center(const FracParam& p, const RadialProfile& f,
                        const QuadConfig& cfg) {
    double f0 = f.eval(0.0);
    double s = p.s, r = p.r;
    double pref = sphere_surface_measure(p.n) * kernel_constant(p);
    auto left = [s, r, &f, f0](double u) {
        return std::pow(u, 2.0 * s - 1.0) * std::pow(1.0 - u * u, -s) *
               (f.eval(r / u) - f0);
    };
    auto right = [s, r, &f, f0](double u, double dist) {
        return std::pow(u, 2.0 * s - 1.0) * std::pow(dist * (1.0 + u), -s) *
               (f.eval(r / u) - f0);
    };
    SingularitySpec ls = (2.0 * s - 1.0 < 0.0)
                             ? SingularitySpec::left(2.0 * s - 1.0)
                             : SingularitySpec::none();
    double i1 = integrate_finite(left, 0.0, 0.5, ls, cfg);
    double i2 = integrate_finite_sing(right, 0.5, 1.0, SingularitySpec::right(-s), cfg);
    return pref * (i1 + i2);
}

} // namespace

double blaschke_privalov(const FracParam& p, const RadialProfile& f, double center_norm,
                         const std::vector<double>& r_seq, const QuadConfig& cfg) {
    p.validate();
    if (r_seq.size() < 4)
        throw DomainError("blaschke_privalov: need at least 4 radii");
    for (size_t i = 1; i < r_seq.size(); ++i)
        if (!(r_seq[i] < r_seq[i - 1]) || !(r_seq[i] > 0.0))
            throw DomainError("blaschke_privalov: radii must decrease toward 0");

    const double gam = mean_quotient_constant(p.n, p.s);
    std::vector<double> quot;
    quot.reserve(r_seq.size());
    for (double r : r_seq) {
        FracParam pr = p;
        pr.r = r;
        double diff;
        if (center_norm == 0.0) {
            diff = mean_diff_center(pr, f, cfg);
        } else {
            diff = mean_operator(pr, f, center_norm, cfg) -
                   f.eval(center_norm);
        }
        quot.push_back(-gam * diff / std::pow(r, 2.0 * p.s));
    }

    // The quotient approaches its limit like r^{2-2s} (plus an r^2 term);
    // eliminate the leading exponent, then the next, assuming r halves.
    auto richardson = [](const std::vector<double>& v, double q,
                         double ratio) {
        std::vector<double> out;
        double w = std::pow(ratio, q);
        for (size_t i = 0; i + 1 < v.size(); ++i)
            out.push_back((w * v[i + 1] - v[i]) / (w - 1.0));
        return out;
    };
    double ratio = r_seq[0] / r_seq[1];  // assumed common
    std::vector<double> st1 = richardson(quot, 2.0 - 2.0 * p.s, ratio);
    std::vector<double> st2 = richardson(st1, 2.0, ratio);
    double result = st2.back();
    double spread = std::fabs(st2.back() - st1.back());
    if (!(spread <= 0.2 * (std::fabs(result) + 1e-12)))
        throw NoConvergence("blaschke_privalov: extrapolants disagree");
    return result;
}

} // namespace restrlab
