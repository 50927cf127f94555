#include "restrlab/fouriertransforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "restrlab/fitting.hpp"

namespace restrlab {

namespace {
constexpr double kPi = std::numbers::pi;

// Shared evaluator behind kz_kernel and the by-parts form of ft_riesz, so
// that the real specialization is bit-identical to the complex one.
Complex kz_eval(Complex z, int n, double xi_norm, const QuadConfig& cfg) {
    const double a = 2.0 * kPi * xi_norm;
    const Complex nu = Complex(0.5 * n + 1.0, 0.0) - z;
    const Complex mu = -z - 0.5 * n;
    const Complex pref =
        std::pow(2.0, Complex(0.5 * n - 1.0, 0.0) + z) * std::tgamma(0.5 * n) /
        gamma_complex(1.0 - z);
    Complex tail = bessel_tail({mu, nu, a}, cfg);
    Complex cap = std::pow(Complex(a, 0.0), Complex(-(0.5 * n - 1.0), 0.0) - z) *
                  bessel_j(nu, a);
    return pref * (static_cast<double>(n) * tail - cap);
}

} // namespace

double ft_riesz(const FracParam& p, double xi_norm, FtForm form, const QuadConfig& cfg) {
    p.validate();
    if (!(xi_norm >= 0.0)) throw DomainError("ft_riesz: xi_norm must be >= 0");
    if (xi_norm == 0.0) return 1.0;  // the transform of a probability density
    if (form == FtForm::by_parts)
        return kz_eval(Complex(1.0 - p.s, 0.0), p.n, p.r * xi_norm, cfg).real();
    const double a = 2.0 * kPi * p.r * xi_norm;
    double pref = std::pow(2.0, 0.5 * p.n - p.s) * std::tgamma(0.5 * p.n) /
                  std::tgamma(p.s);
    Complex tail = bessel_tail(
        {Complex(p.s - 0.5 * p.n, 0.0), Complex(0.5 * p.n - 1.0 + p.s, 0.0), a}, cfg);
    return pref * tail.real();
}

Complex kz_kernel(Complex z, int n, double xi_norm, const QuadConfig& cfg) {
    if (n < 2) throw DomainError("kz_kernel: n must be >= 2");
    if (!(xi_norm > 0.0)) throw DomainError("kz_kernel: xi_norm must be > 0");
    if (!(z.real() > -0.5 * (n + 1.0) && z.real() < 1.0))
        throw DomainError("kz_kernel: Re z outside the strip (-(n+1)/2, 1)");
    return kz_eval(z, n, xi_norm, cfg);
}

double sphere_ft(int n, double xi_norm) {
    if (n < 2) throw DomainError("sphere_ft: n must be >= 2");
    if (!(xi_norm >= 0.0)) throw DomainError("sphere_ft: xi_norm must be >= 0");
    if (xi_norm == 0.0) return sphere_surface_measure(n);
    double nu = 0.5 * n - 1.0;
    return 2.0 * kPi / std::pow(xi_norm, nu) * bessel_j(nu, 2.0 * kPi * xi_norm);
}

double bochner_riesz_ft(double z, int n, double xi_norm) {
    if (n < 2) throw DomainError("bochner_riesz_ft: n must be >= 2");
    if (!(z > -1.0)) throw DomainError("bochner_riesz_ft: z must be > -1");
    if (!(xi_norm > 0.0)) throw DomainError("bochner_riesz_ft: xi_norm must be > 0");
    return std::pow(kPi, -z) * std::pow(xi_norm, -(0.5 * n + z)) *
           bessel_j(0.5 * n + z, 2.0 * kPi * xi_norm);
}

VerificationRecord limit_s_to_1(int n, double xi_norm, const std::vector<double>& s_seq,
                                double tol, const QuadConfig& cfg) {
    if (s_seq.size() < 2) throw DomainError("limit_s_to_1: need at least two s values");
    for (size_t i = 0; i < s_seq.size(); ++i) {
        if (!(s_seq[i] > 0.0 && s_seq[i] < 1.0))
            throw DomainError("limit_s_to_1: s values must lie in (0,1)");
        if (i > 0 && !(s_seq[i] > s_seq[i - 1]))
            throw DomainError("limit_s_to_1: s values must increase");
    }
    double target = sphere_ft(n, xi_norm) / sphere_surface_measure(n);
    std::vector<double> gaps;
    for (double s : s_seq) {
        FracParam p{s, n, 1.0};
        gaps.push_back(std::fabs(ft_riesz(p, xi_norm, FtForm::primary_integral, cfg) - target));
    }
    bool decreasing = true;
    for (size_t i = 1; i < gaps.size(); ++i)
        if (!(gaps[i] < gaps[i - 1] + 1e-14)) decreasing = false;
    VerificationRecord rec = make_record(
        "kernel transform converges to the sphere transform", "ft-limit-s-to-1",
        gaps.back(), 0.0, tol, PassRule::absolute);
    rec.pass = rec.pass && decreasing;
    if (!decreasing) rec.detail = "gap sequence not decreasing";
    return rec;
}

DecayFit decay_exponent_fit(const FracParam& p, double xi_min, double xi_max,
                            int samples_per_octave, const QuadConfig& cfg) {
    p.validate();
    if (!(xi_min > 0.0) || !(xi_max / xi_min >= 4.0) || xi_max < 50.0)
        throw DomainError("decay_exponent_fit: grid must span >= 2 octaves with max >= 50");
    if (samples_per_octave < 4)
        throw DomainError("decay_exponent_fit: need >= 4 samples per octave");

    DecayFit fit;
    std::vector<double> xs, ys;
    double lo = xi_min;
    while (lo < xi_max * 0.999) {
        double hi = std::min(lo * 2.0, xi_max);
        for (int i = 0; i < samples_per_octave; ++i) {
            double xi = lo * std::pow(hi / lo, (i + 0.5) / samples_per_octave);
            double v = std::fabs(ft_riesz(p, xi, FtForm::primary_integral, cfg));
            fit.samples.emplace_back(std::log10(xi), v > 0 ? std::log10(v) : -30.0);
        }
        // The envelope decreases, so the octave maximum sits at the first
        // oscillation peak above lo (the r-scaled period is 1/(2r) in xi).
        double period = 0.5 / p.r;
        double step = period / 24.0;
        double best = 0.0, best_xi = lo;
        for (double xi = lo; xi <= lo + 2.6 * period; xi += step) {
            double v = std::fabs(ft_riesz(p, xi, FtForm::primary_integral, cfg));
            if (v > best) {
                best = v;
                best_xi = xi;
            }
        }
        // Parabolic refinement on the three points around the best sample.
        {
            double vl = std::fabs(ft_riesz(p, best_xi - step, FtForm::primary_integral, cfg));
            double vr = std::fabs(ft_riesz(p, best_xi + step, FtForm::primary_integral, cfg));
            double denom = vl - 2.0 * best + vr;
            if (denom < 0.0) {
                double dx = 0.5 * step * (vl - vr) / denom;
                double vv = std::fabs(
                    ft_riesz(p, best_xi + dx, FtForm::primary_integral, cfg));
                if (vv > best) {
                    best = vv;
                    best_xi += dx;
                }
            }
        }
        if (best > 0.0) {
            xs.push_back(std::log10(best_xi));
            ys.push_back(std::log10(best));
            fit.envelope.emplace_back(std::log10(best_xi), std::log10(best));
        }
        lo = hi;
    }
    if (xs.size() < 3) throw FitError("decay_exponent_fit: too few octaves");
    LineFit lf = fit_line(xs, ys);
    if (lf.rms_residual > 0.2)
        throw FitError("decay_exponent_fit: envelope is not a clean power law");
    fit.slope = lf.slope;
    fit.intercept = lf.intercept;
    fit.rms_residual = lf.rms_residual;
    return fit;
}

FtRieszTable::FtRieszTable(const FracParam& p, double u_max, double step,
                           const QuadConfig& cfg)
    : step_(step), u_max_(u_max) {
    p.validate();
    if (!(step > 0.0) || !(u_max > 4.0 * step))
        throw DomainError("FtRieszTable: bad grid");
    size_t count = static_cast<size_t>(std::ceil(u_max / step)) + 1;
    values_.resize(count);
    for (size_t i = 0; i < count; ++i)
        values_[i] = ft_riesz(p, i * step_, FtForm::primary_integral, cfg);
}

double FtRieszTable::operator()(double u) const {
    if (!(u >= 0.0) || u > u_max_)
        throw DomainError("FtRieszTable: argument outside the tabulated range");
    // Local cubic through the 4 nearest grid points.
    double t = u / step_;
    size_t i1 = static_cast<size_t>(t);
    if (i1 + 2 >= values_.size()) i1 = values_.size() - 3;
    size_t i0 = (i1 == 0) ? 0 : i1 - 1;
    if (i0 + 3 >= values_.size()) i0 = values_.size() - 4;
    double x = t - static_cast<double>(i0);  // position relative to i0
    double y0 = values_[i0], y1 = values_[i0 + 1], y2 = values_[i0 + 2],
           y3 = values_[i0 + 3];
    // Lagrange basis on nodes 0,1,2,3.
    double l0 = (x - 1.0) * (x - 2.0) * (x - 3.0) / -6.0;
    double l1 = x * (x - 2.0) * (x - 3.0) / 2.0;
    double l2 = x * (x - 1.0) * (x - 3.0) / -2.0;
    double l3 = x * (x - 1.0) * (x - 2.0) / 6.0;
    return y0 * l0 + y1 * l1 + y2 * l2 + y3 * l3;
}

} // namespace restrlab
