#include "restrlab/identities.hpp"

#include <cmath>
#include <numbers>

namespace restrlab {

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^a t^{alpha-1} J_nu(c t) dt by zero-blocks; valid whenever
// Re(alpha+nu) > 0, with no constraint at the upper end (finite interval).
Complex finite_bessel_moment(Complex alpha, Complex nu, double a, double c,
                             const QuadConfig& cfg) {
    auto f = [alpha, nu, c](double t) {
        return std::pow(Complex(t, 0.0), alpha - 1.0) * bessel_j(nu, c * t);
    };
    double head_exp = alpha.real() + nu.real() - 1.0;
    SingularitySpec sing =
        head_exp < 0.0 ? SingularitySpec::left(head_exp) : SingularitySpec::none();
    double nu_env = nu.real();
    Complex acc = 0.0;
    double lo = 0.0;
    int k = 1;
    int guard = 0;
    while (lo < a && guard++ < 100000) {
        double hi = std::min(bessel_zero_estimate(nu_env, k) / c, a);
        if (hi <= lo) { ++k; continue; }
        acc += integrate_finite_c(f, lo, hi, sing, cfg);
        sing = SingularitySpec::none();
        lo = hi;
        ++k;
    }
    return acc;
}

} // namespace

VerificationRecord hyp1f2_bessel_identity_check(Complex alpha, Complex nu, double a,
                                                double c, const SeriesConfig& scfg,
                                                const QuadConfig& qcfg) {
    if (!(a > 0.0) || !(c > 0.0))
        throw DomainError("hyp1f2_bessel_identity_check: a, c must be positive");
    if (!(alpha.real() + nu.real() > 0.0))
        throw DomainError("hyp1f2_bessel_identity_check: requires Re(alpha+nu) > 0");
    Complex half = (alpha + nu) / 2.0;
    Complex z = Complex(-(a * c) * (a * c) / 4.0, 0.0);
    Complex series = hyp_pfq({half}, {half + 1.0, nu + 1.0}, z, scfg);
    Complex integral = finite_bessel_moment(alpha, nu, a, c, qcfg);
    Complex closed = (alpha + nu) * std::pow(2.0, nu) * gamma_complex(nu + 1.0) /
                     (std::pow(Complex(a, 0.0), alpha + nu) * std::pow(Complex(c, 0.0), nu)) *
                     integral;
    return make_record("series vs quadrature of the finite Bessel moment",
                       "hypergeometric-bessel-integral-identity", series, closed, 1e-8);
}

double bessel_moment_integral(double alpha, double beta, double nu, double c,
                              const QuadConfig& cfg) {
    if (!(c > 0.0)) throw DomainError("bessel_moment_integral: c must be positive");
    if (!(beta > 0.0)) throw DomainError("bessel_moment_integral: requires beta > 0");
    if (!(alpha + 2.0 * beta < 3.5))
        throw DomainError("bessel_moment_integral: requires alpha + 2 beta < 7/2");
    auto f = [alpha, beta, nu, c](double rho) {
        return std::pow(rho, alpha - 1.0) * std::pow(rho * rho - 1.0, beta - 1.0) *
               bessel_j(nu, c * rho);
    };
    std::function<double(double, double)> head_f = [alpha, beta, nu, c](double rho,
                                                                        double dist) {
        return std::pow(rho, alpha - 1.0) * std::pow(dist * (rho + 1.0), beta - 1.0) *
               bessel_j(nu, c * rho);
    };
    auto zeros = [nu, c](int k) { return bessel_zero_estimate(nu, k) / c; };
    SingularitySpec head = beta < 1.0 ? SingularitySpec::left(beta - 1.0)
                                      : SingularitySpec::none();
    return osc_blocks(f, zeros, 1.0, head, cfg, &head_f);
}

VerificationRecord bessel_moment_hypergeometric_check(double alpha, double beta,
                                                      double nu, double c,
                                                      const SeriesConfig& scfg,
                                                      const QuadConfig& qcfg) {
    double lhs = bessel_moment_integral(alpha, beta, nu, c, qcfg);
    double half = 0.5 * (alpha + nu);
    Complex z = Complex(-c * c / 4.0, 0.0);
    Complex t1 = std::pow(c, nu) * std::tgamma(beta) * std::tgamma(1.0 - beta - half) /
                 (std::pow(2.0, nu + 1.0) * std::tgamma(nu + 1.0) * std::tgamma(1.0 - half)) *
                 hyp_pfq({Complex(half, 0.0)},
                         {Complex(nu + 1.0, 0.0), Complex(half + beta, 0.0)}, z, scfg);
    Complex t2 = std::pow(2.0, alpha + 2.0 * beta - 3.0) *
                 std::pow(c, 2.0 - alpha - 2.0 * beta) *
                 std::tgamma(beta + half - 1.0) /
                 std::tgamma(2.0 - beta + 0.5 * (nu - alpha)) *
                 hyp_pfq({Complex(1.0 - beta, 0.0)},
                         {Complex(2.0 - beta - half, 0.0),
                          Complex(2.0 - beta + 0.5 * (nu - alpha), 0.0)},
                         z, scfg);
    return make_record("weighted Bessel moment vs hypergeometric closed form",
                       "bessel-moment-hypergeometric-identity", lhs, (t1 + t2).real(),
                       1e-7);
}

VerificationRecord crux_identity_check(const FracParam& p, double xi_norm,
                                       const QuadConfig& qcfg) {
    p.validate();
    if (!(xi_norm > 0.0)) throw DomainError("crux_identity_check: xi_norm must be > 0");
    double n = p.n, s = p.s;
    double c = 2.0 * kPi * p.r * xi_norm;
    double lhs = bessel_moment_integral(1.0 - 0.5 * n, 1.0 - s, 0.5 * n - 1.0, c, qcfg);

    // Finite moment int_0^c t^{s-n/2} J_{n/2-1+s}(t) dt as full moment minus tail.
    Complex mu(s - 0.5 * n, 0.0), nu(0.5 * n - 1.0 + s, 0.0);
    Complex full = weber_schafheitlin(mu, nu, 1.0);
    Complex tail = bessel_tail({mu, nu, c}, qcfg);
    double head = (full - tail).real();

    double rhs = std::tgamma(1.0 - s) * std::pow(c, 0.5 * n - 1.0) *
                 (std::tgamma(s) / (std::pow(2.0, 0.5 * n) * std::tgamma(0.5 * n)) -
                  std::pow(2.0, -s) * head);
    return make_record("kernel-transform key integral vs closed form",
                       "crux-integral-identity", lhs, rhs, 1e-7);
}

} // namespace restrlab
