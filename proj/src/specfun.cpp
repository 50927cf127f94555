#include "restrlab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace restrlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 607/128, N = 15 (Godfrey's set).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool is_nonpositive_integer(Complex z, double tol = 0.0) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol && std::round(r) <= 0.0;
}

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite argument");
}

// Core Lanczos sum for Re z >= 0.5.
Complex lanczos_gamma(Complex z) {
    z -= 1.0;
    Complex acc = kLanczos[0];
    for (int i = 1; i < 15; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

thread_local double g_last_cancellation = 0.0;

} // namespace

namespace detail {
double last_series_cancellation() { return g_last_cancellation; }
} // namespace detail

Complex gamma_complex(Complex z) {
    require_finite(z, "gamma_complex");
    if (is_nonpositive_integer(z))
        throw PoleError("gamma_complex: pole at z = " + std::to_string(z.real()));
    Complex result;
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)).
        result = kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    } else {
        result = lanczos_gamma(z);
    }
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw OverflowError("gamma_complex: |Gamma(z)| out of range");
    return result;
}

Complex pochhammer(Complex alpha, int k) {
    if (k < 0) throw DomainError("pochhammer: k must be >= 0");
    Complex acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= alpha + static_cast<double>(i);
    return acc;
}

double bessel_switchover(Complex nu) {
    // The ascending series loses digits to cancellation past x ~ 22 even in
    // extended precision, and the Hankel expansion for |nu| <= 10 already
    // converges to ~1e-12 there, so the growth in |nu| is capped at 22.
    double a = 1.5 * std::pow(std::abs(nu), 1.5);
    return std::clamp(a, 14.0, 22.0);
}

namespace {

using LComplex = std::complex<long double>;

// Ascending series, extended-precision accumulation.
Complex bessel_series_c(Complex nu, double x, const SeriesConfig& cfg) {
    const Complex inv_g0 = 1.0 / gamma_complex(nu + 1.0);
    const long double q = -static_cast<long double>(x) * x / 4.0L;
    LComplex term(inv_g0.real(), inv_g0.imag());
    LComplex sum = term;
    long double max_term = std::abs(term);
    int k = 1;
    for (; k <= cfg.max_terms; ++k) {
        LComplex denom = LComplex(nu.real(), nu.imag()) + static_cast<long double>(k);
        term *= q / (static_cast<long double>(k) * denom);
        sum += term;
        long double at = std::abs(term);
        max_term = std::max(max_term, at);
        if (at < cfg.rel_tol * std::abs(sum) && k > 4) break;
    }
    if (k > cfg.max_terms)
        throw ConvergenceError("bessel_j: ascending series did not converge");
    long double s_abs = std::abs(sum);
    g_last_cancellation = (s_abs > 0.0L) ? static_cast<double>(max_term / s_abs)
                                         : std::numeric_limits<double>::infinity();
    if (g_last_cancellation > cfg.cancellation_guard)
        throw PrecisionLossError("bessel_j: series cancellation guard exceeded");
    Complex pref = std::pow(Complex(x / 2.0, 0.0), nu);
    return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())) * pref;
}

// Hankel asymptotic expansion; terms added until they stop decreasing.
Complex bessel_hankel_c(Complex nu, double x) {
    const Complex fournu2 = 4.0 * nu * nu;
    Complex p = 1.0, q = 0.0;
    Complex a = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        double m = 2.0 * k - 1.0;
        a *= (fournu2 - m * m) / (8.0 * k * x);
        double at = std::abs(a);
        if (at >= prev || at < 1e-18) {
            if (at < prev) { // converged: include the last small term
                int r = k % 4;
                if (r == 1) q += a;
                else if (r == 2) p -= a;
                else if (r == 3) q -= a;
                else p += a;
            }
            break;
        }
        prev = at;
        int r = k % 4;
        if (r == 1) q += a;
        else if (r == 2) p -= a;
        else if (r == 3) q -= a;
        else p += a;
    }
    Complex omega = Complex(x, 0.0) - nu * (kPi / 2.0) - kPi / 4.0;
    return std::sqrt(2.0 / (kPi * x)) * (std::cos(omega) * p - std::sin(omega) * q);
}

double bessel_series_r(double nu, double x, const SeriesConfig& cfg) {
    const double inv_g0 = 1.0 / gamma_complex(Complex(nu + 1.0, 0.0)).real();
    const long double q = -static_cast<long double>(x) * x / 4.0L;
    long double term = inv_g0;
    long double sum = term;
    long double max_term = std::fabs(term);
    int k = 1;
    for (; k <= cfg.max_terms; ++k) {
        term *= q / (static_cast<long double>(k) * (nu + static_cast<long double>(k)));
        sum += term;
        max_term = std::max(max_term, std::fabs(term));
        if (std::fabs(term) < cfg.rel_tol * std::fabs(sum) && k > 4) break;
    }
    if (k > cfg.max_terms)
        throw ConvergenceError("bessel_j: ascending series did not converge");
    g_last_cancellation = (sum != 0.0L) ? static_cast<double>(max_term / std::fabs(sum))
                                        : std::numeric_limits<double>::infinity();
    if (g_last_cancellation > cfg.cancellation_guard)
        throw PrecisionLossError("bessel_j: series cancellation guard exceeded");
    return static_cast<double>(sum) * std::pow(x / 2.0, nu);
}

double bessel_hankel_r(double nu, double x) {
    const double fournu2 = 4.0 * nu * nu;
    double p = 1.0, q = 0.0, a = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        double m = 2.0 * k - 1.0;
        a *= (fournu2 - m * m) / (8.0 * k * x);
        double at = std::fabs(a);
        bool add = at < prev;
        if (add) {
            int r = k % 4;
            if (r == 1) q += a;
            else if (r == 2) p -= a;
            else if (r == 3) q -= a;
            else p += a;
        }
        if (!add || at < 1e-18) break;
        prev = at;
    }
    double omega = x - nu * (kPi / 2.0) - kPi / 4.0;
    return std::sqrt(2.0 / (kPi * x)) * (std::cos(omega) * p - std::sin(omega) * q);
}

} // namespace

Complex bessel_j(Complex nu, double x, const SeriesConfig& cfg) {
    require_finite(nu, "bessel_j");
    cfg.validate();
    if (!(x > 0.0)) throw DomainError("bessel_j: argument must be positive");
    if (is_nonpositive_integer(nu + 1.0))
        throw DomainError("bessel_j: negative-integer order not supported");
    if (nu.imag() == 0.0) return Complex(bessel_j(nu.real(), x, cfg), 0.0);
    if (x < bessel_switchover(nu)) return bessel_series_c(nu, x, cfg);
    return bessel_hankel_c(nu, x);
}

double bessel_j(double nu, double x, const SeriesConfig& cfg) {
    if (!std::isfinite(nu)) throw DomainError("bessel_j: non-finite order");
    if (!(x > 0.0)) throw DomainError("bessel_j: argument must be positive");
    if (nu < 0.0 && nu == std::round(nu))
        throw DomainError("bessel_j: negative-integer order not supported");
    if (x < bessel_switchover(Complex(nu, 0.0))) return bessel_series_r(nu, x, cfg);
    return bessel_hankel_r(nu, x);
}

Complex hyp_pfq(const std::vector<Complex>& a, const std::vector<Complex>& b,
                Complex z, const SeriesConfig& cfg) {
    cfg.validate();
    require_finite(z, "hyp_pfq");
    const size_t p = a.size(), q = b.size();
    if (p > q + 1) throw ParameterError("hyp_pfq: requires p <= q+1");
    for (const Complex& bj : b)
        if (is_nonpositive_integer(bj))
            throw ParameterError("hyp_pfq: lower parameter at a nonpositive integer");
    for (const Complex& ai : a)
        if (ai == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    if (p == q + 1 && std::abs(z) >= 1.0)
        throw ConvergenceError("hyp_pfq: series diverges for p = q+1 and |z| >= 1");
    if (p <= q && std::abs(z) > 400.0)
        throw PrecisionLossError("hyp_pfq: |z| > 400 is out of supported numeric range");

    LComplex term = 1.0L, sum = 1.0L;
    const LComplex zl(z.real(), z.imag());
    long double max_term = 1.0L;
    int k = 0;
    for (; k < cfg.max_terms; ++k) {
        LComplex factor = zl / static_cast<long double>(k + 1);
        for (const Complex& ai : a)
            factor *= LComplex(ai.real(), ai.imag()) + static_cast<long double>(k);
        for (const Complex& bj : b)
            factor /= LComplex(bj.real(), bj.imag()) + static_cast<long double>(k);
        term *= factor;
        sum += term;
        long double at = std::abs(term);
        max_term = std::max(max_term, at);
        if (at < cfg.rel_tol * std::abs(sum) && k > 3) break;
    }
    if (k >= cfg.max_terms)
        throw ConvergenceError("hyp_pfq: series did not converge within max_terms");
    long double s_abs = std::abs(sum);
    g_last_cancellation = (s_abs > 0.0L) ? static_cast<double>(max_term / s_abs)
                                         : std::numeric_limits<double>::infinity();
    if (g_last_cancellation > cfg.cancellation_guard)
        throw PrecisionLossError("hyp_pfq: cancellation guard exceeded");
    return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

Complex weber_schafheitlin(Complex mu, Complex nu, double a) {
    require_finite(mu, "weber_schafheitlin");
    require_finite(nu, "weber_schafheitlin");
    if (!(a > 0.0)) throw DomainError("weber_schafheitlin: a must be positive");
    if (!(mu.real() < 0.5) || !(mu.real() > -nu.real() - 1.0))
        throw DomainError("weber_schafheitlin: (mu, nu) outside the convergence strip");
    Complex num = gamma_complex((nu + mu + 1.0) / 2.0);
    Complex den = gamma_complex((nu - mu + 1.0) / 2.0);
    return std::pow(2.0, mu) * std::pow(a, -mu - 1.0) * num / den;
}

} // namespace restrlab
