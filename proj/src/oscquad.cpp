#include "restrlab/oscquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace restrlab {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0,
};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992,
};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020,
};

template <typename T>
struct Gk15Result {
    T value{};
    double error = 0.0;
    double resabs = 0.0;
};

template <typename T, typename F>
Gk15Result<T> gk15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    T fc = f(mid);
    T resg = kWg[3] * fc;
    T resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);

    T fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        double dx = half * kXgk[j];
        fv1[j] = f(mid - dx);
        fv2[j] = f(mid + dx);
        T fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }

    T reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(half);
    resabs *= std::abs(half);

    double err = std::abs(resk - resg) * std::abs(half) * 2.0;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);

    Gk15Result<T> out;
    out.value = resk * half;
    out.error = err;
    out.resabs = resabs;
    return out;
}

struct WorkItem {
    double a, b;
    int depth;
    double parent_err;
};

template <typename T, typename F>
T adaptive_core(F&& f, double a, double b, const QuadConfig& cfg, double* err_out,
                int* count_out) {
    const double total_len = b - a;
    auto first = gk15<T>(f, a, b);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first.value));

    long double sum_re = 0.0L, sum_im = 0.0L;
    double err_sum = 0.0;
    int processed = 0;

    std::vector<WorkItem> stack;
    stack.push_back({a, b, 0, std::numeric_limits<double>::infinity()});
    const double eps_len = 64.0 * std::numeric_limits<double>::epsilon();

    auto accumulate = [&](const T& v) {
        if constexpr (std::is_same_v<T, Complex>) {
            sum_re += v.real();
            sum_im += v.imag();
        } else {
            sum_re += v;
        }
    };

    while (!stack.empty()) {
        WorkItem w = stack.back();
        stack.pop_back();
        auto r = gk15<T>(f, w.a, w.b);
        ++processed;
        const double len = w.b - w.a;
        const bool finite = std::isfinite(r.error) && std::isfinite(std::abs(r.value));
        const bool tiny = len <= eps_len * (std::fabs(w.a) + std::fabs(w.b) + 1.0);
        // Refinement that no longer reduces the estimate means the integrand
        // is roundoff-dominated on this interval; accept and carry the error.
        const bool stalled = finite && w.depth >= 10 && r.error >= 0.45 * w.parent_err;
        if (finite && (r.error <= tol * (len / total_len) || tiny || stalled)) {
            accumulate(r.value);
            err_sum += r.error;
            continue;
        }
        if (!finite && tiny) continue;  // unresolvable sliver at a singular point
        if (processed >= cfg.max_subdiv)
            throw NoConvergence("integrate_finite: subdivision budget exhausted");
        double mid = 0.5 * (w.a + w.b);
        double perr = finite ? r.error : w.parent_err;
        stack.push_back({mid, w.b, w.depth + 1, perr});
        stack.push_back({w.a, mid, w.depth + 1, perr});
    }

    T total;
    if constexpr (std::is_same_v<T, Complex>) {
        total = Complex(static_cast<double>(sum_re), static_cast<double>(sum_im));
    } else {
        total = static_cast<double>(sum_re);
    }
    if (err_out) *err_out = err_sum;
    if (count_out) *count_out = processed;
    return total;
}

int singularity_power(double exponent) {
    // x = a + u^m maps (x-a)^beta to u^{m(1+beta)-1}; pick m so the transformed
    // integrand is at least C^1 at the endpoint.
    double need = 2.5 / (1.0 + exponent);
    int m = static_cast<int>(std::ceil(need));
    return std::clamp(m, 2, 64);
}

void validate_sing(SingularitySpec& sing) {
    if (sing.location == SingularitySpec::Location::none) return;
    if (!(sing.exponent > -1.0))
        throw DomainError("integrate_finite: singularity exponent must be > -1");
    if (sing.exponent > 0.0) sing.location = SingularitySpec::Location::none;
}

// F2 takes (x, distance-to-singular-endpoint); dist is exact by construction.
template <typename T, typename F2>
T integrate_sing_core(F2&& f, double a, double b, SingularitySpec sing,
                      const QuadConfig& cfg, double* err_out, int* count_out) {
    cfg.validate();
    if (!(a < b)) {
        if (a == b) {
            if (err_out) *err_out = 0.0;
            if (count_out) *count_out = 0;
            return T{};
        }
        throw DomainError("integrate_finite: requires a < b");
    }
    validate_sing(sing);
    switch (sing.location) {
        case SingularitySpec::Location::none: {
            auto g = [&f, a, b](double x) -> T {
                return f(x, std::min(x - a, b - x));
            };
            return adaptive_core<T>(g, a, b, cfg, err_out, count_out);
        }
        case SingularitySpec::Location::left: {
            int m = singularity_power(sing.exponent);
            double u_max = std::pow(b - a, 1.0 / m);
            auto g = [&f, a, m](double u) -> T {
                double d = std::pow(u, m);
                if (d <= 0.0) return T{};
                return f(a + d, d) * (m * std::pow(u, m - 1));
            };
            return adaptive_core<T>(g, 0.0, u_max, cfg, err_out, count_out);
        }
        case SingularitySpec::Location::right: {
            int m = singularity_power(sing.exponent);
            double u_max = std::pow(b - a, 1.0 / m);
            auto g = [&f, b, m](double u) -> T {
                double d = std::pow(u, m);
                if (d <= 0.0) return T{};
                return f(b - d, d) * (m * std::pow(u, m - 1));
            };
            return adaptive_core<T>(g, 0.0, u_max, cfg, err_out, count_out);
        }
    }
    return T{};
}

template <typename T, typename F>
T integrate_dispatch(F&& f, double a, double b, SingularitySpec sing,
                     const QuadConfig& cfg, double* err_out, int* count_out) {
    // A plain callback recomputes its singular factor from x, which is
    // meaningless once x rounds onto the singular endpoint: skip that sliver.
    if (sing.location == SingularitySpec::Location::left) {
        auto f2 = [&f, a](double x, double) -> T {
            if (x <= a) return T{};
            return f(x);
        };
        return integrate_sing_core<T>(f2, a, b, sing, cfg, err_out, count_out);
    }
    if (sing.location == SingularitySpec::Location::right) {
        auto f2 = [&f, b](double x, double) -> T {
            if (x >= b) return T{};
            return f(x);
        };
        return integrate_sing_core<T>(f2, a, b, sing, cfg, err_out, count_out);
    }
    auto f2 = [&f](double x, double) -> T { return f(x); };
    return integrate_sing_core<T>(f2, a, b, sing, cfg, err_out, count_out);
}

// Iterated averaging of the partial-sum sequence of an (eventually)
// alternating series. Returns the accelerated limit and the difference
// between the last two averaging rounds as an error estimate.
template <typename T>
std::pair<T, double> averaged_limit(std::vector<T> s, int order) {
    size_t len = s.size();
    if (len == 0) return {T{}, std::numeric_limits<double>::infinity()};
    T prev = s[len - 1];
    double err = std::numeric_limits<double>::infinity();
    int rounds = std::min<int>(order, static_cast<int>(len) - 1);
    for (int r = 0; r < rounds; ++r) {
        for (size_t i = 0; i + 1 < len; ++i) s[i] = (s[i] + s[i + 1]) * 0.5;
        --len;
        T cand = s[len - 1];
        err = std::abs(cand - prev);
        prev = cand;
    }
    return {prev, err};
}

template <typename T, typename F, typename F2>
T osc_engine(F&& f, const F2* head_f, const std::function<double(int)>& zero_at,
             double lower, SingularitySpec head_sing, const QuadConfig& cfg) {
    cfg.validate();
    QuadConfig block_cfg = cfg;
    block_cfg.abs_tol = cfg.abs_tol / 32.0;
    // Blocks can be huge when the order is complex (cosh-amplified); their
    // errors accumulate across hundreds of blocks, so per-block relative
    // accuracy has to sit well below the engine's own target.
    block_cfg.rel_tol = std::min(cfg.rel_tol * 1e-3, 1e-12);

    int k0 = 1;
    while (zero_at(k0) <= lower + 1e-12 * (1.0 + lower)) {
        ++k0;
        if (k0 > 1000000) throw NoConvergence("osc_blocks: no break point above lower limit");
    }

    double quad_err = 0.0;
    double e = 0.0;
    T head;
    if (head_f) {
        head = integrate_sing_core<T>(*head_f, lower, zero_at(k0), head_sing, block_cfg,
                                      &e, nullptr);
    } else {
        head = integrate_dispatch<T>(f, lower, zero_at(k0), head_sing, block_cfg, &e,
                                     nullptr);
    }
    quad_err += e;

    std::vector<T> partial;
    partial.push_back(head);
    T acc = head;
    double scale = std::abs(head);

    const int max_blocks = 64 * cfg.tail_zero_blocks;
    int target = cfg.tail_zero_blocks;
    int small_run = 0;
    const double eps = std::numeric_limits<double>::epsilon();

    // The partial sums can be orders of magnitude larger than the limit
    // (heavy cancellation for complex orders); the achievable absolute
    // accuracy is bounded below by roundoff at the partial-sum scale.
    auto tol_at = [&](double val_abs) {
        return std::max(cfg.abs_tol, cfg.rel_tol * val_abs) + 64.0 * eps * scale +
               0.0625 * quad_err;
    };

    for (int i = 0; i < max_blocks; ++i) {
        double a = zero_at(k0 + i);
        double b = zero_at(k0 + i + 1);
        if (!(b > a)) throw NoConvergence("osc_blocks: break points not increasing");
        T blk = integrate_dispatch<T>(f, a, b, SingularitySpec::none(), block_cfg, &e,
                                      nullptr);
        quad_err += e;
        acc += blk;
        partial.push_back(acc);
        scale = std::max(scale, std::abs(acc));

        // Once blocks are negligible the omitted alternating remainder is
        // bounded by the first omitted block.
        if (std::abs(blk) < cfg.abs_tol / 8.0) {
            if (++small_run >= 3 && i >= 4) return acc;
        } else {
            small_run = 0;
        }

        if (static_cast<int>(partial.size()) >= target + 1) {
            auto [val, err] = averaged_limit(partial, cfg.accel_order);
            if (err <= tol_at(std::abs(val))) return val;
            target *= 2;
        }
    }
    auto [val, err] = averaged_limit(partial, cfg.accel_order);
    if (err <= 8.0 * tol_at(std::abs(val))) return val;  // accept marginal convergence
    throw NoConvergence("osc_blocks: block acceleration did not reach tolerance");
}

} // namespace

double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        SingularitySpec sing, const QuadConfig& cfg) {
    return integrate_dispatch<double>(f, a, b, sing, cfg, nullptr, nullptr);
}

Complex integrate_finite_c(const std::function<Complex(double)>& f, double a, double b,
                           SingularitySpec sing, const QuadConfig& cfg) {
    return integrate_dispatch<Complex>(f, a, b, sing, cfg, nullptr, nullptr);
}

QuadEstimate integrate_finite_full(const std::function<double(double)>& f, double a,
                                   double b, SingularitySpec sing, const QuadConfig& cfg) {
    QuadEstimate q;
    q.value = integrate_dispatch<double>(f, a, b, sing, cfg, &q.error, &q.intervals);
    return q;
}

QuadEstimateC integrate_finite_full_c(const std::function<Complex(double)>& f, double a,
                                      double b, SingularitySpec sing,
                                      const QuadConfig& cfg) {
    QuadEstimateC q;
    q.value = integrate_dispatch<Complex>(f, a, b, sing, cfg, &q.error, &q.intervals);
    return q;
}

double integrate_finite_sing(const std::function<double(double, double)>& f, double a,
                             double b, SingularitySpec sing, const QuadConfig& cfg) {
    return integrate_sing_core<double>(f, a, b, sing, cfg, nullptr, nullptr);
}

Complex integrate_finite_sing_c(const std::function<Complex(double, double)>& f, double a,
                                double b, SingularitySpec sing, const QuadConfig& cfg) {
    return integrate_sing_core<Complex>(f, a, b, sing, cfg, nullptr, nullptr);
}

double bessel_zero_estimate(double nu, int k) {
    double beta = (k + 0.5 * nu - 0.25) * kPi;
    return beta - (4.0 * nu * nu - 1.0) / (8.0 * beta);
}

Complex osc_blocks_c(const std::function<Complex(double)>& f,
                     const std::function<double(int)>& zero_at, double lower,
                     SingularitySpec head_sing, const QuadConfig& cfg,
                     const std::function<Complex(double, double)>* head_f) {
    return osc_engine<Complex>(f, head_f, zero_at, lower, head_sing, cfg);
}

double osc_blocks(const std::function<double(double)>& f,
                  const std::function<double(int)>& zero_at, double lower,
                  SingularitySpec head_sing, const QuadConfig& cfg,
                  const std::function<double(double, double)>* head_f) {
    return osc_engine<double>(f, head_f, zero_at, lower, head_sing, cfg);
}

void OscIntegralSpec::validate() const {
    if (!(mu.real() < 0.5))
        throw DomainError("OscIntegralSpec: Re(mu) must be < 1/2 for convergence at infinity");
    if (!(lower >= 0.0)) throw DomainError("OscIntegralSpec: lower limit must be >= 0");
    if (lower == 0.0 && !(mu.real() + nu.real() > -1.0))
        throw DomainError("OscIntegralSpec: Re(mu+nu) must be > -1 for convergence at 0");
    if (std::abs(nu.imag()) > 8.0)
        throw DomainError("OscIntegralSpec: |Im(nu)| > 8 is outside the validated range");
}

Complex bessel_tail(const OscIntegralSpec& spec, const QuadConfig& cfg) {
    spec.validate();
    // Sign-change brackets of Re[t^mu J_nu(t)]. Three phase contributions:
    // the Hankel phase t - pi Re(nu)/2 - pi/4, its first correction with
    // Re(4 nu^2 - 1) (the real-order value drifts badly for complex order),
    // and the log-phase of t^{i Im mu} riding on the dominant branch of J.
    const double nu_env = spec.nu.real();
    const double corr = 4.0 * (spec.nu.real() * spec.nu.real() -
                               spec.nu.imag() * spec.nu.imag()) - 1.0;
    const double drift = spec.nu.imag() <= 0.0 ? -spec.mu.imag() : spec.mu.imag();
    auto zeros = [nu_env, corr, drift](int k) {
        double beta = (k + 0.5 * nu_env - 0.25) * kPi;
        double t = std::max(beta, 1.0);
        for (int it = 0; it < 4; ++it) {
            double fval = t + drift * std::log(t) + corr / (8.0 * t) - beta;
            double fp = 1.0 + drift / t - corr / (8.0 * t * t);
            if (!(fp > 0.1)) return beta;  // outside the oscillatory regime
            double step = std::clamp(fval / fp, -0.45 * t, 0.45 * t);
            t -= step;
            if (!(t > 0.25)) return beta;
        }
        return t;
    };

    SingularitySpec head = SingularitySpec::none();
    double power_exp = spec.mu.real() + spec.nu.real();
    if (spec.lower == 0.0 && power_exp < 0.0) head = SingularitySpec::left(power_exp);

    const bool real_case = spec.mu.imag() == 0.0 && spec.nu.imag() == 0.0;
    if (real_case) {
        double mu = spec.mu.real(), nu = spec.nu.real();
        auto f = [mu, nu](double t) { return std::pow(t, mu) * bessel_j(nu, t); };
        return Complex(osc_engine<double>(f, static_cast<const std::function<double(double, double)>*>(nullptr),
                                          zeros, spec.lower, head, cfg),
                       0.0);
    }
    Complex mu = spec.mu, nu = spec.nu;
    auto f = [mu, nu](double t) {
        return std::pow(Complex(t, 0.0), mu) * bessel_j(nu, t);
    };
    return osc_engine<Complex>(f, static_cast<const std::function<Complex(double, double)>*>(nullptr),
                               zeros, spec.lower, head, cfg);
}

double sphere_surface_measure(int n) {
    if (n < 1) throw DomainError("sphere_surface_measure: n must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

namespace {

// Profile value next to its singular radius, using the exact distance when
// the profile provides a cancellation-free form.
double profile_eval_near(const RadialProfile& prof, double r, double dist) {
    if (prof.eval_near) return prof.eval_near(r, dist);
    return prof.eval(r);
}

// Tail of the radial mass integral via the inversion t = 1/r.
double poly_tail_mass(const RadialProfile& prof, int n, double r0, const QuadConfig& cfg) {
    double k = prof.decay_param;
    auto g = [&prof, n](double t) {
        if (t <= 0.0) return 0.0;
        return prof.eval(1.0 / t) * std::pow(t, -static_cast<double>(n) - 1.0);
    };
    SingularitySpec sing = SingularitySpec::none();
    double exp_at_zero = k - n - 1.0;
    if (exp_at_zero < 0.0) sing = SingularitySpec::left(exp_at_zero);
    return integrate_finite(g, 0.0, 1.0 / r0, sing, cfg);
}

} // namespace

double radial_mass_integral(const RadialProfile& profile, int n, const QuadConfig& cfg) {
    if (n < 2) throw DomainError("radial_mass_integral: n must be >= 2");
    auto f = [&profile, n](double r) {
        return profile.eval(r) * std::pow(r, n - 1.0);
    };
    double sigma = sphere_surface_measure(n);
    double start = 0.0;
    double sum = 0.0;

    if (profile.singular_at) {
        auto [rho0, expo] = *profile.singular_at;
        auto f2 = [&profile, n](double r, double d) {
            return profile_eval_near(profile, r, d) * std::pow(r, n - 1.0);
        };
        if (rho0 > 0.0)
            sum += integrate_finite_sing(f2, 0.0, rho0, SingularitySpec::right(expo), cfg);
        double r1 = rho0 + std::max(1.0, rho0);
        sum += integrate_finite_sing(f2, rho0, r1, SingularitySpec::left(expo), cfg);
        start = r1;
    }

    switch (profile.decay_class) {
        case RadialProfile::Decay::compact_support: {
            double R = profile.decay_param;
            if (R > start) sum += integrate_finite(f, start, R, SingularitySpec::none(), cfg);
            break;
        }
        case RadialProfile::Decay::schwartz: {
            double R = std::max(start + 8.0, 8.0);
            sum += integrate_finite(f, start, R, SingularitySpec::none(), cfg);
            double inc = std::numeric_limits<double>::max();
            for (int it = 0; it < 12 && std::fabs(inc) >= cfg.abs_tol / 4.0; ++it) {
                inc = integrate_finite(f, R, 2.0 * R, SingularitySpec::none(), cfg);
                sum += inc;
                R *= 2.0;
            }
            if (std::fabs(inc) >= cfg.abs_tol / 4.0)
                throw NoConvergence("radial_mass_integral: tail did not decay as schwartz");
            break;
        }
        case RadialProfile::Decay::poly: {
            if (!(profile.decay_param > n))
                throw DomainError("radial_mass_integral: profile not integrable (decay <= n)");
            double R = std::max(start + 8.0, 8.0);
            sum += integrate_finite(f, start, R, SingularitySpec::none(), cfg);
            sum += poly_tail_mass(profile, n, R, cfg);
            break;
        }
    }
    return sigma * sum;
}

double bochner_radial_ft(const RadialProfile& profile, int n, double xi_norm,
                         const QuadConfig& cfg) {
    if (n < 2) throw DomainError("bochner_radial_ft: n must be >= 2");
    if (!(xi_norm >= 0.0)) throw DomainError("bochner_radial_ft: xi_norm must be >= 0");
    if (xi_norm == 0.0) return radial_mass_integral(profile, n, cfg);

    const double nu = 0.5 * n - 1.0;
    const double c = 2.0 * kPi * xi_norm;
    auto f = [&profile, n, c, nu](double r) {
        if (r <= 0.0) return 0.0;
        double fr = profile.eval(r);
        if (fr == 0.0) return 0.0;
        return std::pow(r, 0.5 * n) * fr * bessel_j(nu, c * r);
    };
    auto zeros = [nu, c](int k) { return bessel_zero_estimate(nu, k) / c; };

    double start = 0.0;
    double head_extra = 0.0;
    SingularitySpec head = SingularitySpec::none();
    std::function<double(double, double)> head_f;
    if (profile.singular_at) {
        auto [rho0, expo] = *profile.singular_at;
        head_f = [&profile, n, c, nu](double r, double d) {
            double fr = profile_eval_near(profile, r, d);
            if (fr == 0.0) return 0.0;
            return std::pow(r, 0.5 * n) * fr * bessel_j(nu, c * r);
        };
        if (rho0 > 0.0)
            head_extra = integrate_finite_sing(head_f, 0.0, rho0,
                                               SingularitySpec::right(expo), cfg);
        start = rho0;
        head = SingularitySpec::left(expo);
    }

    if (profile.decay_class == RadialProfile::Decay::poly &&
        !(profile.decay_param > 0.5 * (n - 1.0)))
        throw DomainError("bochner_radial_ft: oscillatory tail not convergent for this decay");

    double integral;
    if (profile.decay_class == RadialProfile::Decay::compact_support) {
        double R = profile.decay_param;
        // Sum zero-blocks up to the support radius; no infinite tail.
        double acc = 0.0;
        int k0 = 1;
        while (zeros(k0) <= start + 1e-12 * (1.0 + start)) ++k0;
        double a = start;
        SingularitySpec s = head;
        bool first = true;
        int guard = 0;
        while (a < R && guard++ < 200000) {
            double b = std::min(zeros(k0), R);
            if (b <= a) { ++k0; continue; }
            if (first && head_f) {
                acc += integrate_finite_sing(head_f, a, b, s, cfg);
            } else {
                acc += integrate_finite(f, a, b, s, cfg);
            }
            first = false;
            s = SingularitySpec::none();
            a = b;
            ++k0;
        }
        integral = acc;
    } else {
        integral = osc_blocks(f, zeros, start, head, cfg, head_f ? &head_f : nullptr);
    }
    integral += head_extra;

    return 2.0 * kPi / std::pow(xi_norm, 0.5 * n - 1.0) * integral;
}

} // namespace restrlab
