#include "restrlab/restriction_lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "restrlab/fitting.hpp"

namespace restrlab {

namespace {
constexpr double kPi = std::numbers::pi;

// Inner radial integral of the cap mass at fixed slab height t:
// int_a^{rmax} rho^{n-2} (rho^2-a^2)^{-s} [extra] drho, a = sqrt(1-t^2).
double cap_inner(double a, double rmax, double t, int n, double s, bool exact,
                 const QuadConfig& cfg) {
    if (!(rmax > a)) return 0.0;
    auto f = [a, t, n, s, exact](double rho, double dist) {
        double q = dist * (rho + a);  // rho^2 - a^2 without cancellation
        double v = std::pow(rho, n - 2.0) * std::pow(q, -s);
        if (exact) v *= std::pow(rho * rho + t * t, -0.5 * n);
        return v;
    };
    return integrate_finite_sing(f, a, rmax, SingularitySpec::left(-s), cfg);
}

} // namespace

double knapp_mass(const FracParam& p, const KnappGeometry& g, const QuadConfig& cfg,
                  bool exact_cylinder, double radius_scale) {
    p.validate();
    g.validate();
    if (p.n != g.n) throw ValidationError("knapp_mass: dimension mismatch");
    const double s = p.s, eps = g.eps;
    const int n = p.n;
    const double rmax = radius_scale * g.cap_halfwidth();
    const double sq = std::sqrt(eps);

    // Outer variable t = 1 - eps + v^2 smooths the (t - (1-eps))^{1-s}
    // vanishing at the lower slab edge; near v = sqrt(eps) the inner integral
    // grows like a^{n-1-2s}, declared as a right-endpoint exponent.
    auto eval_outer = [&](double v, double sq_minus_v) {
        double eps_minus_v2 = sq_minus_v * (sq + v);  // eps - v^2
        double t = 1.0 - eps_minus_v2;
        double a2 = eps_minus_v2 * (2.0 - eps_minus_v2);  // 1 - t^2
        double a = std::sqrt(std::max(a2, 0.0));
        return cap_inner(a, rmax, t, n, s, exact_cylinder, cfg) * 2.0 * v;
    };
    double q_exp = 0.5 * (n - 1.0) - s;  // inner ~ a^{2 q_exp}; a ~ dist^{1/2}
    double val;
    if (q_exp < 0.0) {
        auto outer = [&](double v, double dist) { return eval_outer(v, dist); };
        val = integrate_finite_sing(outer, 0.0, sq, SingularitySpec::right(q_exp), cfg);
    } else {
        auto outer = [&](double v) { return eval_outer(v, sq - v); };
        val = integrate_finite(outer, 0.0, sq, SingularitySpec::none(), cfg);
    }
    if (exact_cylinder)
        val *= kernel_constant(p) * sphere_surface_measure(n - 1 >= 1 ? n - 1 : 1);
    return val;
}

double knapp_box_mass(const FracParam& p, const KnappGeometry& g, const QuadConfig& cfg) {
    p.validate();
    g.validate();
    if (p.n != g.n) throw ValidationError("knapp_box_mass: dimension mismatch");
    if (p.n == 2) return knapp_mass(p, g, cfg, /*exact_cylinder=*/true);
    if (p.n != 3) throw DomainError("knapp_box_mass: implemented for n in {2,3}");

    const double s = p.s, eps = g.eps;
    const double R = g.cap_halfwidth();
    const double sq = std::sqrt(eps);
    QuadConfig inner_cfg = cfg;
    inner_cfg.abs_tol = std::max(cfg.abs_tol, 1e-11);

    // x' ranges over the square [-R,R]^2 minus the disk of radius a; by
    // symmetry 8 copies of theta in [0, pi/4] with rho up to R/cos(theta).
    auto eval_outer = [&](double v, double sq_minus_v) {
        double eps_minus_v2 = sq_minus_v * (sq + v);
        double t = 1.0 - eps_minus_v2;
        double a2 = eps_minus_v2 * (2.0 - eps_minus_v2);
        double a = std::sqrt(std::max(a2, 0.0));
        auto over_theta = [&](double th) {
            double rmax = R / std::cos(th);
            auto f = [a, t, s](double rho, double d) {
                double q = d * (rho + a);
                return rho * std::pow(q, -s) *
                       std::pow(rho * rho + t * t, -1.5);
            };
            if (!(rmax > a)) return 0.0;
            return integrate_finite_sing(f, a, rmax, SingularitySpec::left(-s), inner_cfg);
        };
        double ang = integrate_finite(over_theta, 0.0, 0.25 * kPi,
                                      SingularitySpec::none(), inner_cfg);
        return 8.0 * ang * 2.0 * v;
    };
    double q_exp = 0.5 * (p.n - 1.0) - s;
    double val;
    if (q_exp < 0.0) {
        auto outer = [&](double v, double dist) { return eval_outer(v, dist); };
        val = integrate_finite_sing(outer, 0.0, sq, SingularitySpec::right(q_exp), cfg);
    } else {
        auto outer = [&](double v) { return eval_outer(v, sq - v); };
        val = integrate_finite(outer, 0.0, sq, SingularitySpec::none(), cfg);
    }
    return kernel_constant(p) * val;
}

namespace {

// Euler-Maclaurin remainder of sum_{k>=K} int_0^pi sin^p(w) (k pi + w)^{-p} dw.
double sinc_power_tail(double p, int K, const QuadConfig& cfg) {
    auto moment = [p, K, &cfg](double shift_power) {
        auto f = [p, shift_power, K](double w) {
            return std::pow(std::sin(w), p) * std::pow(K * kPi + w, shift_power);
        };
        return integrate_finite(f, 0.0, kPi, SingularitySpec::none(), cfg);
    };
    double integral = moment(1.0 - p) / (kPi * (p - 1.0));
    double g_k = moment(-p);
    double g_prime = -p * kPi * moment(-p - 1.0);
    return integral + 0.5 * g_k - g_prime / 12.0;
}

thread_local std::map<std::pair<double, double>, double> g_phi_cache;

} // namespace

double sinc_power_integral(double p, const QuadConfig& cfg) {
    if (!(p > 1.0)) throw DomainError("sinc_power_integral: requires p > 1");
    auto key = std::make_pair(p, cfg.abs_tol);
    auto it = g_phi_cache.find(key);
    if (it != g_phi_cache.end()) return it->second;

    auto head = [p](double v) {
        if (v == 0.0) return 1.0;
        return std::pow(std::sin(v) / v, p);
    };
    double total = integrate_finite(head, 0.0, kPi, SingularitySpec::none(), cfg);
    const int K = 64;
    for (int k = 1; k < K; ++k) {
        auto f = [p](double v) {
            return std::pow(std::fabs(std::sin(v)), p) * std::pow(v, -p);
        };
        total += integrate_finite(f, k * kPi, (k + 1) * kPi, SingularitySpec::none(), cfg);
    }
    total += sinc_power_tail(p, K, cfg);
    g_phi_cache[key] = total;
    return total;
}

double knapp_norm_factor(double c, double p, const QuadConfig& cfg) {
    if (!(c > 0.0)) throw DomainError("knapp_norm_factor: c must be positive");
    if (p == 1.0) throw DomainError("knapp_norm_factor: the factor diverges at p = 1");
    if (!(p > 1.0)) throw DomainError("knapp_norm_factor: requires p > 1");
    return 2.0 * std::pow(c, p - 1.0) * std::pow(kPi, -p) * sinc_power_integral(p, cfg);
}

double knapp_norm_factor_direct(double c, double p, const QuadConfig& cfg) {
    if (!(c > 0.0) || !(p > 1.0))
        throw DomainError("knapp_norm_factor_direct: need c > 0, p > 1");
    const int K = 64;
    auto f = [c, p](double u) {
        if (u == 0.0) return std::pow(c / kPi, p);
        return std::pow(std::fabs(std::sin(c * u)) / (kPi * u), p);
    };
    double total = 0.0;
    for (int k = 0; k < K; ++k)
        total += integrate_finite(f, k * kPi / c, (k + 1) * kPi / c,
                                  SingularitySpec::none(), cfg);
    // Remaining tail in the scaled variable equals the Phi(p) remainder.
    total += std::pow(c, p - 1.0) * std::pow(kPi, -p) * sinc_power_tail(p, K, cfg);
    return 2.0 * total;
}

double knapp_norm(const KnappGeometry& g, double p, const QuadConfig& cfg) {
    g.validate();
    if (p == 1.0) throw DomainError("knapp_norm: f_eps is not in L^1");
    if (!(p > 1.0)) throw DomainError("knapp_norm: requires p > 1");
    double thin = knapp_norm_factor(kPi * g.eps, p, cfg);
    double wide = knapp_norm_factor(2.0 * kPi * g.cap_halfwidth(), p, cfg);
    return std::pow(thin * std::pow(wide, g.n - 1.0), 1.0 / p);
}

double necessity_scan(const FracParam& p_frac, const ExponentPair& ep,
                      const std::vector<double>& eps_grid, const QuadConfig& cfg) {
    p_frac.validate();
    ep.validate();
    double p_limit = 2.0 * p_frac.n / (p_frac.n + 2.0 * p_frac.s - 1.0);
    if (!(ep.p < p_limit))
        throw DomainError("necessity_scan: p outside the admissible range");
    if (eps_grid.size() < 4) throw DomainError("necessity_scan: need >= 4 eps values");
    std::vector<double> ratios;
    ratios.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        KnappGeometry g{p_frac.n, eps};
        double mass = knapp_mass(p_frac, g, cfg);
        double norm = knapp_norm(g, ep.p, cfg);
        ratios.push_back(std::pow(mass, 1.0 / ep.q) / norm);
    }
    return fit_exponent_smallest(eps_grid, ratios, 6);
}

double weighted_ft_integral(const FracParam& p_frac, const RadialProfile& f, double q,
                            const QuadConfig& cfg) {
    p_frac.validate();
    if (!(q >= 1.0)) throw DomainError("weighted_ft_integral: q must be >= 1");
    const int n = p_frac.n;
    RadialProfile kern = kernel_profile(p_frac);
    QuadConfig inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol, 1e-11);

    auto w = [&](double rho, double dist) {
        double a = kern.eval_near(rho, dist);
        if (a == 0.0) return 0.0;
        double fh = std::fabs(bochner_radial_ft(f, n, rho, inner));
        return std::pow(fh, q) * a * std::pow(rho, n - 1.0);
    };
    const double r0 = p_frac.r;
    double total = integrate_finite_sing(w, r0, r0 + 1.0, SingularitySpec::left(-p_frac.s), cfg);
    double lo = r0 + 1.0;
    double inc = std::numeric_limits<double>::max();
    for (int it = 0; it < 10 && std::fabs(inc) >= cfg.abs_tol / 4.0; ++it) {
        auto plain = [&](double rho) { return w(rho, rho - r0); };
        inc = integrate_finite(plain, lo, 2.0 * lo, SingularitySpec::none(), cfg);
        total += inc;
        lo *= 2.0;
    }
    return std::pow(total * sphere_surface_measure(n), 1.0 / q);
}

double radial_lp_norm(const RadialProfile& f, double p, int n, const QuadConfig& cfg) {
    if (!(p >= 1.0)) throw DomainError("radial_lp_norm: p must be >= 1");
    RadialProfile g;
    g.eval = [&f, p](double r) { return std::pow(std::fabs(f.eval(r)), p); };
    g.decay_class = f.decay_class;
    g.decay_param = f.decay_class == RadialProfile::Decay::poly ? f.decay_param * p
                                                                : f.decay_param;
    return std::pow(radial_mass_integral(g, n, cfg), 1.0 / p);
}

double restriction_quotient(const FracParam& p_frac, const ExponentPair& ep,
                            const RadialProfile& f, const QuadConfig& cfg) {
    ep.validate();
    double lhs = weighted_ft_integral(p_frac, f, ep.q, cfg);
    double denom = radial_lp_norm(f, ep.p, p_frac.n, cfg);
    if (denom == 0.0) return 0.0;
    return lhs / denom;
}

VerificationRecord tomas_stein_identity(const FracParam& p_frac, const RadialProfile& f,
                                        const QuadConfig& cfg) {
    p_frac.validate();
    if (p_frac.n > 3)
        throw DomainError("tomas_stein_identity: n in {2,3} (convolution cost)");
    const int n = p_frac.n;

    double lhs2 = weighted_ft_integral(p_frac, f, 2.0, cfg);
    double lhs = lhs2 * lhs2;

    // Convolution side: pair f with (transform of the kernel) * f using a
    // dense table of the transform.
    double r_cut = 0.5;
    while (r_cut < 12.0 && std::fabs(f.eval(r_cut)) > 1e-14) r_cut += 0.5;
    double u_max = 2.0 * r_cut + 1.0;
    QuadConfig tab_cfg = cfg;
    tab_cfg.abs_tol = std::max(cfg.abs_tol, 1e-10);
    FtRieszTable table(p_frac, u_max, 1.0 / 128.0, tab_cfg);

    QuadConfig mid_cfg = cfg;
    mid_cfg.abs_tol = std::max(cfg.abs_tol * 10.0, 1e-9);
    mid_cfg.rel_tol = std::max(cfg.rel_tol * 10.0, 1e-8);
    QuadConfig ang_cfg = mid_cfg;

    double sig_inner = sphere_surface_measure(n - 1 >= 1 ? n - 1 : 1);
    auto conv = [&](double t) {  // (ft_kernel * f)(|x| = t)
        auto radial = [&](double rho) {
            double fr = f.eval(rho);
            if (fr == 0.0) return 0.0;
            auto ang = [&](double th) {
                double d2 = t * t + rho * rho - 2.0 * t * rho * std::cos(th);
                double d = std::sqrt(std::max(d2, 0.0));
                return table(d) * std::pow(std::sin(th), n - 2.0);
            };
            double a = integrate_finite(ang, 0.0, kPi, SingularitySpec::none(), ang_cfg);
            return fr * std::pow(rho, n - 1.0) * sig_inner * a;
        };
        return integrate_finite(radial, 0.0, r_cut, SingularitySpec::none(), mid_cfg);
    };
    auto outer = [&](double t) {
        double ft = f.eval(t);
        if (ft == 0.0) return 0.0;
        return ft * conv(t) * std::pow(t, n - 1.0);
    };
    double rhs = sphere_surface_measure(n) *
                 integrate_finite(outer, 0.0, r_cut, SingularitySpec::none(), mid_cfg);

    return make_record("weighted transform energy vs convolution pairing",
                       "plancherel-pairing-identity", lhs, rhs, 1e-4,
                       PassRule::absolute_or_relative);
}

} // namespace restrlab
