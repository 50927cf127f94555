#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>

namespace restrlab {

// A radial function of |x| with just enough metadata to integrate it:
// decay class at infinity and an optional interior algebraic singularity.
struct RadialProfile {
    enum class Decay { schwartz, poly, compact_support };

    std::function<double(double)> eval;
    Decay decay_class = Decay::schwartz;
    double decay_param = 0.0;  // poly: |f| <~ r^{-k}; compact: support radius R
    std::optional<std::pair<double, double>> singular_at;  // (radius, exponent)

    // Optional cancellation-free evaluation next to the singular radius:
    // eval_near(r, dist) with dist = |r - singular radius| supplied exactly.
    std::function<double(double, double)> eval_near;
};

inline RadialProfile gaussian_profile(double lambda = 1.0) {
    RadialProfile p;
    p.eval = [lambda](double r) { return std::exp(-M_PI * lambda * lambda * r * r); };
    p.decay_class = RadialProfile::Decay::schwartz;
    return p;
}

inline RadialProfile constant_profile(double value) {
    RadialProfile p;
    p.eval = [value](double) { return value; };
    p.decay_class = RadialProfile::Decay::poly;
    p.decay_param = 0.0;
    return p;
}

} // namespace restrlab
