#pragma once

#include "restrlab/errors.hpp"

namespace restrlab {

// Truncation control for power-series evaluation (Bessel, hypergeometric).
struct SeriesConfig {
    double rel_tol = 1e-16;          // stop when |term| < rel_tol * |partial sum|
    int max_terms = 500;
    double cancellation_guard = 1e12; // max allowed ratio max|term| / |result|

    void validate() const {
        if (!(rel_tol > 0.0)) throw ValidationError("SeriesConfig.rel_tol must be > 0");
        if (max_terms < 16) throw ValidationError("SeriesConfig.max_terms must be >= 16");
        if (!(cancellation_guard >= 1.0)) throw ValidationError("SeriesConfig.cancellation_guard must be >= 1");
    }
};

// One knob set for every quadrature in the library.
struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdiv = 2000;      // adaptive intervals per finite integral
    int tail_zero_blocks = 24;  // Bessel-zero blocks before series acceleration
    int accel_order = 6;        // iterated-averaging rounds on block partial sums

    void validate() const {
        if (!(abs_tol > 0.0)) throw ValidationError("QuadConfig.abs_tol must be > 0");
        if (!(rel_tol > 0.0)) throw ValidationError("QuadConfig.rel_tol must be > 0");
        if (max_subdiv < 8) throw ValidationError("QuadConfig.max_subdiv must be >= 8");
        if (tail_zero_blocks < 8) throw ValidationError("QuadConfig.tail_zero_blocks must be >= 8");
        if (accel_order < 2) throw ValidationError("QuadConfig.accel_order must be >= 2");
    }
};

} // namespace restrlab
