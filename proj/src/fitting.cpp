#include "restrlab/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "restrlab/errors.hpp"

namespace restrlab {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw FitError("fit_line: need matching vectors of length >= 2");
    const size_t n = x.size();
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw FitError("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double r = y[i] - (f.intercept + f.slope * x[i]);
        ss += r * r;
    }
    f.rms_residual = std::sqrt(ss / n);
    return f;
}

double fit_exponent_smallest(const std::vector<double>& eps,
                             const std::vector<double>& values, int use_count) {
    if (eps.size() != values.size() || eps.size() < 2)
        throw FitError("fit_exponent_smallest: need matching vectors");
    std::vector<size_t> idx(eps.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return eps[a] < eps[b]; });
    size_t take = std::min<size_t>(idx.size(), std::max(2, use_count));
    std::vector<double> lx, ly;
    for (size_t i = 0; i < take; ++i) {
        double e = eps[idx[i]], v = values[idx[i]];
        if (!(e > 0.0) || !(v > 0.0))
            throw FitError("fit_exponent_smallest: nonpositive data in log fit");
        lx.push_back(std::log(e));
        ly.push_back(std::log(v));
    }
    return fit_line(lx, ly).slope;
}

} // namespace restrlab
