#include <cstdio>
#include <cmath>
#include "restrlab/fouriertransforms.hpp"
#include "restrlab/interpolation.hpp"
using namespace restrlab;
int main() {
    auto grid = default_m0_xi_grid();
    for (double y : {6.5, 7.0, 8.0}) {
        try { std::printf("m0(y=%.1f) = %.6g\n", y, m0_bound(y, 2, grid)); }
        catch (const std::exception& e) { std::printf("m0(y=%.1f) EXC: %s\n", y, e.what()); }
    }
    // check primary vs by_parts at large xi (decay-fit regime)
    FracParam p{0.5, 2, 1.0};
    for (double xi : {15.7, 97.3, 463.1, 871.9}) {
        double a = ft_riesz(p, xi, FtForm::primary_integral);
        double b = ft_riesz(p, xi, FtForm::by_parts);
        std::printf("xi=%8.1f primary %.10e by_parts %.10e diff %.2e\n", xi, a, b, a-b);
    }
    return 0;
}
