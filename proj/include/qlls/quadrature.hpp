#pragma once
// Gauss-Legendre quadrature on [0,1]. Node count defaults to 200 everywhere a
// rule is needed; self-consistency across resolutions is part of the tests.

#include <vector>

namespace qlls {

struct GaussLegendre {
    std::vector<double> x;  // nodes in (0,1)
    std::vector<double> w;  // weights summing to 1

    static GaussLegendre on_unit_interval(int nodes);

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0, c = 0.0;  // Kahan, fixed node order
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double y = w[i] * f(x[i]) - c;
            const double t = s + y;
            c = (t - s) - y;
            s = t;
        }
        return s;
    }
};

inline constexpr int kDefaultQuadratureNodes = 200;

const GaussLegendre& default_quadrature();

}  // namespace qlls
