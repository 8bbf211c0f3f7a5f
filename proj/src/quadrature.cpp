#include "qlls/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qlls {

GaussLegendre GaussLegendre::on_unit_interval(int nodes) {
    if (nodes < 1) throw std::domain_error("GaussLegendre: node count must be positive");
    GaussLegendre q;
    q.x.resize(nodes);
    q.w.resize(nodes);
    const int n = nodes;
    // Newton iteration on P_n over [-1,1]; symmetric pairs share a solve.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        const double weight = 2.0 / ((1.0 - z * z) * pp * pp);
        // map [-1,1] -> [0,1]
        q.x[i] = 0.5 * (1.0 - z);
        q.x[n - 1 - i] = 0.5 * (1.0 + z);
        q.w[i] = 0.5 * weight;
        q.w[n - 1 - i] = 0.5 * weight;
    }
    return q;
}

const GaussLegendre& default_quadrature() {
    static const GaussLegendre q = GaussLegendre::on_unit_interval(kDefaultQuadratureNodes);
    return q;
}

}  // namespace qlls
