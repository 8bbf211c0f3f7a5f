#include "qlls/analytics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qlls/numerics.hpp"

namespace qlls {
namespace {

void require_nk(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("p(n,k) needs 0 <= k <= n");
    }
}

// Shared binomial prefactor of one (j,l) term of the double sum.
double log_binomials(int n, int k, int j, int l) {
    return lchoose(j + l, j) + lchoose(n - j - l, k - j);
}

double I_flat(int n, int k) {
    KahanSum sum;
    for (int j = 0; j <= k; ++j) {
        for (int l = 0; l <= n - k; ++l) {
            const int r = k - j + l;
            sum.add(std::exp(log_binomials(n, k, j, l) + lbeta(n - r + 1.0, r + 1.0)));
        }
    }
    return sum.value();
}

double I_bures(int n, int k) {
    KahanSum sum;
    for (int j = 0; j <= k; ++j) {
        for (int l = 0; l <= n - k; ++l) {
            const int r = k - j + l;
            const double d = static_cast<double>(n - 2 * r);
            const double rational = (d * d + n + 1.0) / ((r + 0.5) * (n - r + 0.5));
            sum.add(rational * std::exp(log_binomials(n, k, j, l) + lbeta(n - r + 1.5, r + 1.5)));
        }
    }
    return 2.0 / M_PI * sum.value();
}

// Design-averaged moment sum_U qbar^(k+h) (1-qbar)^(n-k) at state parameter
// lambda; the classical family pins U to the identity, so qbar = lambda.
double design_moment(const MeasureSpec& measure, const DesignSet& design, double lambda, int n,
                     int k, int h) {
    if (!measure.haar_unitary_part()) {
        return ipow(lambda, k + h) * ipow(1.0 - lambda, n - k);
    }
    KahanSum sum;
    for (const Unitary2& u : design.elements) {
        const double q = head_probability(lambda, u);
        sum.add(ipow(q, k + h) * ipow(1.0 - q, n - k));
    }
    return sum.value();
}

void require_design_degree(const MeasureSpec& measure, const DesignSet& design, int n) {
    if (measure.haar_unitary_part() && design.declared_t < n + 1) {
        throw std::invalid_argument("design certifies moments only up to t = " +
                                    std::to_string(design.declared_t) + ", need t >= " +
                                    std::to_string(n + 1));
    }
}

}  // namespace

double p_classical(int n, int k) {
    require_nk(n, k);
    return (k + 1.0) / (n + 2.0);
}

double p_classical_beta(int n, int k) {
    require_nk(n, k);
    return std::exp(lbeta(n - k + 1.0, k + 2.0) - lbeta(n - k + 1.0, k + 1.0));
}

double I_value(const MeasureSpec& measure, int n, int k) {
    require_nk(n, k);
    switch (measure.family) {
        case Measure::flat:
            return I_flat(n, k);
        case Measure::bures:
            return I_bures(n, k);
        default:
            throw std::invalid_argument("normalization integral is defined for flat and bures");
    }
}

double p_qlls(const MeasureSpec& measure, int n, int k) {
    require_nk(n, k);
    if (!measure.haar_unitary_part()) {
        return p_classical(n, k);
    }
    return (k + 1.0) / (n + 2.0) * I_value(measure, n + 1, k + 1) / I_value(measure, n, k);
}

double p_design_exact(const MeasureSpec& measure, int n, int k, const DesignSet& design,
                      const GaussLegendre& quad) {
    require_nk(n, k);
    require_design_degree(measure, design, n);
    KahanSum num;
    KahanSum den;
    for (std::size_t i = 0; i < quad.x.size(); ++i) {
        const double weight = quad.w[i] * measure.weight(quad.x[i]);
        const double lambda = measure.g(quad.x[i]);
        num.add(weight * design_moment(measure, design, lambda, n, k, 1));
        den.add(weight * design_moment(measure, design, lambda, n, k, 0));
    }
    if (den.value() <= 0.0) {
        throw std::runtime_error("degenerate normalization in p_design_exact");
    }
    return num.value() / den.value();
}

double p_discretized(const MeasureSpec& measure, int n, int k, const DesignSet& design, int N) {
    require_nk(n, k);
    require_design_degree(measure, design, n);
    const DiscreteWeights grid = discrete_weights(measure, N);
    KahanSum num;
    KahanSum den;
    for (int i = 0; i < N; ++i) {
        num.add(grid.omega[i] * design_moment(measure, design, grid.w0[i], n, k, 1));
        den.add(grid.omega[i] * design_moment(measure, design, grid.w0[i], n, k, 0));
    }
    if (den.value() <= 0.0) {
        throw std::runtime_error("degenerate normalization in p_discretized");
    }
    return num.value() / den.value();
}

void write_analytic_csv(std::ostream& out, const std::vector<MeasureSpec>& measures,
                        const std::vector<int>& n_list) {
    out << "# conditional probabilities p(n,k); design evaluations use the smallest design whose "
           "order covers n+1\n";
    out << "measure,n,k,p_classical,p_qlls,p_design_exact,p_discretized_N50\n";
    const GaussLegendre& quad = default_quadrature();
    char buf[64];
    for (const MeasureSpec& measure : measures) {
        for (int n : n_list) {
            const DesignSet& design = n + 1 <= clifford_design().declared_t
                                          ? clifford_design()
                                          : icosahedral_design();
            require_design_degree(measure, design, n);
            for (int k = 0; k <= n; ++k) {
                out << measure.name() << ',' << n << ',' << k;
                const double cols[4] = {p_classical(n, k), p_qlls(measure, n, k),
                                        p_design_exact(measure, n, k, design, quad),
                                        p_discretized(measure, n, k, design, 50)};
                for (double v : cols) {
                    std::snprintf(buf, sizeof(buf), ",%.12g", v);
                    out << buf;
                }
                out << '\n';
            }
        }
    }
}

}  // namespace qlls
