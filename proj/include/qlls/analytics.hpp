#pragma once
// Exact conditional probabilities p_{n,k}: classical closed form, the
// double-sum normalization integrals for the flat and Bures measures, the
// finite-design quadrature form, and its midpoint discretization.

#include <iosfwd>

#include "qlls/designs.hpp"
#include "qlls/measures.hpp"
#include "qlls/quadrature.hpp"

namespace qlls {

// (k+1)/(n+2).
double p_classical(int n, int k);

// Same value through the Beta-integral route B(n-k+1,k+2)/B(n-k+1,k+1),
// evaluated with log-gamma; independent of p_classical's arithmetic.
double p_classical_beta(int n, int k);

// Normalization integral I_{n,k} for flat/bures in the closed double-sum
// form; positive, symmetric in k <-> n-k.
double I_value(const MeasureSpec& measure, int n, int k);

// (k+1)/(n+2) * I_{n+1,k+1} / I_{n,k}; classical family reduces to p_classical.
double p_qlls(const MeasureSpec& measure, int n, int k);

// Exact-design evaluation: ratio of weight-quadrature sums of
// sum_U q^(k+1) (1-q)^(n-k) over the design projectors (q = head probability
// of the rotated diagonal state). Requires design.declared_t >= n+1 for the
// Haar families; the classical family uses the identity point mass.
double p_design_exact(const MeasureSpec& measure, int n, int k, const DesignSet& design,
                      const GaussLegendre& quad);

// Midpoint-discretized form on the N-segment grid of discrete_weights.
double p_discretized(const MeasureSpec& measure, int n, int k, const DesignSet& design, int N);

// p(n,k) + p(n,n-k) - 1 for any evaluator.
template <class P>
double duality_residual(P&& p, int n, int k) {
    return p(n, k) + p(n, n - k) - 1.0;
}

// CSV block: '#' header comment then
// measure,n,k,p_classical,p_qlls,p_design_exact,p_discretized_N50
// with 12 significant digits.
void write_analytic_csv(std::ostream& out, const std::vector<MeasureSpec>& measures,
                        const std::vector<int>& n_list);

}  // namespace qlls
