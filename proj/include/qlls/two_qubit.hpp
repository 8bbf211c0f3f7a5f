#pragma once
// Two-copy averaged states and measurement-minimized quantum discord.
//
// The two-copy average of a one-parameter diagonal ensemble rotated by a
// 2-design is Bell-diagonal, so the discord minimizer can be cross-checked
// against the closed form for that family.

#include <array>

#include "qlls/designs.hpp"
#include "qlls/measures.hpp"
#include "qlls/quadrature.hpp"
#include "qlls/su2.hpp"

namespace qlls {

// Row-major 4x4 complex matrix.
struct Complex4x4 {
    std::array<cd, 16> m{};

    static Complex4x4 zero() { return Complex4x4{}; }
    static Complex4x4 identity();

    cd& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    const cd& at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    cd trace() const { return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3); }
    void add_scaled(const Complex4x4& other, double s);
};

Complex4x4 kron(const Complex2x2& a, const Complex2x2& b);

// tr(a * b), without forming the product.
cd trace_product(const Complex4x4& a, const Complex4x4& b);

// (I + cx X(x)X + cy Y(x)Y + cz Z(x)Z) / 4; Bell-diagonal for |c_j| <= 1.
Complex4x4 pauli_diagonal_state(double cx, double cy, double cz);

// Correlation coefficients c_j = tr(rho sigma_j(x)sigma_j).
struct PauliCorrelations {
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
};
PauliCorrelations pauli_correlations(const Complex4x4& rho);

// E[(U rho_lambda U')^(x2)] over the design elements and the lambda measure.
// The classical family keeps U at the identity.
Complex4x4 two_copy_average(const MeasureSpec& measure, const DesignSet& design,
                            const GaussLegendre& quad);

Complex2x2 partial_trace_first(const Complex4x4& rho);
Complex2x2 partial_trace_second(const Complex4x4& rho);

// Eigenvalues of a Hermitian 4x4, ascending, via a cyclic Jacobi sweep on the
// 8x8 real symmetric embedding [[A, -B], [B, A]].
std::array<double, 4> hermitian_eigenvalues(const Complex4x4& rho);

// -sum p log2 p with 0 log 0 = 0; negative inputs below -1e-9 are rejected.
double entropy_bits(const double* p, int count);

// Von Neumann entropy in bits; validates trace, hermiticity, positivity.
double state_entropy_bits(const Complex4x4& rho);

// Two-sided measurement-induced discord in bits:
//   min over local product bases of [S(dephased rho) - S(rho)]
//   minus the same deficit for each marginal.
// Minimized by a 24x24x24x24 angle grid refined by coordinate descent.
struct DiscordResult {
    double value_bits = 0.0;
    double theta_a = 0.0, phi_a = 0.0;
    double theta_b = 0.0, phi_b = 0.0;
};
DiscordResult measurement_discord(const Complex4x4& rho);

// Closed form for Bell-diagonal states: 1 + sum lambda log2 lambda
// + H2((1 + max|c_j|) / 2); marginal terms vanish for this family.
double bell_diagonal_discord_bits(double cx, double cy, double cz);

}  // namespace qlls
