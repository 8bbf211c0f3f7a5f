#include "qlls/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qlls {
namespace {

constexpr double kEigenFloor = -1e-9;

double h2_bits(double x) {
    double parts[2] = {x, 1.0 - x};
    return entropy_bits(parts, 2);
}

// Measurement basis vector m_a for Bloch angles (theta, phi).
std::array<cd, 2> basis_vector(double theta, double phi, int a) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cd e = std::polar(1.0, phi);
    if (a == 0) {
        return {cd(c, 0.0), e * s};
    }
    return {-std::conj(e) * s, cd(c, 0.0)};
}

// Diagonal of rho in the product basis m_a(x)m_b, plus its two marginals.
struct MeasuredDiagonal {
    double joint[4];
    double first[2];
    double second[2];
};

MeasuredDiagonal measure_diagonal(const Complex4x4& rho, double theta_a, double phi_a,
                                  double theta_b, double phi_b) {
    MeasuredDiagonal out{};
    for (int a = 0; a < 2; ++a) {
        const std::array<cd, 2> ma = basis_vector(theta_a, phi_a, a);
        for (int b = 0; b < 2; ++b) {
            const std::array<cd, 2> mb = basis_vector(theta_b, phi_b, b);
            const cd u[4] = {ma[0] * mb[0], ma[0] * mb[1], ma[1] * mb[0], ma[1] * mb[1]};
            cd p = 0.0;
            for (int r = 0; r < 4; ++r) {
                for (int s = 0; s < 4; ++s) {
                    p += std::conj(u[r]) * rho.at(r, s) * u[s];
                }
            }
            out.joint[2 * a + b] = p.real();
            out.first[a] += p.real();
            out.second[b] += p.real();
        }
    }
    return out;
}

// Entropy deficit the discord minimizes over product bases.
double dephasing_objective(const Complex4x4& rho, double theta_a, double phi_a, double theta_b,
                           double phi_b) {
    const MeasuredDiagonal d = measure_diagonal(rho, theta_a, phi_a, theta_b, phi_b);
    return entropy_bits(d.joint, 4) - entropy_bits(d.first, 2) - entropy_bits(d.second, 2);
}

void validate_density(const Complex4x4& rho) {
    if (std::abs(rho.trace() - 1.0) > kDensityTol) {
        throw std::invalid_argument("two-qubit state must have unit trace");
    }
    double herm = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            herm += std::norm(rho.at(r, s) - std::conj(rho.at(s, r)));
        }
    }
    if (std::sqrt(herm) > kDensityTol) {
        throw std::invalid_argument("two-qubit state must be Hermitian");
    }
    for (double e : hermitian_eigenvalues(rho)) {
        if (e < kEigenFloor) {
            throw std::invalid_argument("two-qubit state must be positive semidefinite");
        }
    }
}

// Cyclic Jacobi on a symmetric 8x8; diag holds eigenvalues afterwards.
void jacobi8(double a[8][8]) {
    for (int sweep = 0; sweep < 128; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 8; ++p) {
            for (int q = p + 1; q < 8; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-28) {
            return;
        }
        for (int p = 0; p < 8; ++p) {
            for (int q = p + 1; q < 8; ++q) {
                if (a[p][q] == 0.0) {
                    continue;
                }
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double apq = a[p][q];
                for (int k = 0; k < 8; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0.0;
            }
        }
    }
}

}  // namespace

Complex4x4 Complex4x4::identity() {
    Complex4x4 out;
    for (int r = 0; r < 4; ++r) {
        out.at(r, r) = 1.0;
    }
    return out;
}

void Complex4x4::add_scaled(const Complex4x4& other, double s) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] += s * other.m[i];
    }
}

Complex4x4 kron(const Complex2x2& a, const Complex2x2& b) {
    Complex4x4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out.at(2 * i + k, 2 * j + l) =
                        a.m[static_cast<std::size_t>(2 * i + j)] *
                        b.m[static_cast<std::size_t>(2 * k + l)];
                }
            }
        }
    }
    return out;
}

cd trace_product(const Complex4x4& a, const Complex4x4& b) {
    cd sum = 0.0;
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            sum += a.at(r, s) * b.at(s, r);
        }
    }
    return sum;
}

Complex4x4 pauli_diagonal_state(double cx, double cy, double cz) {
    Complex4x4 out = Complex4x4::identity();
    out.add_scaled(kron(pauli_x().matrix(), pauli_x().matrix()), cx);
    out.add_scaled(kron(pauli_y().matrix(), pauli_y().matrix()), cy);
    out.add_scaled(kron(pauli_z().matrix(), pauli_z().matrix()), cz);
    for (cd& v : out.m) {
        v *= 0.25;
    }
    return out;
}

PauliCorrelations pauli_correlations(const Complex4x4& rho) {
    PauliCorrelations out;
    out.xx = trace_product(rho, kron(pauli_x().matrix(), pauli_x().matrix())).real();
    out.yy = trace_product(rho, kron(pauli_y().matrix(), pauli_y().matrix())).real();
    out.zz = trace_product(rho, kron(pauli_z().matrix(), pauli_z().matrix())).real();
    return out;
}

Complex4x4 two_copy_average(const MeasureSpec& measure, const DesignSet& design,
                            const GaussLegendre& quad) {
    // The second moment of the unitary average needs at least a 2-design.
    if (measure.haar_unitary_part() && design.declared_t < 2)
        throw std::invalid_argument("two_copy_average: design order must be at least 2");
    Complex4x4 acc;
    double total_weight = 0.0;
    const double element_count =
        measure.haar_unitary_part() ? static_cast<double>(design.elements.size()) : 1.0;
    for (std::size_t i = 0; i < quad.x.size(); ++i) {
        const double weight = quad.w[i] * measure.weight(quad.x[i]);
        const double lambda = measure.g(quad.x[i]);
        const Complex2x2 rho_lambda = DiagonalState(lambda).matrix();
        if (measure.haar_unitary_part()) {
            for (const Unitary2& u : design.elements) {
                const Complex2x2 rotated = conjugate(u, rho_lambda);
                acc.add_scaled(kron(rotated, rotated), weight / element_count);
            }
        } else {
            acc.add_scaled(kron(rho_lambda, rho_lambda), weight);
        }
        total_weight += weight;
    }
    if (total_weight <= 0.0) {
        throw std::runtime_error("degenerate weight in two_copy_average");
    }
    for (cd& v : acc.m) {
        v /= total_weight;
    }
    return acc;
}

Complex2x2 partial_trace_first(const Complex4x4& rho) {
    Complex2x2 out = Complex2x2::zero();
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            out.m[static_cast<std::size_t>(2 * k + l)] = rho.at(k, l) + rho.at(2 + k, 2 + l);
        }
    }
    return out;
}

Complex2x2 partial_trace_second(const Complex4x4& rho) {
    Complex2x2 out = Complex2x2::zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.m[static_cast<std::size_t>(2 * i + j)] =
                rho.at(2 * i, 2 * j) + rho.at(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const Complex4x4& rho) {
    double a[8][8] = {};
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            // Symmetrized embedding [[A, -B], [B, A]] of (rho + rho') / 2.
            const cd h = 0.5 * (rho.at(r, s) + std::conj(rho.at(s, r)));
            a[r][s] = h.real();
            a[r + 4][s + 4] = h.real();
            a[r][s + 4] = -h.imag();
            a[r + 4][s] = h.imag();
        }
    }
    jacobi8(a);
    std::array<double, 8> all{};
    for (int i = 0; i < 8; ++i) {
        all[static_cast<std::size_t>(i)] = a[i][i];
    }
    std::sort(all.begin(), all.end());
    // Each eigenvalue of the 4x4 appears twice in the embedding.
    return {all[0], all[2], all[4], all[6]};
}

double entropy_bits(const double* p, int count) {
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        if (p[i] < kEigenFloor) {
            throw std::invalid_argument("entropy needs nonnegative probabilities");
        }
        if (p[i] > 1e-14) {
            sum -= p[i] * std::log2(p[i]);
        }
    }
    return sum;
}

double state_entropy_bits(const Complex4x4& rho) {
    validate_density(rho);
    const std::array<double, 4> eig = hermitian_eigenvalues(rho);
    return entropy_bits(eig.data(), 4);
}

DiscordResult measurement_discord(const Complex4x4& rho) {
    validate_density(rho);

    const std::array<double, 4> eig = hermitian_eigenvalues(rho);
    const Complex2x2 rho_a = partial_trace_second(rho);
    const Complex2x2 rho_b = partial_trace_first(rho);
    auto marginal_entropy = [](const Complex2x2& r) {
        const double mean = 0.5 * (r.m[0].real() + r.m[3].real());
        const double half = 0.5 * (r.m[0].real() - r.m[3].real());
        const double radius = std::sqrt(half * half + std::norm(r.m[1]));
        double parts[2] = {mean + radius, mean - radius};
        return entropy_bits(parts, 2);
    };
    const double base = -entropy_bits(eig.data(), 4) + marginal_entropy(rho_a) +
                        marginal_entropy(rho_b);

    constexpr int kGrid = 24;
    DiscordResult best;
    double best_objective = 1e300;
    for (int ia = 0; ia < kGrid; ++ia) {
        const double ta = M_PI * ia / (kGrid - 1.0);
        for (int ja = 0; ja < kGrid; ++ja) {
            const double pa = 2.0 * M_PI * ja / kGrid;
            for (int ib = 0; ib < kGrid; ++ib) {
                const double tb = M_PI * ib / (kGrid - 1.0);
                for (int jb = 0; jb < kGrid; ++jb) {
                    const double pb = 2.0 * M_PI * jb / kGrid;
                    const double value = dephasing_objective(rho, ta, pa, tb, pb);
                    if (value < best_objective) {
                        best_objective = value;
                        best = {0.0, ta, pa, tb, pb};
                    }
                }
            }
        }
    }

    double angles[4] = {best.theta_a, best.phi_a, best.theta_b, best.phi_b};
    double step = M_PI / (kGrid - 1.0);
    while (step > 1e-6) {
        bool improved = false;
        for (int c = 0; c < 4; ++c) {
            for (double sign : {1.0, -1.0}) {
                double trial[4] = {angles[0], angles[1], angles[2], angles[3]};
                trial[c] += sign * step;
                const double value =
                    dephasing_objective(rho, trial[0], trial[1], trial[2], trial[3]);
                if (value < best_objective) {
                    best_objective = value;
                    angles[c] = trial[c];
                    improved = true;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
        }
    }

    best = {best_objective + base, angles[0], angles[1], angles[2], angles[3]};
    return best;
}

double bell_diagonal_discord_bits(double cx, double cy, double cz) {
    double lam[4] = {0.25 * (1.0 + cx - cy + cz), 0.25 * (1.0 - cx + cy + cz),
                     0.25 * (1.0 + cx + cy - cz), 0.25 * (1.0 - cx - cy - cz)};
    const double c = std::max({std::abs(cx), std::abs(cy), std::abs(cz)});
    return 1.0 - entropy_bits(lam, 4) + h2_bits(0.5 * (1.0 + c));
}

}  // namespace qlls
