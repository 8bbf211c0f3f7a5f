#pragma once
// Fixed-size 2x2 complex value types for single-qubit states, unitaries and
// projectors. Everything is stack-allocated; the sampling hot path uses the
// factorized scalar forms below instead of materializing matrices.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qlls {

using cd = std::complex<double>;

inline constexpr double kStructuralTol = 1e-10;  // unitarity / projector axioms
inline constexpr double kAlgebraicTol = 1e-12;   // exact algebraic identities
inline constexpr double kDensityTol = 1e-8;      // trace-one check on inputs

struct Complex2x2 {
    // Row-major: m[0]=a00 m[1]=a01 m[2]=a10 m[3]=a11.
    std::array<cd, 4> m{};

    static Complex2x2 zero() { return {}; }
    static Complex2x2 identity() { return {{cd(1), cd(0), cd(0), cd(1)}}; }

    Complex2x2 operator+(const Complex2x2& o) const {
        return {{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
    }
    Complex2x2 operator-(const Complex2x2& o) const {
        return {{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
    }
    Complex2x2 operator*(const Complex2x2& o) const {
        return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                 m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
    }
    Complex2x2 operator*(cd s) const { return {{s * m[0], s * m[1], s * m[2], s * m[3]}}; }

    Complex2x2 adjoint() const {
        return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
    }
    cd trace() const { return m[0] + m[3]; }
    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& e : m) s += std::norm(e);
        return std::sqrt(s);
    }
};

inline Complex2x2 operator*(cd s, const Complex2x2& a) { return a * s; }

// Unitary with construction-time validation: ||U U+ - 1||_F < 1e-10.
class Unitary2 {
  public:
    explicit Unitary2(const Complex2x2& m) : m_(m) {
        const Complex2x2 r = m * m.adjoint() - Complex2x2::identity();
        if (r.frobenius_norm() >= kStructuralTol)
            throw std::invalid_argument("Unitary2: matrix is not unitary");
    }
    const Complex2x2& matrix() const { return m_; }
    Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }

    // |<0|U|a>|^2 for a in {0,1}; row-0 moduli sum to 1.
    double head_amplitude_sq(int a) const { return std::norm(m_.m[a]); }

  private:
    Complex2x2 m_;
};

// Rank-1 projector with construction-time validation of the axioms.
class Projector2 {
  public:
    explicit Projector2(const Complex2x2& m) : m_(m) {
        const double herm = (m - m.adjoint()).frobenius_norm();
        const double idem = (m * m - m).frobenius_norm();
        const double tr = std::abs(m.trace() - cd(1));
        if (herm >= kStructuralTol || idem >= kStructuralTol || tr >= kStructuralTol)
            throw std::invalid_argument("Projector2: not a rank-1 projector");
    }
    const Complex2x2& matrix() const { return m_; }

  private:
    Complex2x2 m_;
};

// Diagonal qubit state diag(lambda, 1-lambda).
class DiagonalState {
  public:
    explicit DiagonalState(double lambda) : lambda_(lambda) {
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw std::domain_error("DiagonalState: eigenvalue outside [0,1]");
    }
    double lambda() const { return lambda_; }
    Complex2x2 matrix() const { return {{cd(lambda_), cd(0), cd(0), cd(1.0 - lambda_)}}; }

  private:
    double lambda_;
};

inline DiagonalState make_lambda(double lambda) { return DiagonalState(lambda); }

inline Complex2x2 conjugate(const Unitary2& u, const Complex2x2& a) {
    return u.matrix() * a * u.matrix().adjoint();
}

inline Projector2 projector_of(const Unitary2& u) {
    // U |0><0| U+ built directly from the first column of U.
    const cd c0 = u.matrix().m[0];
    const cd c1 = u.matrix().m[2];
    return Projector2(Complex2x2{{c0 * std::conj(c0), c0 * std::conj(c1),
                                  c1 * std::conj(c0), c1 * std::conj(c1)}});
}

// Re rho_00 of a density matrix; rejects inputs whose trace or hermiticity
// deviates beyond 1e-8.
inline double head_probability(const Complex2x2& rho) {
    if (std::abs(rho.trace() - cd(1)) >= kDensityTol)
        throw std::invalid_argument("head_probability: trace differs from one");
    if ((rho - rho.adjoint()).frobenius_norm() >= kDensityTol)
        throw std::invalid_argument("head_probability: matrix is not hermitian");
    return rho.m[0].real();
}

// Factorized form of head_probability(U diag(l,1-l) U+): the sampler never
// builds the conjugated matrix.
inline double head_probability(double lambda, const Unitary2& u) {
    return lambda * u.head_amplitude_sq(0) + (1.0 - lambda) * u.head_amplitude_sq(1);
}

// Phase-insensitive distance sqrt(8 - 4|tr(U+V)|): zero iff U = e^{i phi} V.
inline double phase_invariant_distance(const Unitary2& u, const Unitary2& v) {
    const double t = std::abs((u.matrix().adjoint() * v.matrix()).trace());
    return std::sqrt(std::max(0.0, 8.0 - 4.0 * t));
}

// Named constants used across designs and tests.
inline Unitary2 pauli_x() { return Unitary2(Complex2x2{{cd(0), cd(1), cd(1), cd(0)}}); }
inline Unitary2 pauli_y() { return Unitary2(Complex2x2{{cd(0), cd(0, -1), cd(0, 1), cd(0)}}); }
inline Unitary2 pauli_z() { return Unitary2(Complex2x2{{cd(1), cd(0), cd(0), cd(-1)}}); }
inline Unitary2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return Unitary2(Complex2x2{{cd(s), cd(s), cd(s), cd(-s)}});
}
inline Unitary2 phase_s() { return Unitary2(Complex2x2{{cd(1), cd(0), cd(0), cd(0, 1)}}); }

}  // namespace qlls
