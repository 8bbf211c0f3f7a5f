#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "qlls/designs.hpp"
#include "qlls/quadrature.hpp"
#include "qlls/two_qubit.hpp"

using namespace qlls;

namespace {

Complex4x4 flat_two_copy() {
    return two_copy_average(MeasureSpec::flat(), clifford_design(), default_quadrature());
}

}  // namespace

TEST_CASE("pauli correlations invert pauli_diagonal_state") {
    const Complex4x4 rho = pauli_diagonal_state(0.3, -0.2, 0.15);
    const PauliCorrelations c = pauli_correlations(rho);
    CHECK(c.xx == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(c.yy == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(c.zz == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(std::abs(rho.trace() - cd(1)) < 1e-12);
}

TEST_CASE("two-copy flat average: isotropic correlations of one ninth") {
    const Complex4x4 rho = flat_two_copy();
    const PauliCorrelations c = pauli_correlations(rho);
    CHECK(std::abs(c.xx - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(c.yy - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(c.zz - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(rho.trace() - cd(1)) < 1e-12);

    // Single-qubit Bloch components vanish by Haar symmetry.
    const Complex2x2 a = partial_trace_second(rho);
    const Complex2x2 b = partial_trace_first(rho);
    CHECK(std::abs(a.m[0] - cd(0.5)) < 1e-10);
    CHECK(std::abs(a.m[1]) < 1e-10);
    CHECK(std::abs(b.m[0] - cd(0.5)) < 1e-10);
    CHECK(std::abs(b.m[2]) < 1e-10);

    // Spectrum (1/6, 5/18, 5/18, 5/18), ascending; positive semidefinite.
    const std::array<double, 4> eig = hermitian_eigenvalues(rho);
    CHECK(eig[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    for (int i = 1; i < 4; ++i) CHECK(eig[i] == doctest::Approx(5.0 / 18.0).epsilon(1e-10));
}

TEST_CASE("two-copy average equals a seeded haar monte carlo") {
    // Independent oracle for the design identity: average U rho U+ (x2) over
    // Haar samples drawn as unit quaternions, lambda uniform (flat measure).
    std::mt19937_64 engine(424242);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Complex4x4 mc;
    const int samples = 200000;
    for (int s = 0; s < samples; ++s) {
        double q[4];
        double norm2 = 0.0;
        for (double& v : q) {
            v = gauss(engine);
            norm2 += v * v;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
        const Unitary2 u(Complex2x2{{cd(w, z), cd(y, x), cd(-y, x), cd(w, -z)}});
        const Complex2x2 rotated = conjugate(u, DiagonalState(uniform(engine)).matrix());
        mc.add_scaled(kron(rotated, rotated), 1.0 / samples);
    }
    const PauliCorrelations exact = pauli_correlations(flat_two_copy());
    const PauliCorrelations sampled = pauli_correlations(mc);
    // ~1/sqrt(samples) fluctuation; 0.02 is ~9 sigma, false-failure-proof.
    CHECK(std::abs(sampled.xx - exact.xx) < 0.02);
    CHECK(std::abs(sampled.yy - exact.yy) < 0.02);
    CHECK(std::abs(sampled.zz - exact.zz) < 0.02);
}

TEST_CASE("classical two-copy average has no transverse correlations") {
    const Complex4x4 rho =
        two_copy_average(MeasureSpec::classical(), clifford_design(), default_quadrature());
    const PauliCorrelations c = pauli_correlations(rho);
    CHECK(std::abs(c.xx) < 1e-12);
    CHECK(std::abs(c.yy) < 1e-12);
    CHECK(c.zz > 0.0);
    CHECK(measurement_discord(rho).value_bits < 1e-6);
}

TEST_CASE("two-copy average requires a 2-design") {
    DesignSet trivial;
    trivial.name = "identity";
    trivial.declared_t = 1;
    trivial.elements.push_back(Unitary2(Complex2x2::identity()));
    CHECK_THROWS_AS(two_copy_average(MeasureSpec::flat(), trivial, default_quadrature()),
                    std::invalid_argument);
}

TEST_CASE("entropies") {
    const double quarter[] = {0.25, 0.25, 0.25, 0.25};
    CHECK(entropy_bits(quarter, 4) == doctest::Approx(2.0).epsilon(1e-12));
    const double pure[] = {1.0, 0.0, 0.0, 0.0};
    CHECK(entropy_bits(pure, 4) == doctest::Approx(0.0));
    const double bad[] = {1.1, -0.1};
    CHECK_THROWS_AS(entropy_bits(bad, 2), std::invalid_argument);

    Complex4x4 maximally_mixed = Complex4x4::identity();
    for (cd& v : maximally_mixed.m) v *= 0.25;
    CHECK(state_entropy_bits(maximally_mixed) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(state_entropy_bits(pauli_diagonal_state(1.0, -1.0, 1.0)) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("discord of the flat moment state matches the bell-diagonal closed form") {
    const DiscordResult d = measurement_discord(flat_two_copy());
    const double closed = bell_diagonal_discord_bits(1.0 / 9.0, 1.0 / 9.0, 1.0 / 9.0);
    CHECK(d.value_bits == doctest::Approx(closed).epsilon(1e-4));
    CHECK(closed == doctest::Approx(0.020252).epsilon(1e-4));
}

TEST_CASE("discord anchors: product states at zero, bell state at one") {
    // diag(p, 1-p) (x) diag(q, 1-q) is classical: zero discord.
    Complex4x4 product;
    const double p = 0.3, q = 0.8;
    product.at(0, 0) = p * q;
    product.at(1, 1) = p * (1 - q);
    product.at(2, 2) = (1 - p) * q;
    product.at(3, 3) = (1 - p) * (1 - q);
    CHECK(measurement_discord(product).value_bits < 1e-6);

    // Maximally entangled Phi+ = pauli-diagonal (1, -1, 1).
    const DiscordResult bell = measurement_discord(pauli_diagonal_state(1.0, -1.0, 1.0));
    CHECK(bell.value_bits == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("werner family: minimizer agrees with the closed form") {
    for (double w : {0.2, 0.5, 0.8}) {
        const Complex4x4 rho = pauli_diagonal_state(w, -w, w);
        const double closed = bell_diagonal_discord_bits(w, -w, w);
        CHECK(measurement_discord(rho).value_bits == doctest::Approx(closed).epsilon(1e-4));
    }
}

TEST_CASE("density validation rejects malformed inputs") {
    Complex4x4 not_normalized = Complex4x4::identity();
    CHECK_THROWS_AS(measurement_discord(not_normalized), std::invalid_argument);
    Complex4x4 not_hermitian;
    not_hermitian.at(0, 0) = 1.0;
    not_hermitian.at(0, 3) = cd(0.5, 0.5);
    CHECK_THROWS_AS(measurement_discord(not_hermitian), std::invalid_argument);
}

TEST_CASE("partial traces are consistent with kron") {
    const Complex2x2 a{{cd(0.7), cd(0.1, 0.2), cd(0.1, -0.2), cd(0.3)}};
    const Complex2x2 b{{cd(0.4), cd(0.0, 0.1), cd(0.0, -0.1), cd(0.6)}};
    const Complex4x4 rho = kron(a, b);
    const Complex2x2 ta = partial_trace_second(rho);
    const Complex2x2 tb = partial_trace_first(rho);
    for (int e = 0; e < 4; ++e) {
        CHECK(std::abs(ta.m[e] - a.m[e]) < 1e-12);
        CHECK(std::abs(tb.m[e] - b.m[e]) < 1e-12);
    }
    CHECK(std::abs(trace_product(rho, rho) -
                   (a * a).trace() * (b * b).trace()) < 1e-12);
}
