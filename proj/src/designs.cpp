#include "qlls/designs.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>
#include <stdexcept>

#include "qlls/numerics.hpp"

namespace qlls {

std::vector<Unitary2> close_under_multiplication(const std::vector<Unitary2>& generators,
                                                 std::size_t max_elements) {
    std::vector<Unitary2> elements;
    elements.push_back(Unitary2(Complex2x2::identity()));

    auto known = [&elements](const Unitary2& u) {
        for (const auto& e : elements)
            if (phase_invariant_distance(e, u) < kDedupTol) return true;
        return false;
    };

    std::deque<std::size_t> work;
    for (const auto& g : generators) {
        if (!known(g)) {
            elements.push_back(g);
            work.push_back(elements.size() - 1);
        }
    }
    work.push_front(0);

    while (!work.empty()) {
        const std::size_t idx = work.front();
        work.pop_front();
        for (const auto& g : generators) {
            const Unitary2 p(elements[idx].matrix() * g.matrix());
            if (!known(p)) {
                if (elements.size() >= max_elements)
                    throw std::runtime_error("close_under_multiplication: closure overflow");
                elements.push_back(p);
                work.push_back(elements.size() - 1);
            }
        }
    }
    return elements;
}

namespace {

DesignSet build_clifford() {
    DesignSet d;
    d.name = "clifford";
    d.declared_t = 3;
    d.elements = close_under_multiplication({hadamard(), phase_s()}, 64);
    if (d.elements.size() != 24)
        throw std::runtime_error("clifford_design: closure size mismatch");
    return d;
}

DesignSet build_icosahedral() {
    const double p = 0.5 * (1.0 + std::sqrt(5.0));  // golden ratio
    const Unitary2 g5(Complex2x2{{cd(p / 2.0), cd(0.5, (p - 1.0) / 2.0),
                                  cd(-0.5, (p - 1.0) / 2.0), cd(p / 2.0)}});
    const Unitary2 g2(Complex2x2{{cd(0), cd(0, 1), cd(0, 1), cd(0)}});
    DesignSet d;
    d.name = "icosahedral";
    d.declared_t = 5;
    d.elements = close_under_multiplication({g5, g2}, 128);
    if (d.elements.size() != 60)
        throw std::runtime_error("icosahedral_design: closure size mismatch");
    return d;
}

}  // namespace

const DesignSet& clifford_design() {
    static const DesignSet d = build_clifford();
    return d;
}

const DesignSet& icosahedral_design() {
    static const DesignSet d = build_icosahedral();
    return d;
}

double frame_potential(const DesignSet& design, int t) {
    if (t < 1) throw std::domain_error("frame_potential: t must be positive");
    const auto& els = design.elements;
    if (els.empty()) throw std::domain_error("frame_potential: empty design");
    KahanSum acc;
    for (const auto& u : els) {
        const Complex2x2 udag = u.matrix().adjoint();
        for (const auto& v : els) {
            const Complex2x2 w = udag * v.matrix();
            acc.add(ipow(std::abs(w.trace()), 2 * t));
        }
    }
    const double c = static_cast<double>(els.size());
    return acc.value() / (c * c);
}

double haar_frame_potential(int t) {
    if (t < 1) throw std::domain_error("haar_frame_potential: t must be positive");
    // Catalan number binom(2t,t)/(t+1), exact in double for the t used here.
    double num = 1.0;
    for (int i = 0; i < t; ++i) num = num * (2.0 * t - i) / (i + 1.0);
    return num / (t + 1.0);
}

bool verify_design(const DesignSet& design, int t, double tol) {
    for (int s = 1; s <= t; ++s)
        if (std::abs(frame_potential(design, s) - haar_frame_potential(s)) > tol) return false;
    return true;
}

void export_design(const DesignSet& design, std::ostream& out) {
    char buf[512];
    for (const auto& u : design.elements) {
        const auto& m = u.matrix().m;
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g\n",
                      m[0].real(), m[0].imag(), m[1].real(), m[1].imag(),
                      m[2].real(), m[2].imag(), m[3].real(), m[3].imag());
        out << buf;
    }
}

}  // namespace qlls
