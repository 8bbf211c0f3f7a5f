#include "qlls/measures.hpp"

#include <cmath>

#include "qlls/numerics.hpp"

namespace qlls {

MeasureSpec MeasureSpec::from_name(const std::string& name) {
    if (name == "classical") return classical();
    if (name == "flat") return flat();
    if (name == "bures") return bures();
    throw std::invalid_argument("MeasureSpec: unknown measure '" + name + "'");
}

const char* MeasureSpec::name() const {
    switch (family) {
        case Measure::classical: return "classical";
        case Measure::flat: return "flat";
        case Measure::bures: return "bures";
    }
    return "?";
}

double MeasureSpec::f(double lambda) const {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("MeasureSpec::f: lambda outside [0,1]");
    switch (family) {
        case Measure::classical:
        case Measure::flat:
            return 1.0;
        case Measure::bures: {
            // (2/pi) (2l-1)^2 / sqrt(l(1-l)); integrable endpoint poles.
            const double d = lambda * (1.0 - lambda);
            const double s = 2.0 * lambda - 1.0;
            return 2.0 / M_PI * s * s / std::sqrt(d);
        }
    }
    return 0.0;
}

double MeasureSpec::g(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("MeasureSpec::g: x outside [0,1]");
    switch (family) {
        case Measure::classical:
        case Measure::flat:
            return x;
        case Measure::bures: {
            const double s = std::sin(0.5 * M_PI * x);
            return s * s;
        }
    }
    return 0.0;
}

double MeasureSpec::weight(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("MeasureSpec::weight: x outside [0,1]");
    switch (family) {
        case Measure::classical:
        case Measure::flat:
            return 1.0;
        case Measure::bures: {
            // f(g(x)) g'(x) simplifies to 2 cos^2(pi x); the endpoint poles of f
            // cancel against g'.
            const double c = std::cos(M_PI * x);
            return 2.0 * c * c;
        }
    }
    return 0.0;
}

DiscreteWeights discrete_weights(const MeasureSpec& measure, int N) {
    if (N < 1) throw std::domain_error("discrete_weights: N must be positive");
    DiscreteWeights w;
    w.N = N;
    w.delta.resize(N);
    w.omega.resize(N);
    w.w0.resize(N);
    KahanSum total;
    for (int i = 0; i < N; ++i) {
        const double d = (i + 0.5) / N;
        w.delta[i] = d;
        w.w0[i] = measure.g(d);
        w.omega[i] = measure.weight(d);
        total.add(w.omega[i]);
    }
    if (total.value() <= 0.0) {
        // Degenerate midpoint (bures, N=1 hits the weight zero); fall back to
        // the exact segment mass, uniform across segments.
        for (int i = 0; i < N; ++i) w.omega[i] = 1.0 / N;
    } else {
        for (int i = 0; i < N; ++i) w.omega[i] /= total.value();
    }
    return w;
}

}  // namespace qlls
