#pragma once
// Prior measures over qubit states in spectral form: eigenvalue density f on
// [0,1], a reparameterization g pushing the uniform grid onto f, and the
// unitary part (Haar for flat/bures, the identity point mass for classical).

#include <stdexcept>
#include <string>
#include <vector>

namespace qlls {

enum class Measure { classical, flat, bures };

struct MeasureSpec {
    Measure family = Measure::flat;

    static MeasureSpec classical() { return {Measure::classical}; }
    static MeasureSpec flat() { return {Measure::flat}; }
    static MeasureSpec bures() { return {Measure::bures}; }
    static MeasureSpec from_name(const std::string& name);

    const char* name() const;
    bool haar_unitary_part() const { return family != Measure::classical; }

    // Eigenvalue density f(lambda); integrates to 1 on [0,1].
    double f(double lambda) const;
    // Reparameterization lambda = g(x) with x uniform-gridded on [0,1].
    double g(double x) const;
    // Pushforward weight f(g(x)) g'(x); finite everywhere, integrates to 1.
    double weight(double x) const;
};

// Midpoint discretization: delta_i = (i - 1/2)/N, segment weights omega
// proportional to weight(delta_i) and normalized, head weight w0_i = g(delta_i).
struct DiscreteWeights {
    int N = 0;
    std::vector<double> delta;
    std::vector<double> omega;
    std::vector<double> w0;
};

DiscreteWeights discrete_weights(const MeasureSpec& measure, int N);

}  // namespace qlls
