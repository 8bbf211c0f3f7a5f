#pragma once
// Small numeric helpers shared by the analytic and Monte Carlo paths.

#include <cmath>
#include <cstdint>

namespace qlls {

// Kahan-compensated accumulator; keeps reductions schedule-independent to
// ~1e-12 when the summation order is fixed.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// x^e for small non-negative integer exponents; exact product chain, no pow().
inline double ipow(double x, int e) {
    double r = 1.0;
    double b = x;
    for (int n = e; n > 0; n >>= 1) {
        if (n & 1) r *= b;
        b *= b;
    }
    return r;
}

inline double lchoose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double lbeta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace qlls
