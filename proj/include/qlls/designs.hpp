#pragma once
// Finite unitary t-designs on SU(2): group closures of fixed generators,
// frame-potential certification against the Haar moments, and a plain-text
// export format.

#include <iosfwd>
#include <string>
#include <vector>

#include "qlls/su2.hpp"

namespace qlls {

inline constexpr double kDedupTol = 1e-6;    // phase_invariant_distance scale
inline constexpr double kDesignTol = 1e-6;   // default frame-potential tolerance

struct DesignSet {
    std::string name;
    int declared_t = 0;
    std::vector<Unitary2> elements;
};

// 24-element closure of {H, S}; exact 3-design, fails at t = 4.
const DesignSet& clifford_design();

// 60-element closure of the two icosahedral rotation generators
//   g5 = [[p/2, 1/2 + i(p-1)/2], [-1/2 + i(p-1)/2, p/2]]   (p the golden ratio)
//   g2 = [[0, i], [i, 0]]
// i.e. the 2pi/5 vertex rotation and a pi edge rotation; exact 5-design.
const DesignSet& icosahedral_design();

// Group closure of arbitrary generators with phase dedup; throws
// std::runtime_error if the closure exceeds max_elements.
std::vector<Unitary2> close_under_multiplication(const std::vector<Unitary2>& generators,
                                                 std::size_t max_elements);

// (1/|C|^2) sum_{U,V} |tr(U+V)|^{2t}, compensated summation.
double frame_potential(const DesignSet& design, int t);

// Haar value of the frame potential: the Catalan number binom(2t,t)/(t+1).
double haar_frame_potential(int t);

// True iff |frame_potential(s) - haar| <= tol for every s = 1..t.
bool verify_design(const DesignSet& design, int t, double tol = kDesignTol);

// One element per line: 8 whitespace-separated fields (re, im per entry),
// 17 significant digits.
void export_design(const DesignSet& design, std::ostream& out);

}  // namespace qlls
