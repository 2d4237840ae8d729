#pragma once

#include <complex>
#include <vector>

#include "hartogs/polytuple.hpp"

namespace hartogs {

using Point = std::vector<std::complex<double>>;

enum class Direction { Forward, Inverse };

// Forward: (z1/z2, ..., z_{n-1}/z_n, z_n); throws ZeroCoordinate when some
// z_j (j >= 2) vanishes. Inverse: (w1...wn, w2...wn, ..., wn).
Point change_of_variables(const Point& p, Direction direction);

// Jacobian determinant of the inverse map: prod_{j>=2} w_j^{j-1}.
std::complex<double> jacobian_inverse(const Point& p);

// Strict membership; a vanishing tail coordinate yields false.
bool triangle_contains(const PolyTuple& p, const Point& z);
bool q_ball_contains(const Polynomial& q, const Point& z);

// |phi(z)_j|^2, computed from |z_j|^2 without forming complex quotients.
std::vector<double> phi_moduli_squared(const Point& z);

// Radius r_j with P~_j(r_j^2) = 1.
std::vector<double> polydisc_radii(const PolyTuple& p);
double polydisc_radius(const UnivariatePoly& q);

}  // namespace hartogs
