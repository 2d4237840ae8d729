#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hartogs/geometry.hpp"
#include "hartogs/multi_index.hpp"

namespace hartogs {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [0, 1].
QuadratureRule gauss_legendre_unit(int nodes);

// Area integral over the unit disc: Gauss-Legendre in u = r^2 times the
// trapezoid rule in the angle.
double disc_integral(const std::function<double(std::complex<double>)>& f, int radial, int angular);

struct QuadratureCheck {
  double numeric = 0.0;
  double closed = 0.0;
  double error() const;
};

// int_D |w|^{2l} (1 - |w|^2)^k dA against pi / ((k+1) C(l+k+1, k+1)).
QuadratureCheck beta_integral_check(int l, int k, int nodes);

struct HardyOptions {
  int grid_max = 40;  // t = 1 - 2^{-k}, k = 1..grid_max
  int angular = 16;   // trapezoid nodes per torus coordinate
};

// sup over the t-grid of the weighted torus mean of |f|^2 on
// (t^n e^{i th_1}, t^{n-1} e^{i th_2}, ..., t e^{i th_n}) with weight
// prod_j t^{2j-1}; the same t is used for every coordinate.
double hardy_norm_squared(std::size_t n, const std::function<std::complex<double>(const Point&)>& f,
                          const HardyOptions& opts = {});

// Hardy norm squared of e_alpha for the Hartogs tuple with m = (1, ..., 1).
double hardy_norm_check(std::size_t n, const MultiIndex& alpha, const HardyOptions& opts = {});

// Weighted Bergman norm squared of e_alpha for the Hartogs tuple with all
// m_j >= 2, integrated over D^n after pulling back through phi^{-1}.
// Throws InvalidMultiplicity when some m_j < 2.
double bergman_norm_check(const MultiIndex& m, const MultiIndex& alpha, int radial = 24,
                          int angular = 8);

}  // namespace hartogs
