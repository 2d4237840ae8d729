#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hartogs/coeff.hpp"
#include "hartogs/lattice.hpp"
#include "hartogs/polytuple.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

// Squared weights of the truncated multiplication and shift operators on a
// lattice window. For e_alpha with alpha in the window:
//   M_j e_alpha = omega_j(alpha) e_{alpha + d_j},  d_j = e_j + ... + e_n
//   W_j e_alpha = sigma_j(alpha) e_{alpha + e_j}
// Weights are stored squared and exact; the coefficient table used to build
// them must cover window + (1, ..., 1).
class WeightTable {
 public:
  WeightTable(const CoeffTable& coeffs, const MultiIndex& window);

  const LatticeWindow& window() const noexcept { return window_; }
  std::size_t dim() const noexcept { return window_.dim(); }

  // Zero when alpha has a negative entry.
  Rational omega_sq(std::size_t j, const MultiIndex& alpha) const;
  Rational sigma_sq(std::size_t j, const MultiIndex& alpha) const;
  double omega(std::size_t j, const MultiIndex& alpha) const;
  double sigma(std::size_t j, const MultiIndex& alpha) const;

  struct Applied {
    std::vector<std::complex<double>> value;
    bool truncated = false;  // some mass left the window and was dropped
  };
  // Vectors are indexed by window offset.
  Applied apply_mult(std::size_t j, const std::vector<std::complex<double>>& x) const;
  Applied apply_shift(std::size_t j, const std::vector<std::complex<double>>& x) const;
  // e_alpha -> omega_j(alpha - d_j) e_{alpha - d_j}, zero off Z^n_+.
  std::vector<std::complex<double>> apply_adjoint(std::size_t j,
                                                  const std::vector<std::complex<double>>& x) const;

  Eigen::MatrixXd mult_matrix(std::size_t j) const;
  Eigen::MatrixXd shift_matrix(std::size_t j) const;

 private:
  LatticeWindow window_;
  std::vector<std::vector<Rational>> omega_sq_;
  std::vector<std::vector<Rational>> sigma_sq_;
};

WeightTable op_weights(const PolyTuple& p, const MultiIndex& m, const MultiIndex& window);
// Throws CoeffTableTooSmall if coeffs does not reach window + (1, ..., 1).
WeightTable op_weights(const CoeffTable& coeffs, const MultiIndex& window);

struct NormBounds {
  Rational upper_sq;                  // 1 / prod_{l>=j} a_l
  std::optional<Rational> lower_sq;   // 1 / prod_{l>=j} m_l a_l, n-admissible only
  double upper() const;
  std::optional<double> lower() const;
};

// lower_sq is empty when P is not n-admissible.
NormBounds norm_bounds(const PolyTuple& p, const MultiIndex& m, std::size_t j);
// Throws NotNAdmissible when P is not n-admissible.
Rational norm_lower_bound_sq(const PolyTuple& p, const MultiIndex& m, std::size_t j);

// Largest squared weight over columns whose image stays in the window.
Rational truncated_norm_sq(const WeightTable& w, std::size_t j);

struct CommutatorValue {
  MultiIndex alpha;  // input cell
  MultiIndex image;  // output cell
  // The commutator maps e_alpha to (sqrt(first_sq) - sqrt(second_sq)) e_image.
  Rational first_sq;
  Rational second_sq;
  bool is_zero() const { return first_sq == second_sq; }
  double value() const;
};

// [M*_{n-1}, M_n] e_alpha on the truncated weights (n >= 2, alpha + e_n in window).
CommutatorValue triangle_commutator(const WeightTable& w, const MultiIndex& alpha);

struct ProbeReport {
  bool factorization_exact = true;
  std::size_t factorization_cells = 0;
  std::optional<MultiIndex> factorization_mismatch;
  std::optional<CommutatorValue> triangle_nonzero;  // first nonzero in window order
  std::size_t triangle_cells = 0;
  bool polydisc_commutators_zero = true;
  std::size_t polydisc_cells = 0;
  bool mult_commute = true;  // M_j M_k = M_k M_j where both stay in the window
};

ProbeReport factorization_and_commutation_probe(const PolyTuple& p, const MultiIndex& m,
                                                const MultiIndex& window);

struct HyponormalityReport {
  LatticeWindow window;
  std::vector<Rational> diagonal;  // by window offset
  bool nonnegative = true;
  std::optional<MultiIndex> first_negative;
};

// A(alpha)/A(alpha + d_j) - A(alpha - d_j)/A(alpha) over the window.
HyponormalityReport hyponormality_diagonal(const PolyTuple& p, const MultiIndex& m, std::size_t j,
                                           const MultiIndex& window);

struct EssentialNormalityReport {
  std::vector<Rational> ratios;  // A(l e_i) / A(l e_i + e_n), l = 0..len
  Rational infimum;
  bool constant = true;
};

// Diagonal of [M*_n, M_n] along the ray l e_i (0-based i < n - 1).
EssentialNormalityReport essential_normality_ray(const PolyTuple& p, const MultiIndex& m,
                                                 std::size_t i, int len);

struct DetTraceReport {
  int truncation = 0;
  std::vector<Rational> a1, a2;  // ratio sequences for k = 0..K
  bool a1_nondecreasing = true;
  bool a2_nondecreasing = true;
  bool positive = true;
  int diagonal_bound = 0;
  std::vector<Rational> diagonal;  // (diagonal_bound + 1)^2 entries, row-major
  Rational partial_trace;          // sum over alpha <= (K, K), telescoped
  double partial_trace_value = 0.0;
  double limit_trace_estimate = 0.0;  // lim a1 * (lim a2)^2 read off at k = K
};

// Core computation from two ratio sequences of equal length K + 1.
DetTraceReport det_trace_from_ratios(std::vector<Rational> a1, std::vector<Rational> a2,
                                     int diagonal_bound);

// n = 2, admissible P: a_j(k) = A(k e_j) / A((k + 1) e_j).
DetTraceReport det_commutator_and_trace(const PolyTuple& p, const MultiIndex& m, int truncation,
                                        int diagonal_bound = 8);

struct RadiusEstimate {
  std::vector<double> approximants;  // index t - 1 for t = 1..N
  double estimate = 0.0;
  double upper_bound = 0.0;  // 1 / sqrt(a_j)
};

// sup_{k <= K} (A(k) / A(k + t))^{1/(2t)} for t = 1..N, A = A_{P~_j, m_j}.
RadiusEstimate spectral_radius_estimate(const PolyTuple& p, const MultiIndex& m, std::size_t j,
                                        int k_max, int n_max);

struct IntertwiningReport {
  bool exact = true;
  std::size_t cells = 0;
  std::optional<std::pair<std::size_t, MultiIndex>> mismatch;
};

// omega_j(alpha)^2 against prod_{k>=j} A~_k(alpha_k) / A~_k(alpha_k + 1), with
// the left side taken from the full convolution (not the product path).
IntertwiningReport polydisc_intertwining_check(const PolyTuple& p, const MultiIndex& m,
                                               const MultiIndex& window);

// Largest entrywise |G* M_j G - e^{i theta_j} M_j| over interior columns,
// G e_alpha = exp(-i <theta~, alpha>) e_alpha with theta_j = sum_{k>=j} theta~_k.
double circularity_check(const WeightTable& w, const std::vector<double>& theta);
std::vector<double> phi_angles(const std::vector<double>& theta);

}  // namespace hartogs
