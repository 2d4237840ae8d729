#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "hartogs/coeff.hpp"
#include "hartogs/geometry.hpp"
#include "hartogs/polytuple.hpp"

namespace hartogs {

// Tuple, multiplicity and a coefficient table on `window`. Series
// truncations and basis evaluations must stay inside the window.
class KernelContext {
 public:
  KernelContext(PolyTuple p, MultiIndex m, MultiIndex window,
                CoeffMethod method = CoeffMethod::Auto);

  const PolyTuple& tuple() const noexcept { return p_; }
  const MultiIndex& multiplicity() const noexcept { return m_; }
  const CoeffTable& table() const noexcept { return table_; }
  const MultiIndex& window() const noexcept { return table_.bounds(); }
  std::size_t dim() const noexcept { return p_.dim(); }

  // sqrt(A(alpha)) in double precision.
  double sqrt_coeff(const MultiIndex& alpha) const;

 private:
  PolyTuple p_;
  MultiIndex m_;
  CoeffTable table_;
  std::vector<double> coeff_d_;
};

// prod_{j>=2} 1/(z_j conj w_j) * prod_j (1 - P_j(phi(z) . conj phi(w)))^{-m_j}.
// Throws OutsideDomain unless both points lie in the P-triangle.
std::complex<double> kernel_eval(const KernelContext& ctx, const Point& z, const Point& w);

// Sum of e_alpha(z) conj e_alpha(w) over |alpha| <= cutoff. Needs every
// window bound >= cutoff (WindowTooSmall otherwise).
std::complex<double> kernel_series_eval(const KernelContext& ctx, const Point& z, const Point& w,
                                        int cutoff);

// sqrt(A(alpha)) phi(z)^alpha / (z_2 ... z_n). Throws ZeroCoordinate.
std::complex<double> basis_eval(const KernelContext& ctx, const MultiIndex& alpha, const Point& z);

struct GramReport {
  Eigen::MatrixXcd gram;
  double min_eigenvalue = 0.0;
  double max_diagonal = 0.0;
  double hermitian_defect = 0.0;  // max |G_ij - conj G_ji|

  bool psd(double rel_tol = 1e-10) const { return min_eigenvalue >= -rel_tol * max_diagonal; }
};

GramReport gram_psd_check(const KernelContext& ctx, const std::vector<Point>& points);

}  // namespace hartogs
