#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hartogs/geometry.hpp"
#include "hartogs/multi_index.hpp"
#include "hartogs/polytuple.hpp"

namespace hartogs {

using Matrix = Eigen::MatrixXcd;

// n square matrices of equal size. Commutation is checked on demand.
class MatrixTuple {
 public:
  explicit MatrixTuple(std::vector<Matrix> ops, double tolerance = 1e-12);

  std::size_t dim() const noexcept { return ops_.size(); }
  Eigen::Index size() const noexcept { return ops_.front().rows(); }
  double tolerance() const noexcept { return tolerance_; }
  const Matrix& operator[](std::size_t j) const { return ops_[j]; }
  const std::vector<Matrix>& ops() const noexcept { return ops_; }

  // max over j < k of |T_j T_k - T_k T_j| / max(1, |T_j| |T_k|), spectral norms.
  double commutator_defect() const;
  bool commuting() const { return commutator_defect() <= tolerance_; }
  void require_commuting() const;

 private:
  std::vector<Matrix> ops_;
  double tolerance_;
};

double spectral_norm(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);

// sum a_{alpha beta} z^alpha conj(w)^beta; keys are (alpha, beta).
struct HereditaryPoly {
  std::size_t n = 0;
  std::map<std::pair<MultiIndex, MultiIndex>, std::complex<double>> terms;
};

// prod_{j>=2} z_j conj(w_j) * prod_j (1 - P_j(phi(z) o conj(phi(w))))^{m_j}
// expanded exactly; throws NotHereditaryPolynomial if a negative exponent
// survives, InvalidMultiplicity for m_j < 1.
HereditaryPoly reciprocal_kernel_polynomial(const PolyTuple& p, const MultiIndex& m);

struct HereditaryValue {
  Matrix value;             // Hermitian part
  double asymmetry = 0.0;   // max entry of |X - X*| before symmetrizing
};

// conj(w)^beta -> T*^beta on the left, z^alpha -> T^alpha on the right.
HereditaryValue hereditary_eval(const HereditaryPoly& p, const MatrixTuple& t);

enum class DefectClass { Isometry, Contraction, Neither };
std::string defect_class_name(DefectClass c);

struct DefectReport {
  DefectClass kind = DefectClass::Neither;
  Matrix defect;  // D^{(n-1)} - T_n* D^{(n-1)} T_n
  double min_eigenvalue = 0.0;
  double norm = 0.0;
};

struct PsdTolerance {
  double psd = 1e-10;       // min eigenvalue >= -psd * |X|
  double isometry = 1e-10;  // |X| <= isometry * max(1, max_j |T_j|^2)
};

DefectReport triangle_defect_classify(const MatrixTuple& t, PsdTolerance tol = {});

// (T_1 ... T_n, T_2 ... T_n, ..., T_n).
MatrixTuple toral_lift(const MatrixTuple& t);

struct OrderingReport {
  // min eigenvalues of T*_{j+1}T_{j+1} - T*_jT_j for j < n, then of I - T*_nT_n
  std::vector<double> chain_min_eigenvalues;
  bool chain_holds = true;
  bool spectrum_checkable = false;  // jointly upper or lower triangular
  std::vector<Point> joint_eigenvalues;
  std::optional<bool> spectrum_in_triangle;  // empty: unverified hypothesis
};

OrderingReport ordering_check(const MatrixTuple& t, PsdTolerance tol = {});

struct PickReport {
  bool valid = false;
  double residual = 0.0;  // max entrywise defect of the identity
  double min_eigenvalue_a1 = 0.0;
  double min_eigenvalue_a2 = 0.0;
  double hermitian_defect = 0.0;
};

// Checks a certificate (A1, A2) for interpolating lambda_i -> z_i on the
// two-dimensional Hartogs triangle. Throws PointOutsideDomain, DuplicatePoints.
PickReport pick_verify(const std::vector<Point>& lambda, const std::vector<std::complex<double>>& z,
                       const Matrix& a1, const Matrix& a2);

}  // namespace hartogs
