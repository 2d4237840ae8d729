#pragma once

#include <ostream>
#include <vector>

#include "hartogs/lattice.hpp"
#include "hartogs/multi_index.hpp"
#include "hartogs/polytuple.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

// Exact coefficients on a box window, dense row-major.
class CoeffTable {
 public:
  CoeffTable() = default;
  CoeffTable(LatticeWindow window, std::vector<Rational> values);

  const LatticeWindow& window() const noexcept { return window_; }
  const MultiIndex& bounds() const noexcept { return window_.bounds(); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  // 0 for any alpha with a negative entry; Error(WindowTooSmall) when alpha
  // lies in Z^n_+ but outside the window.
  const Rational& at(const MultiIndex& alpha) const;
  bool covers(const MultiIndex& bounds) const;

  friend bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.bounds() == b.bounds() && a.values_ == b.values_;
  }

 private:
  LatticeWindow window_;
  std::vector<Rational> values_;
};

enum class ExpansionMode { Recursion, Oracle };

// Coefficients of (1 - Q)^{-k} on the window.
CoeffTable reciprocal_power_coeffs(const Polynomial& q, int k, const MultiIndex& window,
                                   ExpansionMode mode = ExpansionMode::Recursion);

// Product path is only legal for admissible P.
enum class CoeffMethod { Auto, Convolution, Product };

// Coefficients of prod_j (1 - P_j)^{-m_j} on the window.
CoeffTable coeff_function(const PolyTuple& p, const MultiIndex& m, const MultiIndex& window,
                          CoeffMethod method = CoeffMethod::Auto);

// Coefficients of (1 - q(t))^{-k} for t^0..t^len.
std::vector<Rational> univariate_coeffs(const UnivariatePoly& q, int k, int len);

// prod_j C(alpha_j + m_j - 1, m_j - 1).
Rational hartogs_coeff_closed(const MultiIndex& m, const MultiIndex& alpha);

void write_csv(std::ostream& os, const CoeffTable& table);

}  // namespace hartogs
