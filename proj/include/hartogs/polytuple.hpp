#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hartogs/multi_index.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

// Polynomial in n variables with nonnegative rational coefficients.
// Zero coefficients are dropped on construction so equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  Polynomial() = default;
  Polynomial(std::size_t n, TermMap terms);

  std::size_t dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coeff(const MultiIndex& alpha) const;
  int degree() const;
  bool has_constant_term() const;

  double evaluate(std::span<const double> x) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_ = 0;
  TermMap terms_;
  // Double copies of the coefficients for the floating-point evaluators.
  std::vector<std::pair<MultiIndex, double>> approx_;
};

// Exponent -> coefficient for a one-variable polynomial.
using UnivariatePoly = std::map<int, Rational>;

// A positive regular n-tuple: nonnegative coefficients, no constant terms,
// and a strictly positive coefficient of z_j in P_j.
class PolyTuple {
 public:
  // Validates; throws Error with ConstantTerm / MissingLinearTerm.
  explicit PolyTuple(std::vector<Polynomial> polys);

  std::size_t dim() const noexcept { return polys_.size(); }
  const Polynomial& operator[](std::size_t j) const { return polys_[j]; }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  // Coefficient of z_j in P_j.
  Rational linear_coeff(std::size_t j) const;

  friend bool operator==(const PolyTuple&, const PolyTuple&) = default;

 private:
  std::vector<Polynomial> polys_;
};

struct AdmissibilityDegree {
  bool all_degrees = false;  // no cross terms: d-admissible for every d
  int value = 0;             // meaningful only when !all_degrees
};

struct Admissibility {
  AdmissibilityDegree degree;
  bool admissible = false;
  // d-admissible for the given d (d >= 1).
  bool at_least(int d) const { return degree.all_degrees || degree.value >= d; }
};

Admissibility admissibility_degree(const PolyTuple& p);
std::vector<UnivariatePoly> tilde_restrictions(const PolyTuple& p);

double evaluate(const UnivariatePoly& q, double t);
// Univariate polynomial embedded as a one-variable Polynomial.
Polynomial as_polynomial(const UnivariatePoly& q);

// (z_1 + a z_1...z_n, ..., z_n + a z_1...z_n); a = 0 gives the Hartogs tuple.
PolyTuple make_pa(std::size_t n, const Rational& a);

}  // namespace hartogs
