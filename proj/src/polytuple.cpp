#include "hartogs/polytuple.hpp"

#include <algorithm>
#include <limits>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

template <typename T>
T monomial(const MultiIndex& alpha, std::span<const T> x) {
  T v(1);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int e = 0; e < alpha[i]; ++e) v *= x[i];
  return v;
}

bool is_pure_power(const MultiIndex& alpha, std::size_t j) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (i != j && alpha[i] != 0) return false;
  return true;
}

}  // namespace

Polynomial::Polynomial(std::size_t n, TermMap terms) : n_(n) {
  for (auto& [alpha, c] : terms) {
    if (alpha.size() != n || !alpha.is_nonnegative()) {
      throw Error(ErrorKind::MalformedInput, "exponent " + alpha.to_string() + " invalid for n=" +
                                                 std::to_string(n));
    }
    if (sgn(c) < 0) {
      throw Error(ErrorKind::NegativeCoefficient,
                  "coefficient " + format_rational(c) + " at " + alpha.to_string());
    }
    if (sgn(c) == 0) continue;
    terms_.emplace(alpha, c);
  }
  approx_.reserve(terms_.size());
  for (const auto& [alpha, c] : terms_) approx_.emplace_back(alpha, to_double(c));
}

Rational Polynomial::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  long d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.total());
  return static_cast<int>(d);
}

bool Polynomial::has_constant_term() const {
  return !terms_.empty() && terms_.begin()->first.is_zero();
}

double Polynomial::evaluate(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& [alpha, c] : approx_) s += c * monomial<double>(alpha, x);
  return s;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> z) const {
  std::complex<double> s = 0.0;
  for (const auto& [alpha, c] : approx_) s += c * monomial<std::complex<double>>(alpha, z);
  return s;
}

PolyTuple::PolyTuple(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
  const std::size_t n = polys_.size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "empty tuple");
  for (std::size_t j = 0; j < n; ++j) {
    if (polys_[j].dim() != n) {
      throw Error(ErrorKind::MalformedInput,
                  "polys[" + std::to_string(j) + "] has dimension " +
                      std::to_string(polys_[j].dim()) + ", expected " + std::to_string(n));
    }
    if (polys_[j].has_constant_term()) {
      throw Error(ErrorKind::ConstantTerm, "polys[" + std::to_string(j) + "] has a constant term");
    }
    if (sgn(linear_coeff(j)) <= 0) {
      throw Error(ErrorKind::MissingLinearTerm,
                  "polys[" + std::to_string(j) + "] lacks a positive z_" + std::to_string(j + 1) +
                      " term");
    }
  }
}

Rational PolyTuple::linear_coeff(std::size_t j) const {
  return polys_[j].coeff(MultiIndex::unit(dim(), j));
}

Admissibility admissibility_degree(const PolyTuple& p) {
  long min_cross = std::numeric_limits<long>::max();
  for (std::size_t j = 0; j < p.dim(); ++j) {
    for (const auto& [alpha, c] : p[j].terms()) {
      if (!is_pure_power(alpha, j)) min_cross = std::min(min_cross, alpha.total());
    }
  }
  Admissibility out;
  if (min_cross == std::numeric_limits<long>::max()) {
    out.degree.all_degrees = true;
    out.admissible = true;
  } else {
    // Cross terms of degree <= d are forbidden, so d* = (least cross degree) - 1.
    out.degree.value = static_cast<int>(min_cross - 1);
  }
  return out;
}

std::vector<UnivariatePoly> tilde_restrictions(const PolyTuple& p) {
  std::vector<UnivariatePoly> out(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) {
    for (const auto& [alpha, c] : p[j].terms()) {
      if (is_pure_power(alpha, j)) out[j][alpha[j]] = c;
    }
  }
  return out;
}

double evaluate(const UnivariatePoly& q, double t) {
  double s = 0.0;
  for (const auto& [e, c] : q) {
    double v = 1.0;
    for (int i = 0; i < e; ++i) v *= t;
    s += to_double(c) * v;
  }
  return s;
}

Polynomial as_polynomial(const UnivariatePoly& q) {
  Polynomial::TermMap terms;
  for (const auto& [e, c] : q) terms.emplace(MultiIndex{e}, c);
  return Polynomial(1, std::move(terms));
}

PolyTuple make_pa(std::size_t n, const Rational& a) {
  std::vector<Polynomial> polys;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial::TermMap terms;
    terms[MultiIndex::unit(n, j)] = 1;
    if (n > 1) terms[MultiIndex(n, 1)] += a;
    polys.emplace_back(n, std::move(terms));
  }
  return PolyTuple(std::move(polys));
}

}  // namespace hartogs
