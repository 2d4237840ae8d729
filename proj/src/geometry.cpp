#include "hartogs/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "hartogs/error.hpp"

namespace hartogs {

Point change_of_variables(const Point& p, Direction direction) {
  const std::size_t n = p.size();
  Point out(n);
  if (n == 0) return out;
  if (direction == Direction::Forward) {
    for (std::size_t j = 1; j < n; ++j) {
      if (p[j] == 0.0) {
        throw Error(ErrorKind::ZeroCoordinate, "z_" + std::to_string(j + 1) + " = 0");
      }
    }
    for (std::size_t j = 0; j + 1 < n; ++j) out[j] = p[j] / p[j + 1];
    out[n - 1] = p[n - 1];
  } else {
    std::complex<double> acc = 1.0;
    for (std::size_t j = n; j-- > 0;) {
      acc *= p[j];
      out[j] = acc;
    }
  }
  return out;
}

std::complex<double> jacobian_inverse(const Point& p) {
  std::complex<double> jac = 1.0;
  for (std::size_t j = 1; j < p.size(); ++j)
    for (std::size_t e = 0; e < j; ++e) jac *= p[j];
  return jac;
}

std::vector<double> phi_moduli_squared(const Point& z) {
  const std::size_t n = z.size();
  std::vector<double> x(n);
  for (std::size_t j = 0; j + 1 < n; ++j) x[j] = std::norm(z[j]) / std::norm(z[j + 1]);
  if (n > 0) x[n - 1] = std::norm(z[n - 1]);
  return x;
}

bool triangle_contains(const PolyTuple& p, const Point& z) {
  if (z.size() != p.dim()) {
    throw Error(ErrorKind::MalformedInput, "point dimension " + std::to_string(z.size()) +
                                               " does not match n=" + std::to_string(p.dim()));
  }
  for (std::size_t j = 1; j < z.size(); ++j)
    if (z[j] == 0.0) return false;
  const std::vector<double> x = phi_moduli_squared(z);
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (!(p[j].evaluate(x) < 1.0)) return false;
  }
  return true;
}

bool q_ball_contains(const Polynomial& q, const Point& z) {
  std::vector<double> x(z.size());
  std::transform(z.begin(), z.end(), x.begin(), [](auto c) { return std::norm(c); });
  return q.evaluate(x) < 1.0;
}

double polydisc_radius(const UnivariatePoly& q) {
  auto lin = q.find(1);
  if (lin == q.end() || sgn(lin->second) <= 0) {
    throw Error(ErrorKind::MissingLinearTerm, "restriction has no positive linear term");
  }
  const double a = to_double(lin->second);
  double lo = 0.0;
  double hi = std::max(1.0, 1.0 / a);
  while (evaluate(q, hi) < 1.0) hi *= 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (evaluate(q, mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(0.5 * (lo + hi));
}

std::vector<double> polydisc_radii(const PolyTuple& p) {
  std::vector<double> r;
  for (const auto& q : tilde_restrictions(p)) r.push_back(polydisc_radius(q));
  return r;
}

}  // namespace hartogs
