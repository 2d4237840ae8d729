#include "hartogs/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "hartogs/error.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

namespace {

constexpr double kPi = std::numbers::pi;

// Tensor product of per-coordinate disc rules: nodes in D, weights.
struct DiscRule {
  std::vector<std::complex<double>> nodes;
  std::vector<double> weights;
};

DiscRule disc_rule(int radial, int angular) {
  const QuadratureRule gl = gauss_legendre_unit(radial);
  DiscRule r;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double rho = std::sqrt(gl.nodes[i]);
    for (int a = 0; a < angular; ++a) {
      const double theta = 2.0 * kPi * a / angular;
      r.nodes.push_back(std::polar(rho, theta));
      // dA = r dr dtheta = du dtheta / 2
      r.weights.push_back(0.5 * gl.weights[i] * 2.0 * kPi / angular);
    }
  }
  return r;
}

}  // namespace

QuadratureRule gauss_legendre_unit(int nodes) {
  if (nodes < 1) throw Error(ErrorKind::MalformedInput, "need at least one quadrature node");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(nodes)),
            &gsl_integration_glfixed_table_free);
  QuadratureRule rule;
  for (int i = 0; i < nodes; ++i) {
    double x = 0.0, w = 0.0;
    gsl_integration_glfixed_point(0.0, 1.0, static_cast<std::size_t>(i), &x, &w, table.get());
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

double disc_integral(const std::function<double(std::complex<double>)>& f, int radial, int angular) {
  const DiscRule rule = disc_rule(radial, angular);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

double QuadratureCheck::error() const { return std::abs(numeric - closed); }

QuadratureCheck beta_integral_check(int l, int k, int nodes) {
  if (l < 0 || k < 0) throw Error(ErrorKind::MalformedInput, "exponents must be nonnegative");
  QuadratureCheck c;
  c.numeric = disc_integral(
      [&](std::complex<double> w) {
        const double u = std::norm(w);
        return std::pow(u, l) * std::pow(1.0 - u, k);
      },
      nodes, 4);
  c.closed = kPi / ((k + 1) * to_double(Rational(binomial(l + k + 1, k + 1))));
  return c;
}

double hardy_norm_squared(std::size_t n, const std::function<std::complex<double>(const Point&)>& f,
                          const HardyOptions& opts) {
  const int a = opts.angular;
  std::size_t cells = 1;
  for (std::size_t j = 0; j < n; ++j) cells *= static_cast<std::size_t>(a);
  double best = 0.0;
  for (int k = 1; k <= opts.grid_max; ++k) {
    const double t = 1.0 - std::ldexp(1.0, -k);
    double weight = 1.0;
    for (std::size_t j = 1; j <= n; ++j) weight *= std::pow(t, 2.0 * j - 1.0);
    double mean = 0.0;
    Point z(n);
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t rest = c;
      for (std::size_t j = 0; j < n; ++j) {
        const double theta = 2.0 * kPi * static_cast<double>(rest % a) / a;
        rest /= a;
        // z_j = t_j t_{j+1} ... t_n e^{i theta_j} with every t_l = t.
        z[j] = std::polar(std::pow(t, static_cast<double>(n - j)), theta);
      }
      mean += std::norm(f(z));
    }
    best = std::max(best, weight * mean / static_cast<double>(cells));
  }
  return best;
}

double hardy_norm_check(std::size_t n, const MultiIndex& alpha, const HardyOptions& opts) {
  const KernelContext ctx(make_pa(n, 0), MultiIndex(n, 1), alpha);
  return hardy_norm_squared(n, [&](const Point& z) { return basis_eval(ctx, alpha, z); }, opts);
}

double bergman_norm_check(const MultiIndex& m, const MultiIndex& alpha, int radial, int angular) {
  for (int mj : m) {
    if (mj < 2) throw Error(ErrorKind::InvalidMultiplicity, "need every m_j >= 2, got " + m.to_string());
  }
  const std::size_t n = m.size();
  const KernelContext ctx(make_pa(n, 0), m, alpha);
  const DiscRule rule = disc_rule(radial, angular);
  const std::size_t per = rule.nodes.size();
  std::size_t cells = 1;
  for (std::size_t j = 0; j < n; ++j) cells *= per;

  auto weight = [&](const Point& z) {
    double w = 1.0 / std::pow(kPi, static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const double ratio = j + 1 < n ? std::norm(z[j]) / std::norm(z[j + 1]) : std::norm(z[j]);
      w *= (m[j] - 1) * std::pow(1.0 - ratio, m[j] - 2);
    }
    return w;
  };

  double total = 0.0;
  Point w(n);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t rest = c;
    double qw = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = rule.nodes[rest % per];
      qw *= rule.weights[rest % per];
      rest /= per;
    }
    const Point z = change_of_variables(w, Direction::Inverse);
    const double jac = std::norm(jacobian_inverse(w));
    total += qw * std::norm(basis_eval(ctx, alpha, z)) * weight(z) * jac;
  }
  return total;
}

}  // namespace hartogs
