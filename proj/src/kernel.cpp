#include "hartogs/kernel.hpp"

#include <cmath>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

void require_inside(const PolyTuple& p, const Point& z, const char* name) {
  if (!triangle_contains(p, z)) {
    throw Error(ErrorKind::OutsideDomain, std::string(name) + " is not in the P-triangle");
  }
}

// prod_{j>=2} z_j conj(w_j)
std::complex<double> tail_product(const Point& z, const Point& w) {
  std::complex<double> d = 1.0;
  for (std::size_t j = 1; j < z.size(); ++j) d *= z[j] * std::conj(w[j]);
  return d;
}

// phi(z) . conj(phi(w)), Hadamard product.
Point hadamard_conj(const Point& z, const Point& w) {
  Point a = change_of_variables(z, Direction::Forward);
  Point b = change_of_variables(w, Direction::Forward);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] *= std::conj(b[j]);
  return a;
}

}  // namespace

KernelContext::KernelContext(PolyTuple p, MultiIndex m, MultiIndex window, CoeffMethod method)
    : p_(std::move(p)), m_(std::move(m)), table_(coeff_function(p_, m_, window, method)) {
  coeff_d_.reserve(table_.values().size());
  for (const auto& v : table_.values()) coeff_d_.push_back(std::sqrt(to_double(v)));
}

double KernelContext::sqrt_coeff(const MultiIndex& alpha) const {
  const Rational& v = table_.at(alpha);  // bounds check
  if (sgn(v) == 0) return 0.0;
  return coeff_d_[table_.window().offset(alpha)];
}

std::complex<double> kernel_eval(const KernelContext& ctx, const Point& z, const Point& w) {
  require_inside(ctx.tuple(), z, "z");
  require_inside(ctx.tuple(), w, "w");
  const Point u = hadamard_conj(z, w);
  std::complex<double> k = 1.0 / tail_product(z, w);
  for (std::size_t j = 0; j < ctx.dim(); ++j) {
    k *= std::pow(1.0 - ctx.tuple()[j].evaluate(u), -ctx.multiplicity()[j]);
  }
  return k;
}

std::complex<double> kernel_series_eval(const KernelContext& ctx, const Point& z, const Point& w,
                                        int cutoff) {
  require_inside(ctx.tuple(), z, "z");
  require_inside(ctx.tuple(), w, "w");
  const std::size_t n = ctx.dim();
  for (std::size_t j = 0; j < n; ++j) {
    if (ctx.window()[j] < cutoff) {
      throw Error(ErrorKind::WindowTooSmall,
                  "cutoff " + std::to_string(cutoff) + " exceeds window " + ctx.window().to_string());
    }
  }
  const Point u = hadamard_conj(z, w);
  std::vector<std::vector<std::complex<double>>> powers(n);
  for (std::size_t j = 0; j < n; ++j) {
    powers[j].resize(static_cast<std::size_t>(cutoff) + 1);
    powers[j][0] = 1.0;
    for (int k = 1; k <= cutoff; ++k) powers[j][k] = powers[j][k - 1] * u[j];
  }
  const LatticeWindow& win = ctx.table().window();
  std::complex<double> sum = 0.0;
  for (std::size_t off = 0; off < win.size(); ++off) {
    const MultiIndex alpha = win.at(off);
    if (alpha.total() > cutoff) continue;
    std::complex<double> term = to_double(ctx.table().values()[off]);
    for (std::size_t j = 0; j < n; ++j) term *= powers[j][alpha[j]];
    sum += term;
  }
  return sum / tail_product(z, w);
}

std::complex<double> basis_eval(const KernelContext& ctx, const MultiIndex& alpha, const Point& z) {
  const Point f = change_of_variables(z, Direction::Forward);
  std::complex<double> v = ctx.sqrt_coeff(alpha);
  for (std::size_t j = 0; j < f.size(); ++j)
    for (int e = 0; e < alpha[j]; ++e) v *= f[j];
  for (std::size_t j = 1; j < z.size(); ++j) v /= z[j];
  return v;
}

GramReport gram_psd_check(const KernelContext& ctx, const std::vector<Point>& points) {
  const auto k = static_cast<Eigen::Index>(points.size());
  GramReport r;
  r.gram.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) r.gram(i, j) = kernel_eval(ctx, points[i], points[j]);
  for (Eigen::Index i = 0; i < k; ++i) {
    r.max_diagonal = std::max(r.max_diagonal, r.gram(i, i).real());
    for (Eigen::Index j = 0; j < k; ++j)
      r.hermitian_defect = std::max(r.hermitian_defect, std::abs(r.gram(i, j) - std::conj(r.gram(j, i))));
  }
  if (k == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r.gram, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  return r;
}

}  // namespace hartogs
