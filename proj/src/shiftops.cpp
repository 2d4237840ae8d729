#include "hartogs/shiftops.hpp"

#include <cmath>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

MultiIndex plus_one(const MultiIndex& w) { return w + MultiIndex(w.size(), 1); }

Rational ratio(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::MalformedInput, "coefficient table has a zero entry");
  return num / den;
}

void require_admissible(const PolyTuple& p, const char* what) {
  if (!admissibility_degree(p).admissible) {
    throw Error(ErrorKind::NotAdmissible, std::string(what) + " needs an admissible tuple");
  }
}

// A~_j(k) for k = 0..len, one table per coordinate.
std::vector<std::vector<Rational>> polydisc_coeffs(const PolyTuple& p, const MultiIndex& m,
                                                   const MultiIndex& len) {
  const auto tilde = tilde_restrictions(p);
  std::vector<std::vector<Rational>> out;
  for (std::size_t j = 0; j < p.dim(); ++j) out.push_back(univariate_coeffs(tilde[j], m[j], len[j]));
  return out;
}

}  // namespace

WeightTable::WeightTable(const CoeffTable& coeffs, const MultiIndex& window) : window_(window) {
  if (!coeffs.covers(plus_one(window))) {
    throw Error(ErrorKind::CoeffTableTooSmall, "coefficients on " + coeffs.bounds().to_string() +
                                                   " do not cover window " + window.to_string() +
                                                   " plus one");
  }
  const std::size_t n = window.size();
  omega_sq_.assign(n, std::vector<Rational>(window_.size()));
  sigma_sq_.assign(n, std::vector<Rational>(window_.size()));
  for (std::size_t off = 0; off < window_.size(); ++off) {
    const MultiIndex alpha = window_.at(off);
    const Rational& a = coeffs.at(alpha);
    for (std::size_t j = 0; j < n; ++j) {
      omega_sq_[j][off] = ratio(a, coeffs.at(alpha + MultiIndex::tail(n, j)));
      sigma_sq_[j][off] = ratio(a, coeffs.at(alpha + MultiIndex::unit(n, j)));
    }
  }
}

Rational WeightTable::omega_sq(std::size_t j, const MultiIndex& alpha) const {
  if (!alpha.is_nonnegative()) return 0;
  if (!window_.contains(alpha)) throw Error(ErrorKind::WindowTooSmall, alpha.to_string());
  return omega_sq_[j][window_.offset(alpha)];
}

Rational WeightTable::sigma_sq(std::size_t j, const MultiIndex& alpha) const {
  if (!alpha.is_nonnegative()) return 0;
  if (!window_.contains(alpha)) throw Error(ErrorKind::WindowTooSmall, alpha.to_string());
  return sigma_sq_[j][window_.offset(alpha)];
}

double WeightTable::omega(std::size_t j, const MultiIndex& alpha) const {
  return std::sqrt(to_double(omega_sq(j, alpha)));
}

double WeightTable::sigma(std::size_t j, const MultiIndex& alpha) const {
  return std::sqrt(to_double(sigma_sq(j, alpha)));
}

namespace {

WeightTable::Applied apply_step(const LatticeWindow& win, const std::vector<Rational>& wsq,
                                const MultiIndex& delta, const std::vector<std::complex<double>>& x) {
  WeightTable::Applied out;
  out.value.assign(win.size(), 0.0);
  for (std::size_t off = 0; off < win.size(); ++off) {
    if (x[off] == 0.0) continue;
    const MultiIndex target = win.at(off) + delta;
    if (!win.contains(target)) {
      out.truncated = true;
      continue;
    }
    out.value[win.offset(target)] += std::sqrt(to_double(wsq[off])) * x[off];
  }
  return out;
}

}  // namespace

WeightTable::Applied WeightTable::apply_mult(std::size_t j,
                                             const std::vector<std::complex<double>>& x) const {
  return apply_step(window_, omega_sq_[j], MultiIndex::tail(dim(), j), x);
}

WeightTable::Applied WeightTable::apply_shift(std::size_t j,
                                              const std::vector<std::complex<double>>& x) const {
  return apply_step(window_, sigma_sq_[j], MultiIndex::unit(dim(), j), x);
}

std::vector<std::complex<double>> WeightTable::apply_adjoint(
    std::size_t j, const std::vector<std::complex<double>>& x) const {
  const MultiIndex delta = MultiIndex::tail(dim(), j);
  std::vector<std::complex<double>> out(window_.size(), 0.0);
  for (std::size_t off = 0; off < window_.size(); ++off) {
    if (x[off] == 0.0) continue;
    const MultiIndex source = window_.at(off) - delta;
    if (!source.is_nonnegative()) continue;
    out[window_.offset(source)] += omega(j, source) * x[off];
  }
  return out;
}

Eigen::MatrixXd WeightTable::mult_matrix(std::size_t j) const {
  const auto size = static_cast<Eigen::Index>(window_.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  const MultiIndex delta = MultiIndex::tail(dim(), j);
  for (std::size_t off = 0; off < window_.size(); ++off) {
    const MultiIndex target = window_.at(off) + delta;
    if (window_.contains(target)) {
      m(static_cast<Eigen::Index>(window_.offset(target)), static_cast<Eigen::Index>(off)) =
          std::sqrt(to_double(omega_sq_[j][off]));
    }
  }
  return m;
}

Eigen::MatrixXd WeightTable::shift_matrix(std::size_t j) const {
  const auto size = static_cast<Eigen::Index>(window_.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  const MultiIndex delta = MultiIndex::unit(dim(), j);
  for (std::size_t off = 0; off < window_.size(); ++off) {
    const MultiIndex target = window_.at(off) + delta;
    if (window_.contains(target)) {
      m(static_cast<Eigen::Index>(window_.offset(target)), static_cast<Eigen::Index>(off)) =
          std::sqrt(to_double(sigma_sq_[j][off]));
    }
  }
  return m;
}

WeightTable op_weights(const CoeffTable& coeffs, const MultiIndex& window) {
  return WeightTable(coeffs, window);
}

WeightTable op_weights(const PolyTuple& p, const MultiIndex& m, const MultiIndex& window) {
  return WeightTable(coeff_function(p, m, plus_one(window)), window);
}

double NormBounds::upper() const { return std::sqrt(to_double(upper_sq)); }

std::optional<double> NormBounds::lower() const {
  if (!lower_sq) return std::nullopt;
  return std::sqrt(to_double(*lower_sq));
}

NormBounds norm_bounds(const PolyTuple& p, const MultiIndex& m, std::size_t j) {
  Rational prod(1), prod_m(1);
  for (std::size_t l = j; l < p.dim(); ++l) {
    prod *= p.linear_coeff(l);
    prod_m *= p.linear_coeff(l) * m[l];
  }
  NormBounds b;
  b.upper_sq = 1 / prod;
  if (admissibility_degree(p).at_least(static_cast<int>(p.dim()))) b.lower_sq = 1 / prod_m;
  return b;
}

Rational norm_lower_bound_sq(const PolyTuple& p, const MultiIndex& m, std::size_t j) {
  auto b = norm_bounds(p, m, j);
  if (!b.lower_sq) {
    throw Error(ErrorKind::NotNAdmissible,
                "lower norm bound needs an " + std::to_string(p.dim()) + "-admissible tuple");
  }
  return *b.lower_sq;
}

Rational truncated_norm_sq(const WeightTable& w, std::size_t j) {
  const MultiIndex delta = MultiIndex::tail(w.dim(), j);
  Rational best(0);
  for (std::size_t off = 0; off < w.window().size(); ++off) {
    const MultiIndex alpha = w.window().at(off);
    if (!w.window().contains(alpha + delta)) continue;
    Rational v = w.omega_sq(j, alpha);
    if (v > best) best = v;
  }
  return best;
}

double CommutatorValue::value() const {
  return std::sqrt(to_double(first_sq)) - std::sqrt(to_double(second_sq));
}

CommutatorValue triangle_commutator(const WeightTable& w, const MultiIndex& alpha) {
  const std::size_t n = w.dim();
  if (n < 2) throw Error(ErrorKind::WrongDimension, "commutator probe needs n >= 2");
  const std::size_t last = n - 1, prev = n - 2;
  const MultiIndex en = MultiIndex::unit(n, last);
  const MultiIndex dp = MultiIndex::tail(n, prev);
  CommutatorValue c;
  c.alpha = alpha;
  c.image = alpha + en - dp;
  // M*_{n-1} M_n e_alpha
  c.first_sq = w.omega_sq(last, alpha) * w.omega_sq(prev, c.image);
  // M_n M*_{n-1} e_alpha
  const MultiIndex back = alpha - dp;
  c.second_sq = back.is_nonnegative() ? w.omega_sq(prev, back) * w.omega_sq(last, back) : Rational(0);
  return c;
}

ProbeReport factorization_and_commutation_probe(const PolyTuple& p, const MultiIndex& m,
                                                const MultiIndex& window) {
  const std::size_t n = p.dim();
  const WeightTable w = op_weights(p, m, window);
  const LatticeWindow& win = w.window();
  ProbeReport r;

  for (std::size_t off = 0; off < win.size(); ++off) {
    const MultiIndex alpha = win.at(off);
    for (std::size_t j = 0; j < n; ++j) {
      if (!win.contains(alpha + MultiIndex::tail(n, j))) continue;
      // M_j = W_j W_{j+1} ... W_n: the last shift acts first.
      Rational prod(1);
      MultiIndex cell = alpha;
      for (std::size_t k = n; k-- > j;) {
        prod *= w.sigma_sq(k, cell);
        cell += MultiIndex::unit(n, k);
      }
      ++r.factorization_cells;
      if (prod != w.omega_sq(j, alpha) && r.factorization_exact) {
        r.factorization_exact = false;
        r.factorization_mismatch = alpha;
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        const MultiIndex dj = MultiIndex::tail(n, j), dk = MultiIndex::tail(n, k);
        if (!win.contains(alpha + dj + dk)) continue;
        if (w.omega_sq(k, alpha) * w.omega_sq(j, alpha + dk) !=
            w.omega_sq(j, alpha) * w.omega_sq(k, alpha + dj)) {
          r.mult_commute = false;
        }
      }
    }
  }

  if (n >= 2) {
    const MultiIndex en = MultiIndex::unit(n, n - 1);
    for (std::size_t off = 0; off < win.size(); ++off) {
      const MultiIndex alpha = win.at(off);
      if (!win.contains(alpha + en)) continue;
      ++r.triangle_cells;
      CommutatorValue c = triangle_commutator(w, alpha);
      if (!c.is_zero() && !r.triangle_nonzero) r.triangle_nonzero = c;
    }
  }

  // Polydisc weights depend on one coordinate each.
  const auto at = polydisc_coeffs(p, m, plus_one(window));
  auto sig_sq = [&](std::size_t k, int t) -> Rational {
    if (t < 0) return 0;
    return at[k][static_cast<std::size_t>(t)] / at[k][static_cast<std::size_t>(t) + 1];
  };
  for (std::size_t off = 0; off < win.size(); ++off) {
    const MultiIndex alpha = win.at(off);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (j == k || !win.contains(alpha + MultiIndex::unit(n, k))) continue;
        ++r.polydisc_cells;
        const Rational first = sig_sq(k, alpha[k]) * sig_sq(j, alpha[j] - 1);
        const Rational second = sig_sq(j, alpha[j] - 1) * sig_sq(k, alpha[k]);
        if (first != second) r.polydisc_commutators_zero = false;
      }
    }
  }
  return r;
}

HyponormalityReport hyponormality_diagonal(const PolyTuple& p, const MultiIndex& m, std::size_t j,
                                           const MultiIndex& window) {
  const std::size_t n = p.dim();
  const CoeffTable a = coeff_function(p, m, plus_one(window));
  const MultiIndex d = MultiIndex::tail(n, j);
  HyponormalityReport r{LatticeWindow(window), {}, true, std::nullopt};
  r.diagonal.reserve(r.window.size());
  for (std::size_t off = 0; off < r.window.size(); ++off) {
    const MultiIndex alpha = r.window.at(off);
    Rational v = a.at(alpha) / a.at(alpha + d) - a.at(alpha - d) / a.at(alpha);
    if (sgn(v) < 0 && r.nonnegative) {
      r.nonnegative = false;
      r.first_negative = alpha;
    }
    r.diagonal.push_back(std::move(v));
  }
  return r;
}

EssentialNormalityReport essential_normality_ray(const PolyTuple& p, const MultiIndex& m,
                                                 std::size_t i, int len) {
  const std::size_t n = p.dim();
  if (n < 2 || i + 1 >= n) throw Error(ErrorKind::WrongDimension, "ray index must be below n");
  MultiIndex bounds(n);
  bounds[i] = len;
  bounds[n - 1] = 1;
  const CoeffTable a = coeff_function(p, m, bounds);
  EssentialNormalityReport r;
  for (int l = 0; l <= len; ++l) {
    MultiIndex alpha(n);
    alpha[i] = l;
    r.ratios.push_back(a.at(alpha) / a.at(alpha + MultiIndex::unit(n, n - 1)));
  }
  r.infimum = r.ratios.front();
  for (const auto& v : r.ratios) {
    if (v < r.infimum) r.infimum = v;
    if (v != r.ratios.front()) r.constant = false;
  }
  return r;
}

DetTraceReport det_trace_from_ratios(std::vector<Rational> a1, std::vector<Rational> a2,
                                     int diagonal_bound) {
  if (a1.empty() || a1.size() != a2.size()) {
    throw Error(ErrorKind::MalformedInput, "ratio sequences must be nonempty and of equal length");
  }
  DetTraceReport r;
  r.truncation = static_cast<int>(a1.size()) - 1;
  for (std::size_t k = 1; k < a1.size(); ++k) {
    if (a1[k] < a1[k - 1]) r.a1_nondecreasing = false;
    if (a2[k] < a2[k - 1]) r.a2_nondecreasing = false;
  }
  // With a(-1) = 0 every diagonal entry is a product of a first difference of
  // a1 and one of a2^2, so all entries are >= 0 exactly when both increase.
  r.positive = r.a1_nondecreasing && r.a2_nondecreasing;
  r.diagonal_bound = std::min(diagonal_bound, r.truncation);
  auto prev = [](const std::vector<Rational>& a, int k) { return k == 0 ? Rational(0) : a[k - 1]; };
  for (int i = 0; i <= r.diagonal_bound; ++i) {
    for (int k = 0; k <= r.diagonal_bound; ++k) {
      const Rational d1 = a1[i] - prev(a1, i);
      const Rational p2 = prev(a2, k);
      r.diagonal.push_back(d1 * (a2[k] * a2[k] - p2 * p2));
    }
  }
  const int K = r.truncation;
  r.partial_trace = a1[K] * a2[K] * a2[K];
  r.partial_trace_value = to_double(r.partial_trace);
  r.limit_trace_estimate = to_double(a1[K]) * to_double(a2[K]) * to_double(a2[K]);
  r.a1 = std::move(a1);
  r.a2 = std::move(a2);
  return r;
}

DetTraceReport det_commutator_and_trace(const PolyTuple& p, const MultiIndex& m, int truncation,
                                        int diagonal_bound) {
  if (p.dim() != 2) throw Error(ErrorKind::WrongDimension, "determinant operator needs n = 2");
  require_admissible(p, "determinant trace");
  if (truncation < 0) throw Error(ErrorKind::MalformedInput, "negative truncation");
  const auto a = polydisc_coeffs(p, m, MultiIndex{truncation + 1, truncation + 1});
  std::vector<Rational> r1, r2;
  for (int k = 0; k <= truncation; ++k) {
    r1.push_back(a[0][k] / a[0][k + 1]);
    r2.push_back(a[1][k] / a[1][k + 1]);
  }
  return det_trace_from_ratios(std::move(r1), std::move(r2), diagonal_bound);
}

RadiusEstimate spectral_radius_estimate(const PolyTuple& p, const MultiIndex& m, std::size_t j,
                                        int k_max, int n_max) {
  require_admissible(p, "spectral radius estimate");
  if (j >= p.dim() || k_max < 0 || n_max < 1) {
    throw Error(ErrorKind::MalformedInput, "spectral radius parameters out of range");
  }
  const auto tilde = tilde_restrictions(p);
  const std::vector<Rational> a = univariate_coeffs(tilde[j], m[j], k_max + n_max);
  std::vector<double> log_a;
  for (const auto& v : a) log_a.push_back(log_rational(v));
  RadiusEstimate r;
  for (int t = 1; t <= n_max; ++t) {
    double best = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      const double v = a[k] == a[k + t] ? 1.0 : std::exp((log_a[k] - log_a[k + t]) / (2.0 * t));
      best = std::max(best, v);
    }
    r.approximants.push_back(best);
  }
  r.estimate = r.approximants.back();
  r.upper_bound = 1.0 / std::sqrt(to_double(p.linear_coeff(j)));
  return r;
}

IntertwiningReport polydisc_intertwining_check(const PolyTuple& p, const MultiIndex& m,
                                               const MultiIndex& window) {
  require_admissible(p, "intertwining check");
  const std::size_t n = p.dim();
  const WeightTable w(coeff_function(p, m, plus_one(window), CoeffMethod::Convolution), window);
  const auto at = polydisc_coeffs(p, m, plus_one(window));
  IntertwiningReport r;
  for (std::size_t off = 0; off < w.window().size(); ++off) {
    const MultiIndex alpha = w.window().at(off);
    for (std::size_t j = 0; j < n; ++j) {
      Rational prod(1);
      for (std::size_t k = j; k < n; ++k) {
        const auto t = static_cast<std::size_t>(alpha[k]);
        prod *= at[k][t] / at[k][t + 1];
      }
      ++r.cells;
      if (prod != w.omega_sq(j, alpha) && r.exact) {
        r.exact = false;
        r.mismatch = std::make_pair(j, alpha);
      }
    }
  }
  return r;
}

std::vector<double> phi_angles(const std::vector<double>& theta) {
  std::vector<double> t(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    t[j] = j + 1 < theta.size() ? theta[j] - theta[j + 1] : theta[j];
  }
  return t;
}

double circularity_check(const WeightTable& w, const std::vector<double>& theta) {
  const std::size_t n = w.dim();
  if (theta.size() != n) throw Error(ErrorKind::MalformedInput, "theta has wrong dimension");
  const std::vector<double> tt = phi_angles(theta);
  const LatticeWindow& win = w.window();
  const auto size = static_cast<Eigen::Index>(win.size());
  Eigen::VectorXcd g(size);
  for (std::size_t off = 0; off < win.size(); ++off) {
    const MultiIndex alpha = win.at(off);
    double phase = 0.0;
    for (std::size_t k = 0; k < n; ++k) phase += tt[k] * alpha[k];
    g(static_cast<Eigen::Index>(off)) = std::polar(1.0, -phase);
  }
  const Eigen::MatrixXcd gamma = g.asDiagonal();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Eigen::MatrixXcd mj = w.mult_matrix(j).cast<std::complex<double>>();
    const Eigen::MatrixXcd lhs = gamma.adjoint() * mj * gamma;
    const Eigen::MatrixXcd rhs = std::polar(1.0, theta[j]) * mj;
    const MultiIndex d = MultiIndex::tail(n, j);
    for (std::size_t off = 0; off < win.size(); ++off) {
      if (!win.contains(win.at(off) + d)) continue;
      const auto c = static_cast<Eigen::Index>(off);
      worst = std::max(worst, (lhs.col(c) - rhs.col(c)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace hartogs
