#include "hartogs/hereditary.hpp"

#include <algorithm>
#include <cmath>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

using Laurent = std::map<MultiIndex, Rational>;

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// u^gamma with u_j = x_j / x_{j+1} (j < n) and u_n = x_n, as an x-exponent.
MultiIndex phi_exponent(const MultiIndex& gamma) {
  MultiIndex e(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) e[i] = gamma[i] - (i > 0 ? gamma[i - 1] : 0);
  return e;
}

Matrix power(const Matrix& t, int k) {
  Matrix out = Matrix::Identity(t.rows(), t.cols());
  for (int i = 0; i < k; ++i) out = out * t;
  return out;
}

Matrix monomial(const MatrixTuple& t, const MultiIndex& alpha) {
  Matrix out = Matrix::Identity(t.size(), t.size());
  for (std::size_t j = 0; j < t.dim(); ++j) {
    if (alpha[j] > 0) out = out * power(t[j], alpha[j]);
  }
  return out;
}

Matrix gram(const Matrix& a, const Matrix& inner) { return a.adjoint() * inner * a; }

double psd_floor(const Matrix& x, double tol) { return -tol * spectral_norm(x); }

bool triangular(const Matrix& m, bool upper, double tol) {
  const double bound = tol * std::max(1.0, spectral_norm(m));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if ((upper ? i > j : i < j) && std::abs(m(i, j)) > bound) return false;
    }
  }
  return true;
}

}  // namespace

MatrixTuple::MatrixTuple(std::vector<Matrix> ops, double tolerance)
    : ops_(std::move(ops)), tolerance_(tolerance) {
  if (ops_.empty()) throw Error(ErrorKind::MalformedInput, "empty matrix tuple");
  const Eigen::Index d = ops_.front().rows();
  if (d == 0) throw Error(ErrorKind::MalformedInput, "zero-size matrices");
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    if (ops_[j].rows() != d || ops_[j].cols() != d) {
      throw Error(ErrorKind::MalformedInput, "T_" + std::to_string(j + 1) + " is not " +
                                                 std::to_string(d) + "x" + std::to_string(d));
    }
  }
  if (!(tolerance_ >= 0.0)) throw Error(ErrorKind::MalformedInput, "commutation tolerance must be >= 0");
}

double MatrixTuple::commutator_defect() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    for (std::size_t k = j + 1; k < ops_.size(); ++k) {
      const double scale = std::max(1.0, spectral_norm(ops_[j]) * spectral_norm(ops_[k]));
      worst = std::max(worst, spectral_norm(ops_[j] * ops_[k] - ops_[k] * ops_[j]) / scale);
    }
  }
  return worst;
}

void MatrixTuple::require_commuting() const {
  const double d = commutator_defect();
  if (d > tolerance_) {
    throw Error(ErrorKind::NonCommuting, "relative commutator norm " + std::to_string(d) +
                                             " exceeds " + std::to_string(tolerance_));
  }
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

HereditaryPoly reciprocal_kernel_polynomial(const PolyTuple& p, const MultiIndex& m) {
  const std::size_t n = p.dim();
  if (m.size() != n) throw Error(ErrorKind::MalformedInput, "m must have length " + std::to_string(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (m[j] < 1) throw Error(ErrorKind::InvalidMultiplicity, "m_" + std::to_string(j + 1) + " < 1");
  }
  // Everything is a Laurent polynomial in x_j = z_j conj(w_j).
  MultiIndex lead(n, 1);
  lead[0] = 0;
  Laurent acc{{lead, Rational(1)}};
  for (std::size_t j = 0; j < n; ++j) {
    Laurent factor{{MultiIndex(n), Rational(1)}};
    for (const auto& [gamma, c] : p[j].terms()) factor[phi_exponent(gamma)] -= c;
    for (int k = 0; k < m[j]; ++k) acc = multiply(acc, factor);
  }
  HereditaryPoly out;
  out.n = n;
  for (const auto& [e, c] : acc) {
    if (!e.is_nonnegative()) {
      throw Error(ErrorKind::NotHereditaryPolynomial,
                  "exponent " + e.to_string() + " remains after clearing denominators");
    }
    out.terms[{e, e}] = to_double(c);
  }
  return out;
}

HereditaryValue hereditary_eval(const HereditaryPoly& p, const MatrixTuple& t) {
  if (p.n != t.dim()) {
    throw Error(ErrorKind::WrongDimension, "polynomial in " + std::to_string(p.n) + " variables, tuple of " +
                                               std::to_string(t.dim()));
  }
  t.require_commuting();
  Matrix x = Matrix::Zero(t.size(), t.size());
  for (const auto& [key, c] : p.terms) {
    const auto& [alpha, beta] = key;
    x += c * monomial(t, beta).adjoint() * monomial(t, alpha);
  }
  HereditaryValue v;
  v.asymmetry = (x - x.adjoint()).cwiseAbs().maxCoeff();
  v.value = (x + x.adjoint()) / 2.0;
  return v;
}

std::string defect_class_name(DefectClass c) {
  switch (c) {
    case DefectClass::Isometry: return "isometry";
    case DefectClass::Contraction: return "contraction";
    case DefectClass::Neither: return "neither";
  }
  return "neither";
}

DefectReport triangle_defect_classify(const MatrixTuple& t, PsdTolerance tol) {
  const std::size_t n = t.dim();
  if (n < 2) throw Error(ErrorKind::WrongDimension, "defect recursion needs n >= 2");
  t.require_commuting();
  // D^{(1)} = T_n*T_n - T_{n-1}*T_{n-1}; D^{(k)} = T*_{n-k+1} D T_{n-k+1} - T*_{n-k} D T_{n-k}.
  Matrix d = gram(t[n - 1], Matrix::Identity(t.size(), t.size())) - gram(t[n - 2], Matrix::Identity(t.size(), t.size()));
  for (std::size_t k = 2; k <= n - 1; ++k) d = gram(t[n - k], d) - gram(t[n - k - 1], d);
  DefectReport r;
  r.defect = d - gram(t[n - 1], d);
  r.defect = (r.defect + r.defect.adjoint()) / 2.0;
  r.norm = spectral_norm(r.defect);
  r.min_eigenvalue = min_eigenvalue(r.defect);
  double scale = 1.0;
  for (const auto& op : t.ops()) scale = std::max(scale, std::pow(spectral_norm(op), 2));
  if (r.norm <= tol.isometry * scale) r.kind = DefectClass::Isometry;
  else if (r.min_eigenvalue >= psd_floor(r.defect, tol.psd)) r.kind = DefectClass::Contraction;
  else r.kind = DefectClass::Neither;
  return r;
}

MatrixTuple toral_lift(const MatrixTuple& t) {
  t.require_commuting();
  std::vector<Matrix> out(t.dim());
  Matrix acc = Matrix::Identity(t.size(), t.size());
  for (std::size_t j = t.dim(); j-- > 0;) {
    acc = t[j] * acc;
    out[j] = acc;
  }
  return MatrixTuple(std::move(out), t.tolerance());
}

OrderingReport ordering_check(const MatrixTuple& t, PsdTolerance tol) {
  t.require_commuting();
  const std::size_t n = t.dim();
  const Matrix id = Matrix::Identity(t.size(), t.size());
  OrderingReport r;
  auto record = [&](const Matrix& x) {
    const Matrix h = (x + x.adjoint()) / 2.0;
    const double e = min_eigenvalue(h);
    r.chain_min_eigenvalues.push_back(e);
    if (e < psd_floor(h, tol.psd)) r.chain_holds = false;
  };
  for (std::size_t j = 0; j + 1 < n; ++j) record(gram(t[j + 1], id) - gram(t[j], id));
  record(id - gram(t[n - 1], id));

  for (bool upper : {true, false}) {
    if (std::all_of(t.ops().begin(), t.ops().end(),
                    [&](const Matrix& m) { return triangular(m, upper, t.tolerance()); })) {
      r.spectrum_checkable = true;
      break;
    }
  }
  if (r.spectrum_checkable) {
    const PolyTuple p0 = make_pa(n, 0);
    bool inside = true;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      Point lambda(n);
      for (std::size_t j = 0; j < n; ++j) lambda[j] = t[j](i, i);
      inside = inside && triangle_contains(p0, lambda);
      r.joint_eigenvalues.push_back(std::move(lambda));
    }
    r.spectrum_in_triangle = inside;
  }
  return r;
}

PickReport pick_verify(const std::vector<Point>& lambda, const std::vector<std::complex<double>>& z,
                       const Matrix& a1, const Matrix& a2) {
  const auto k = static_cast<Eigen::Index>(lambda.size());
  if (k == 0) throw Error(ErrorKind::MalformedInput, "no interpolation nodes");
  if (z.size() != lambda.size() || a1.rows() != k || a1.cols() != k || a2.rows() != k || a2.cols() != k) {
    throw Error(ErrorKind::MalformedInput, "node, target and certificate sizes disagree");
  }
  const PolyTuple p0 = make_pa(2, 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i].size() != 2 || !triangle_contains(p0, lambda[i])) {
      throw Error(ErrorKind::PointOutsideDomain, "node " + std::to_string(i + 1) + " is not in the Hartogs triangle");
    }
    if (std::abs(z[i]) > 1.0) {
      throw Error(ErrorKind::PointOutsideDomain, "target " + std::to_string(i + 1) + " has modulus above 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (lambda[i] == lambda[j]) {
        throw Error(ErrorKind::DuplicatePoints,
                    "nodes " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
      }
    }
  }
  constexpr double tol = 1e-10;
  PickReport r;
  r.hermitian_defect = std::max((a1 - a1.adjoint()).cwiseAbs().maxCoeff(), (a2 - a2.adjoint()).cwiseAbs().maxCoeff());
  r.min_eigenvalue_a1 = min_eigenvalue((a1 + a1.adjoint()) / 2.0);
  r.min_eigenvalue_a2 = min_eigenvalue((a2 + a2.adjoint()) / 2.0);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto& li = lambda[static_cast<std::size_t>(i)];
      const auto& lj = lambda[static_cast<std::size_t>(j)];
      const std::complex<double> rhs =
          (std::conj(li[1]) * lj[1] - std::conj(li[0]) * lj[0]) * a1(i, j) +
          (1.0 - std::conj(li[1]) * lj[1]) * a2(i, j);
      const std::complex<double> lhs = 1.0 - std::conj(z[static_cast<std::size_t>(i)]) * z[static_cast<std::size_t>(j)];
      r.residual = std::max(r.residual, std::abs(lhs - rhs));
    }
  }
  r.valid = r.hermitian_defect <= tol && r.min_eigenvalue_a1 >= -tol && r.min_eigenvalue_a2 >= -tol &&
            r.residual <= tol;
  return r;
}

}  // namespace hartogs
