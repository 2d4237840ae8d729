#include "hartogs/coeff.hpp"

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

const Rational kZero(0);

void check_window_dim(const MultiIndex& window, std::size_t n) {
  if (window.size() != n) {
    throw Error(ErrorKind::MalformedInput, "window " + window.to_string() + " has wrong dimension");
  }
}

struct Term {
  MultiIndex gamma;
  Rational coeff;
};

// Sparse view: offsets of nonzero entries with their lattice points.
struct Sparse {
  std::vector<std::size_t> offset;
  std::vector<MultiIndex> alpha;
};

Sparse nonzeros(const LatticeWindow& w, const std::vector<Rational>& v) {
  Sparse s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) {
      s.offset.push_back(i);
      s.alpha.push_back(w.at(i));
    }
  }
  return s;
}

// Truncated product of two tables on the same window. Offsets are linear in
// alpha, so the offset of a sum is the sum of offsets whenever it fits.
std::vector<Rational> convolve(const LatticeWindow& w, const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  const Sparse sa = nonzeros(w, a);
  const Sparse sb = nonzeros(w, b);
  const MultiIndex& bounds = w.bounds();
  const std::size_t n = w.dim();
  std::vector<Rational> out(w.size());
  Rational prod;
  for (std::size_t i = 0; i < sa.offset.size(); ++i) {
    const MultiIndex& ai = sa.alpha[i];
    for (std::size_t k = 0; k < sb.offset.size(); ++k) {
      const MultiIndex& bk = sb.alpha[k];
      bool fits = true;
      for (std::size_t d = 0; d < n; ++d) {
        if (ai[d] + bk[d] > bounds[d]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      prod = a[sa.offset[i]] * b[sb.offset[k]];
      out[sa.offset[i] + sb.offset[k]] += prod;
    }
  }
  return out;
}

std::vector<Rational> expand_recursion(const LatticeWindow& w, const std::vector<Term>& terms,
                                       int k) {
  const std::size_t size = w.size();
  const std::vector<MultiIndex> cells = w.cells();
  std::vector<Rational> prev(size);
  prev[0] = 1;
  for (int level = 1; level <= k; ++level) {
    std::vector<Rational> cur(size);
    for (std::size_t off = 0; off < size; ++off) {
      Rational v = prev[off];
      for (const Term& t : terms) {
        MultiIndex beta = cells[off] - t.gamma;
        if (!beta.is_nonnegative()) continue;
        v += t.coeff * cur[w.offset(beta)];
      }
      cur[off] = std::move(v);
    }
    prev = std::move(cur);
  }
  return prev;
}

std::vector<Rational> expand_oracle(const LatticeWindow& w, const std::vector<Term>& terms,
                                    int k) {
  std::vector<Rational> out(w.size());
  if (k == 0) {
    out[0] = 1;
    return out;
  }
  std::vector<Rational> power(w.size());
  power[0] = 1;
  const long depth = w.bounds().total();
  for (long l = 0; l <= depth; ++l) {
    const Rational c(binomial(k + l - 1, k - 1));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (sgn(power[i]) != 0) out[i] += c * power[i];
    }
    std::vector<Rational> next(w.size());
    for (std::size_t i = 0; i < power.size(); ++i) {
      if (sgn(power[i]) == 0) continue;
      const MultiIndex alpha = w.at(i);
      for (const Term& t : terms) {
        MultiIndex beta = alpha + t.gamma;
        if (w.contains(beta)) next[w.offset(beta)] += power[i] * t.coeff;
      }
    }
    power = std::move(next);
  }
  return out;
}

}  // namespace

CoeffTable::CoeffTable(LatticeWindow window, std::vector<Rational> values)
    : window_(std::move(window)), values_(std::move(values)) {}

const Rational& CoeffTable::at(const MultiIndex& alpha) const {
  if (!alpha.is_nonnegative()) return kZero;
  if (!window_.contains(alpha)) {
    throw Error(ErrorKind::WindowTooSmall,
                alpha.to_string() + " outside window " + bounds().to_string());
  }
  return values_[window_.offset(alpha)];
}

bool CoeffTable::covers(const MultiIndex& b) const {
  return b.size() == window_.dim() && componentwise_le(b, bounds());
}

CoeffTable reciprocal_power_coeffs(const Polynomial& q, int k, const MultiIndex& window,
                                   ExpansionMode mode) {
  check_window_dim(window, q.dim());
  if (q.has_constant_term()) {
    throw Error(ErrorKind::ConstantTermPresent, "(1 - Q)^{-k} needs Q(0) = 0");
  }
  if (k < 0) throw Error(ErrorKind::MalformedInput, "negative power " + std::to_string(k));
  LatticeWindow w(window);
  std::vector<Term> terms;
  for (const auto& [gamma, c] : q.terms()) terms.push_back({gamma, c});
  auto values = mode == ExpansionMode::Recursion ? expand_recursion(w, terms, k)
                                                 : expand_oracle(w, terms, k);
  return CoeffTable(std::move(w), std::move(values));
}

std::vector<Rational> univariate_coeffs(const UnivariatePoly& q, int k, int len) {
  return reciprocal_power_coeffs(as_polynomial(q), k, MultiIndex{len}).values();
}

CoeffTable coeff_function(const PolyTuple& p, const MultiIndex& m, const MultiIndex& window,
                          CoeffMethod method) {
  const std::size_t n = p.dim();
  check_window_dim(window, n);
  if (m.size() != n) throw Error(ErrorKind::MalformedInput, "multiplicity has wrong dimension");
  for (int mj : m) {
    if (mj < 1) throw Error(ErrorKind::InvalidMultiplicity, "m = " + m.to_string());
  }
  const bool admissible = admissibility_degree(p).admissible;
  if (method == CoeffMethod::Auto) {
    method = admissible ? CoeffMethod::Product : CoeffMethod::Convolution;
  }
  LatticeWindow w(window);
  if (method == CoeffMethod::Product) {
    if (!admissible) throw Error(ErrorKind::NotAdmissible, "product path needs admissible P");
    const auto tilde = tilde_restrictions(p);
    std::vector<std::vector<Rational>> factors;
    for (std::size_t j = 0; j < n; ++j) factors.push_back(univariate_coeffs(tilde[j], m[j], window[j]));
    std::vector<Rational> values(w.size());
    for (std::size_t off = 0; off < w.size(); ++off) {
      const MultiIndex alpha = w.at(off);
      Rational v(1);
      for (std::size_t j = 0; j < n; ++j) v *= factors[j][static_cast<std::size_t>(alpha[j])];
      values[off] = std::move(v);
    }
    return CoeffTable(std::move(w), std::move(values));
  }
  std::vector<Rational> acc = reciprocal_power_coeffs(p[0], m[0], window).values();
  for (std::size_t j = 1; j < n; ++j) {
    acc = convolve(w, acc, reciprocal_power_coeffs(p[j], m[j], window).values());
  }
  return CoeffTable(std::move(w), std::move(acc));
}

Rational hartogs_coeff_closed(const MultiIndex& m, const MultiIndex& alpha) {
  if (!alpha.is_nonnegative()) return 0;
  Rational v(1);
  for (std::size_t j = 0; j < m.size(); ++j) v *= Rational(binomial(alpha[j] + m[j] - 1, m[j] - 1));
  return v;
}

void write_csv(std::ostream& os, const CoeffTable& table) {
  const std::size_t n = table.window().dim();
  for (std::size_t j = 0; j < n; ++j) os << "alpha_" << (j + 1) << ",";
  os << "value\n";
  for (std::size_t off = 0; off < table.values().size(); ++off) {
    const MultiIndex alpha = table.window().at(off);
    for (int a : alpha) os << a << ",";
    os << format_rational(table.values()[off]) << "\n";
  }
}

}  // namespace hartogs
