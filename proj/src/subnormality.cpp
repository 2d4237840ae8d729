#include "hartogs/subnormality.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hartogs/coeff.hpp"
#include "hartogs/error.hpp"
#include "hartogs/lattice.hpp"

namespace hartogs {

namespace {

Rational rational_pow(const Rational& c, int e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Partial sums beta_1 + ... + beta_i, the image of beta under sum_j beta_j d_j.
MultiIndex cumulative(const MultiIndex& beta) {
  MultiIndex out(beta.size());
  int s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) out[i] = s += beta[i];
  return out;
}

void require_positive(const MultiIndex& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] < 1) throw Error(ErrorKind::InvalidMultiplicity, "m_" + std::to_string(j + 1) + " < 1");
  }
}

// Multi-indices k >= 0 with |k| <= order, sorted by total then lexicographically.
std::vector<MultiIndex> graded_indices(std::size_t n, int order) {
  std::vector<MultiIndex> out;
  for (const auto& k : LatticeWindow(MultiIndex(n, order)).cells()) {
    if (k.total() <= order) out.push_back(k);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MultiIndex& a, const MultiIndex& b) { return a.total() < b.total(); });
  return out;
}

bool witness_less(const MonotonicityWitness& a, const MonotonicityWitness& b) {
  return std::tie(a.beta, a.k) < std::tie(b.beta, b.k);
}

}  // namespace

Rational MomentSequence::scaled(const MultiIndex& beta) const {
  Rational v = generator(beta);
  if (scale != 1) v /= rational_pow(scale, beta.total());
  return v;
}

MomentSequence moment_sequence(const PolyTuple& p, const MultiIndex& m, const MultiIndex& gamma,
                               MomentVariant variant, const MultiIndex& window) {
  const std::size_t n = p.dim();
  if (m.size() != n || gamma.size() != n || window.size() != n) {
    throw Error(ErrorKind::MalformedInput, "m, gamma and window must have length " + std::to_string(n));
  }
  if (!gamma.is_nonnegative()) throw Error(ErrorKind::MalformedInput, "gamma must be nonnegative");
  require_positive(m);
  const MultiIndex reach = gamma + cumulative(window);
  MomentSequence seq;
  seq.window = window;
  if (variant == MomentVariant::Admissible) {
    if (!admissibility_degree(p).admissible) {
      throw Error(ErrorKind::NotAdmissible, "admissible moment sequence for a tuple with cross terms");
    }
    const auto tilde = tilde_restrictions(p);
    std::vector<std::vector<Rational>> tables;
    for (std::size_t j = 0; j < n; ++j) tables.push_back(univariate_coeffs(tilde[j], m[j], reach[j]));
    seq.generator = [tables, gamma](const MultiIndex& beta) -> Rational {
      const MultiIndex idx = gamma + cumulative(beta);
      Rational v(1);
      for (std::size_t j = 0; j < idx.size(); ++j) v /= tables[j].at(static_cast<std::size_t>(idx[j]));
      return v;
    };
  } else {
    const CoeffTable table = coeff_function(p, m, reach);
    seq.generator = [table, gamma](const MultiIndex& beta) -> Rational {
      return Rational(1) / table.at(gamma + cumulative(beta));
    };
  }
  return seq;
}

std::string MonotonicityReport::verdict() const {
  if (pass) return "PASS: consistent with Hausdorff moment up to order " + std::to_string(order);
  const auto& w = witnesses.front();
  return "FAIL: signed difference " + format_rational(w.value) + " at beta=" + w.beta.to_string() +
         ", k=" + w.k.to_string();
}

MonotonicityReport complete_monotonicity_check(const MomentSequence& seq, int order) {
  const std::size_t n = seq.window.size();
  if (order < 0) throw Error(ErrorKind::MalformedInput, "difference order must be nonnegative");
  if (n == 0) throw Error(ErrorKind::EmptyWindow, "moment sequence window is empty");
  for (std::size_t j = 0; j < n; ++j) {
    if (seq.window[j] < order) {
      throw Error(ErrorKind::WindowTooSmall, "window " + seq.window.to_string() +
                                                 " cannot hold differences of order " +
                                                 std::to_string(order));
    }
  }
  if (sgn(seq.scale) <= 0) throw Error(ErrorKind::MalformedInput, "scale must be positive");

  MonotonicityReport r;
  r.order = order;
  r.window = seq.window - MultiIndex(n, order);
  const LatticeWindow tested(r.window);

  // T_k(beta) = (-1)^{|k|} Delta^k s~(beta) lives on the box window - k, and
  // T_{k + e_j}(beta) = T_k(beta) - T_k(beta + e_j).
  std::map<MultiIndex, std::pair<LatticeWindow, std::vector<Rational>>> tables;
  std::vector<MonotonicityWitness> found;
  for (const auto& k : graded_indices(n, order)) {
    const LatticeWindow box(seq.window - k);
    std::vector<Rational> vals(box.size());
    if (k.is_zero()) {
      for (std::size_t off = 0; off < box.size(); ++off) vals[off] = seq.scaled(box.at(off));
    } else {
      std::size_t j = 0;
      while (k[j] == 0) ++j;
      const auto& [pbox, pvals] = tables.at(k - MultiIndex::unit(n, j));
      const MultiIndex step = MultiIndex::unit(n, j);
      for (std::size_t off = 0; off < box.size(); ++off) {
        const MultiIndex beta = box.at(off);
        vals[off] = pvals[pbox.offset(beta)] - pvals[pbox.offset(beta + step)];
      }
    }
    for (std::size_t off = 0; off < tested.size(); ++off) {
      const MultiIndex beta = tested.at(off);
      const Rational& v = vals[box.offset(beta)];
      ++r.checked;
      if (sgn(v) < 0) {
        ++r.failures;
        found.push_back({beta, k, v});
      }
    }
    tables.emplace(k, std::make_pair(box, std::move(vals)));
  }
  std::sort(found.begin(), found.end(), witness_less);
  if (found.size() > MonotonicityReport::max_witnesses) found.resize(MonotonicityReport::max_witnesses);
  r.witnesses = std::move(found);
  r.pass = r.failures == 0;
  return r;
}

HartogsCertificate hartogs_certify(const MultiIndex& m, const MultiIndex& window, int order) {
  require_positive(m);
  if (m.size() != window.size()) throw Error(ErrorKind::MalformedInput, "m and window lengths differ");
  HartogsCertificate cert;
  cert.order = order;
  const MultiIndex beta_window = window + MultiIndex(window.size(), order);
  for (const auto& gamma : LatticeWindow(window).cells()) {
    MomentSequence seq;
    seq.window = beta_window;
    seq.generator = [m, gamma](const MultiIndex& beta) -> Rational {
      return Rational(1) / hartogs_coeff_closed(m, gamma + cumulative(beta));
    };
    auto r = complete_monotonicity_check(seq, order);
    ++cert.sequences;
    if (!r.pass) {
      cert.pass = false;
      cert.failing_gamma = gamma;
      cert.failure = std::move(r);
      break;
    }
  }
  return cert;
}

}  // namespace hartogs
