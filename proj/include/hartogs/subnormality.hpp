#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/multi_index.hpp"
#include "hartogs/polytuple.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

// beta -> s(beta) on the box 0 <= beta <= window. The tested sequence is
// c^{-|beta|} s(beta) with c = scale.
struct MomentSequence {
  std::function<Rational(const MultiIndex&)> generator;
  Rational scale{1};
  MultiIndex window;

  Rational scaled(const MultiIndex& beta) const;
};

enum class MomentVariant { General, Admissible };

// General: 1 / A_{P,m}(gamma + sum_j beta_j d_j) with d_j = e_j + ... + e_n.
// Admissible: prod_j 1 / A~_j(gamma_j + beta_1 + ... + beta_j).
// Throws NotAdmissible when the admissible variant is asked of a tuple that is not.
MomentSequence moment_sequence(const PolyTuple& p, const MultiIndex& m, const MultiIndex& gamma,
                               MomentVariant variant, const MultiIndex& window);

struct MonotonicityWitness {
  MultiIndex beta;
  MultiIndex k;
  Rational value;  // (-1)^{|k|} (Delta^k s~)(beta), negative
};

struct MonotonicityReport {
  bool pass = true;
  int order = 0;
  MultiIndex window;       // beta range actually tested: sequence window minus order
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<MonotonicityWitness> witnesses;  // lexicographic in (beta, k), at most max_witnesses

  std::string verdict() const;
  static constexpr std::size_t max_witnesses = 8;
};

// Signed differences (-1)^{|k|} Delta^k s~ (beta) >= 0 for |k| <= order and
// beta <= window - order. Throws WindowTooSmall when some window bound is
// below the order.
MonotonicityReport complete_monotonicity_check(const MomentSequence& seq, int order);

struct HartogsCertificate {
  bool pass = true;
  int order = 0;
  std::size_t sequences = 0;
  std::optional<MultiIndex> failing_gamma;
  std::optional<MonotonicityReport> failure;
};

// Runs the check for prod_j 1 / C(gamma_j + beta_1 + ... + beta_j + m_j - 1, m_j - 1)
// over every gamma <= window, with beta <= window.
HartogsCertificate hartogs_certify(const MultiIndex& m, const MultiIndex& window, int order);

}  // namespace hartogs
