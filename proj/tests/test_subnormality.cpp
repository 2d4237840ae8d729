#include "doctest.h"

#include "hartogs/error.hpp"
#include "hartogs/lattice.hpp"
#include "hartogs/subnormality.hpp"
#include "support.hpp"

using namespace hartogs;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::MalformedInput;
}

// Direct binomial expansion of (-1)^{|k|} Delta^k s~(beta).
Rational signed_difference(const MomentSequence& s, const MultiIndex& beta, const MultiIndex& k) {
  Rational total(0);
  for (const auto& i : LatticeWindow(k).cells()) {
    Rational term = s.scaled(beta + i);
    for (std::size_t j = 0; j < k.size(); ++j) term *= binomial(k[j], i[j]);
    if (i.total() % 2) total -= term;
    else total += term;
  }
  return total;
}

MomentSequence from_function(std::function<Rational(const MultiIndex&)> f, MultiIndex window,
                             Rational scale = 1) {
  MomentSequence s;
  s.generator = std::move(f);
  s.window = std::move(window);
  s.scale = scale;
  return s;
}

}  // namespace

TEST_CASE("moment sequence examples") {
  auto ones = moment_sequence(make_pa(3, 0), {1, 1, 1}, {2, 0, 1}, MomentVariant::General, {3, 3, 3});
  for (const auto& b : LatticeWindow({3, 3, 3}).cells()) CHECK(ones.generator(b) == 1);

  for (auto variant : {MomentVariant::General, MomentVariant::Admissible}) {
    auto s = moment_sequence(make_pa(2, 0), {2, 1}, {0, 0}, variant, {5, 5});
    for (const auto& b : LatticeWindow({5, 5}).cells()) CHECK(s.generator(b) == Rational(1, 1 + b[0]));
  }
  CHECK(kind_of([] {
          moment_sequence(make_pa(2, 1), {1, 1}, {0, 0}, MomentVariant::Admissible, {2, 2});
        }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] {
          moment_sequence(make_pa(2, 0), {0, 1}, {0, 0}, MomentVariant::General, {2, 2});
        }) == ErrorKind::InvalidMultiplicity);
}

TEST_CASE("general and admissible variants agree on admissible tuples") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 2;
    PolyTuple p = test::random_tuple(rng, n, 3, true);
    MultiIndex m(n), gamma(n);
    for (std::size_t j = 0; j < n; ++j) {
      m[j] = 1 + static_cast<int>((trial + j) % 3);
      gamma[j] = static_cast<int>((trial * 7 + j) % 3);
    }
    const MultiIndex w(n, n == 2 ? 4 : 2);
    auto g = moment_sequence(p, m, gamma, MomentVariant::General, w);
    auto a = moment_sequence(p, m, gamma, MomentVariant::Admissible, w);
    for (const auto& b : LatticeWindow(w).cells()) CHECK(g.generator(b) == a.generator(b));
  }
}

TEST_CASE("gamma shift consistency on the Hartogs triangle") {
  // gamma nondecreasing embeds as beta' = (g_1, g_2 - g_1, ...).
  const MultiIndex m{2, 3, 2};
  const MultiIndex gamma{1, 1, 3};
  const MultiIndex embed{1, 0, 2};
  auto s0 = moment_sequence(make_pa(3, 0), m, {0, 0, 0}, MomentVariant::Admissible, {4, 3, 5});
  auto sg = moment_sequence(make_pa(3, 0), m, gamma, MomentVariant::Admissible, {3, 3, 3});
  for (const auto& b : LatticeWindow({3, 3, 3}).cells()) CHECK(sg.generator(b) == s0.generator(b + embed));
}

TEST_CASE("complete monotonicity examples") {
  auto ones = from_function([](const MultiIndex&) -> Rational { return Rational(1); }, {6, 6});
  for (int d = 0; d <= 6; ++d) CHECK(complete_monotonicity_check(ones, d).pass);

  auto harmonic = from_function([](const MultiIndex& b) -> Rational { return Rational(1, 1 + b[0]); }, {8, 8});
  auto hr = complete_monotonicity_check(harmonic, 5);
  CHECK(hr.pass);
  CHECK(hr.verdict() == "PASS: consistent with Hausdorff moment up to order 5");
  // (-Delta)^k 1/(a + b) = k! / ((a + b)(a + b + 1)...(a + b + k)).
  for (int b = 0; b <= 3; ++b) {
    for (int k = 0; k <= 5; ++k) {
      Rational expect(1);
      for (int i = 1; i <= k; ++i) expect *= i;
      for (int i = 0; i <= k; ++i) expect /= 1 + b + i;
      CHECK(signed_difference(harmonic, {b, 0}, {k, 0}) == expect);
    }
  }

  auto doubling = from_function(
      [](const MultiIndex& b) -> Rational { return Rational(Integer(1) << static_cast<mp_bitcnt_t>(b[0])); }, {4, 4});
  auto dr = complete_monotonicity_check(doubling, 3);
  CHECK_FALSE(dr.pass);
  REQUIRE_FALSE(dr.witnesses.empty());
  CHECK(dr.witnesses.front().beta == MultiIndex{0, 0});
  CHECK(dr.witnesses.front().k == MultiIndex{1, 0});
  CHECK(dr.witnesses.front().value == -1);
  CHECK(dr.verdict() == "FAIL: signed difference -1 at beta=(0,0), k=(1,0)");

  CHECK(kind_of([&] { complete_monotonicity_check(harmonic, 9); }) == ErrorKind::WindowTooSmall);
}

TEST_CASE("dynamic programme matches the binomial expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(1, 40);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const MultiIndex w(n, n == 3 ? 4 : 6);
    const LatticeWindow win(w);
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < win.size(); ++i) vals.emplace_back(val(rng), val(rng));
    for (auto& v : vals) v.canonicalize();
    auto seq = from_function([vals, win](const MultiIndex& b) -> Rational { return vals[win.offset(b)]; }, w,
                             Rational(1 + trial % 2));
    const int order = 3;
    auto r = complete_monotonicity_check(seq, order);
    std::vector<MonotonicityWitness> brute;
    std::size_t checked = 0;
    for (const auto& b : LatticeWindow(w - MultiIndex(n, order)).cells()) {
      for (const auto& k : LatticeWindow(MultiIndex(n, order)).cells()) {
        if (k.total() > order) continue;
        ++checked;
        const Rational v = signed_difference(seq, b, k);
        if (sgn(v) < 0) brute.push_back({b, k, v});
      }
    }
    CHECK(r.checked == checked);
    CHECK(r.failures == brute.size());
    CHECK(r.pass == brute.empty());
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      CHECK(r.witnesses[i].beta == brute[i].beta);
      CHECK(r.witnesses[i].k == brute[i].k);
      CHECK(r.witnesses[i].value == brute[i].value);
    }
  }
}

TEST_CASE("scaling leaves the verdict unchanged") {
  for (auto c : {Rational(2), Rational(3, 5), Rational(7, 2)}) {
    auto base = moment_sequence(make_pa(2, 1), {2, 1}, {1, 0}, MomentVariant::General, {5, 5});
    auto scaled = from_function(
        [base, c](const MultiIndex& b) -> Rational {
          Rational v = base.generator(b);
          for (int i = 0; i < b.total(); ++i) v *= c;
          return v;
        },
        {5, 5}, c);
    auto r1 = complete_monotonicity_check(base, 3);
    auto r2 = complete_monotonicity_check(scaled, 3);
    CHECK(r1.pass == r2.pass);
    CHECK(r1.failures == r2.failures);
    REQUIRE(r1.witnesses.size() == r2.witnesses.size());
    for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
      CHECK(r1.witnesses[i].beta == r2.witnesses[i].beta);
      CHECK(r1.witnesses[i].k == r2.witnesses[i].k);
      CHECK(r1.witnesses[i].value == r2.witnesses[i].value);
    }
    auto doubling = from_function(
        [c](const MultiIndex& b) -> Rational {
          Rational v(Integer(1) << static_cast<mp_bitcnt_t>(b[0]));
          for (int i = 0; i < b.total(); ++i) v *= c;
          return v;
        },
        {4, 4}, c);
    CHECK_FALSE(complete_monotonicity_check(doubling, 2).pass);
  }
}

TEST_CASE("products of passing sequences pass") {
  const MultiIndex w{6, 6};
  auto f = moment_sequence(make_pa(2, 0), {2, 3}, {1, 2}, MomentVariant::Admissible, w);
  auto g = moment_sequence(make_pa(2, 0), {3, 1}, {0, 1}, MomentVariant::Admissible, w);
  auto h = from_function([](const MultiIndex& b) -> Rational { return Rational(1, 2 + b[1]); }, w);
  REQUIRE(complete_monotonicity_check(f, 4).pass);
  REQUIRE(complete_monotonicity_check(g, 4).pass);
  REQUIRE(complete_monotonicity_check(h, 4).pass);
  auto fg = from_function([f, g](const MultiIndex& b) -> Rational { return f.generator(b) * g.generator(b); }, w);
  auto fgh = from_function([fg, h](const MultiIndex& b) -> Rational { return fg.generator(b) * h.generator(b); }, w);
  CHECK(complete_monotonicity_check(fg, 4).pass);
  CHECK(complete_monotonicity_check(fgh, 4).pass);
}

TEST_CASE("Hartogs triangle certificates") {
  CHECK(hartogs_certify({1, 1}, {3, 3}, 4).pass);
  auto c = hartogs_certify({2, 3}, {3, 3}, 4);
  CHECK(c.pass);
  CHECK(c.sequences == 16);
  CHECK(hartogs_certify({2, 2, 2}, {0, 0, 0}, 3).pass);
  CHECK(kind_of([] { hartogs_certify({0, 2}, {1, 1}, 2); }) == ErrorKind::InvalidMultiplicity);
}
