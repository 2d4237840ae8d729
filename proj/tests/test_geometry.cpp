#include "doctest.h"

#include <cmath>

#include "hartogs/error.hpp"
#include "hartogs/geometry.hpp"
#include "support.hpp"

using namespace hartogs;
using C = std::complex<double>;

TEST_CASE("phi and its inverse") {
  Point f = change_of_variables({0.2, 0.5}, Direction::Forward);
  CHECK(std::abs(f[0] - C(0.4)) < 1e-15);
  CHECK(std::abs(f[1] - C(0.5)) < 1e-15);
  Point g = change_of_variables({0.4, 0.5}, Direction::Inverse);
  CHECK(std::abs(g[0] - C(0.2)) < 1e-15);
  CHECK(std::abs(g[1] - C(0.5)) < 1e-15);

  try {
    change_of_variables({0.2, 0.0}, Direction::Forward);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroCoordinate);
  }
  CHECK_NOTHROW(change_of_variables({0.0, 0.3}, Direction::Forward));
  CHECK_NOTHROW(change_of_variables({0.2, 0.0}, Direction::Inverse));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Point z(n);
    for (auto& c : z) c = C(u(rng), u(rng));
    for (std::size_t j = 1; j < n; ++j)
      if (std::abs(z[j]) < 0.1) z[j] += 0.5;
    Point back = change_of_variables(change_of_variables(z, Direction::Inverse), Direction::Forward);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(back[j] - z[j]) < 1e-14 * (1 + std::abs(z[j])) * 16);
  }
}

TEST_CASE("jacobian of the inverse") {
  CHECK(std::abs(jacobian_inverse({7.0, 0.5}) - C(0.5)) < 1e-15);
  CHECK(std::abs(jacobian_inverse({1.0, 2.0, 3.0}) - C(18.0)) < 1e-13);
  CHECK(jacobian_inverse({1.0, 0.0, 3.0}) == C(0.0));
}

TEST_CASE("triangle membership") {
  auto p0 = make_pa(2, 0);
  CHECK(triangle_contains(p0, {0.2, 0.5}));
  CHECK_FALSE(triangle_contains(p0, {0.5, 0.2}));
  CHECK_FALSE(triangle_contains(p0, {0.2, 0.0}));
  // Boundary is excluded.
  CHECK_FALSE(triangle_contains(p0, {0.5, 0.5}));

  auto p1 = make_pa(2, 1);
  CHECK(triangle_contains(p1, {0.61, 0.78}));
  CHECK_FALSE(triangle_contains(p1, {0.63, 0.79}));

  auto q = test::poly(2, {{{1, 0}, "1"}, {{0, 1}, "1"}});
  CHECK(q_ball_contains(q, {0.5, 0.5}));
  CHECK_FALSE(q_ball_contains(q, {0.8, 0.7}));
}

TEST_CASE("polydisc radii") {
  auto r0 = polydisc_radii(make_pa(3, 0));
  for (double r : r0) CHECK(std::abs(r - 1.0) < 1e-6);
  auto fib = test::tuple(1, {{{{1}, "1"}, {{2}, "1"}}});
  CHECK(std::abs(polydisc_radii(fib)[0] - std::sqrt((std::sqrt(5.0) - 1) / 2)) < 1e-6);
  auto four = test::tuple(1, {{{{1}, "4"}}});
  CHECK(std::abs(polydisc_radii(four)[0] - 0.5) < 1e-6);
  auto small = test::tuple(1, {{{{1}, "1/100"}}});
  CHECK(std::abs(polydisc_radii(small)[0] - 10.0) < 1e-5);
}

TEST_CASE("membership properties on random tuples") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> mod(0.0, 1.2);
  std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    PolyTuple p = test::random_tuple(rng, n, 3, trial % 2 == 0);
    const auto radii = polydisc_radii(p);
    const bool admissible = admissibility_degree(p).admissible;
    for (int s = 0; s < 50; ++s) {
      Point z(n);
      for (auto& c : z) c = std::polar(mod(rng), arg(rng));
      const bool in = triangle_contains(p, z);
      // Reinhardt: unimodular rotations preserve membership.
      Point rot = z;
      for (auto& c : rot) c *= std::polar(1.0, arg(rng));
      CHECK(triangle_contains(p, rot) == in);
      if (in) {
        const auto x = phi_moduli_squared(z);
        for (std::size_t j = 0; j < n; ++j) CHECK(p[j].evaluate(x) < 1.0);
        for (std::size_t j = 0; j < n; ++j) {
          double bound = 1.0;
          for (std::size_t l = j; l < n; ++l) bound *= radii[l];
          CHECK(std::abs(z[j]) < bound + 1e-9);
        }
      }
      if (admissible) {
        const auto w = change_of_variables(z, Direction::Forward);
        bool poly_disc = true;
        for (std::size_t j = 0; j < n; ++j) poly_disc = poly_disc && std::abs(w[j]) < radii[j];
        // Points within 1e-9 of the boundary could flip on the bisection tolerance.
        bool near = false;
        for (std::size_t j = 0; j < n; ++j) near = near || std::abs(std::abs(w[j]) - radii[j]) < 1e-9;
        if (!near) CHECK(poly_disc == in);
      }
    }
  }
}
