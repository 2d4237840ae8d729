// Shared helpers for the unit tests: tuple literals and seeded generators.
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hartogs/geometry.hpp"
#include "hartogs/polytuple.hpp"

namespace hartogs::test {

using TermList = std::vector<std::pair<MultiIndex, std::string>>;

inline Polynomial poly(std::size_t n, const TermList& terms) {
  Polynomial::TermMap map;
  for (const auto& [alpha, c] : terms) map[alpha] += parse_rational(c);
  return Polynomial(n, std::move(map));
}

inline PolyTuple tuple(std::size_t n, const std::vector<TermList>& polys) {
  std::vector<Polynomial> out;
  for (const auto& t : polys) out.push_back(poly(n, t));
  return PolyTuple(std::move(out));
}

inline Rational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline MultiIndex random_exponent(std::mt19937_64& rng, std::size_t n, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  MultiIndex a(n);
  const int d = deg(rng);
  for (int i = 0; i < d; ++i) a[var(rng)] += 1;
  return a;
}

// Nonnegative-coefficient polynomial without constant term.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, int max_degree,
                                    int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms);
  Polynomial::TermMap map;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) map[random_exponent(rng, n, max_degree)] += random_coeff(rng);
  return Polynomial(n, std::move(map));
}

// Positive regular tuple; cross terms included unless admissible_only.
inline PolyTuple random_tuple(std::mt19937_64& rng, std::size_t n, int max_degree,
                              bool admissible_only) {
  std::vector<Polynomial> polys;
  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<int> power(2, max_degree < 2 ? 2 : max_degree);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial::TermMap map;
    map[MultiIndex::unit(n, j)] = random_coeff(rng);
    const int k = extra(rng);
    for (int i = 0; i < k && max_degree >= 2; ++i) {
      if (admissible_only) {
        MultiIndex a(n);
        a[j] = power(rng);
        map[a] += random_coeff(rng);
      } else {
        map[random_exponent(rng, n, max_degree)] += random_coeff(rng);
      }
    }
    polys.emplace_back(n, std::move(map));
  }
  return PolyTuple(std::move(polys));
}

// Point of the P-triangle obtained by sampling phi-coordinates with moduli
// below `cap` and accepting when P_j(|phi|^2) < 1.
inline Point random_triangle_point(std::mt19937_64& rng, const PolyTuple& p, double cap) {
  std::uniform_real_distribution<double> mod(0.0, cap);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * 3.141592653589793);
  const std::size_t n = p.dim();
  for (;;) {
    Point w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = std::polar(mod(rng), arg(rng));
    if (n > 1 && std::abs(w[n - 1]) < 1e-3) continue;
    Point z = change_of_variables(w, Direction::Inverse);
    bool tail_ok = true;
    for (std::size_t j = 1; j < n; ++j) tail_ok = tail_ok && std::abs(z[j]) > 1e-12;
    if (tail_ok && triangle_contains(p, z)) return z;
  }
}

}  // namespace hartogs::test
