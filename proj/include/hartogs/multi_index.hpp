#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hartogs {

// Lattice point in Z^n. Valid exponents are nonnegative, but differences
// such as alpha - e_j are allowed to go negative so callers can test
// membership in Z^n_+ with is_nonnegative().
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n, int fill = 0) : v_(n, fill) {}
  MultiIndex(std::initializer_list<int> init) : v_(init) {}
  explicit MultiIndex(std::vector<int> v) : v_(std::move(v)) {}

  // e_k (0-based k).
  static MultiIndex unit(std::size_t n, std::size_t k);
  // e_j + e_{j+1} + ... + e_{n-1} (0-based j).
  static MultiIndex tail(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& entries() const noexcept { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  long total() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  // Lexicographic; used for map keys and witness ordering.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<int> v_;
};

// Componentwise a <= b.
bool componentwise_le(const MultiIndex& a, const MultiIndex& b);

}  // namespace hartogs
