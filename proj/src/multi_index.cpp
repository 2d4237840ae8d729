#include "hartogs/multi_index.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hartogs {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  MultiIndex e(n);
  e.v_[k] = 1;
  return e;
}

MultiIndex MultiIndex::tail(std::size_t n, std::size_t j) {
  MultiIndex e(n);
  for (std::size_t k = j; k < n; ++k) e.v_[k] = 1;
  return e;
}

long MultiIndex::total() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

bool MultiIndex::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool MultiIndex::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

bool componentwise_le(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace hartogs
