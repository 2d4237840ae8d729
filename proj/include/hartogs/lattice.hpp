#pragma once

#include <cstddef>
#include <vector>

#include "hartogs/multi_index.hpp"

namespace hartogs {

// Box {alpha : 0 <= alpha <= bounds} enumerated in row-major order with the
// last coordinate fastest. Every alpha - gamma with gamma >= 0 has a smaller
// offset than alpha, which the recursions rely on.
class LatticeWindow {
 public:
  LatticeWindow() = default;
  explicit LatticeWindow(MultiIndex bounds);

  const MultiIndex& bounds() const noexcept { return bounds_; }
  std::size_t dim() const noexcept { return bounds_.size(); }
  std::size_t size() const noexcept { return size_; }

  bool contains(const MultiIndex& alpha) const;
  // alpha + delta stays inside the box.
  bool interior(const MultiIndex& alpha, const MultiIndex& delta) const;

  std::size_t offset(const MultiIndex& alpha) const;
  MultiIndex at(std::size_t offset) const;

  std::vector<MultiIndex> cells() const;

 private:
  MultiIndex bounds_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

// Throws Error(EmptyWindow) for n = 0 or a negative bound.
LatticeWindow build_window(const MultiIndex& bounds);

}  // namespace hartogs
