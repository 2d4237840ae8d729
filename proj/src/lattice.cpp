#include "hartogs/lattice.hpp"

#include "hartogs/error.hpp"

namespace hartogs {

LatticeWindow::LatticeWindow(MultiIndex bounds) : bounds_(std::move(bounds)) {
  if (bounds_.size() == 0 || !bounds_.is_nonnegative()) {
    throw Error(ErrorKind::EmptyWindow, "window bounds " + bounds_.to_string());
  }
  const std::size_t n = bounds_.size();
  stride_.assign(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    stride_[i - 1] = stride_[i] * static_cast<std::size_t>(bounds_[i] + 1);
  }
  size_ = stride_[0] * static_cast<std::size_t>(bounds_[0] + 1);
}

bool LatticeWindow::contains(const MultiIndex& alpha) const {
  return alpha.size() == dim() && alpha.is_nonnegative() && componentwise_le(alpha, bounds_);
}

bool LatticeWindow::interior(const MultiIndex& alpha, const MultiIndex& delta) const {
  return contains(alpha) && contains(alpha + delta);
}

std::size_t LatticeWindow::offset(const MultiIndex& alpha) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < dim(); ++i) off += stride_[i] * static_cast<std::size_t>(alpha[i]);
  return off;
}

MultiIndex LatticeWindow::at(std::size_t off) const {
  MultiIndex alpha(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    alpha[i] = static_cast<int>(off / stride_[i]);
    off %= stride_[i];
  }
  return alpha;
}

std::vector<MultiIndex> LatticeWindow::cells() const {
  std::vector<MultiIndex> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

LatticeWindow build_window(const MultiIndex& bounds) { return LatticeWindow(bounds); }

}  // namespace hartogs
