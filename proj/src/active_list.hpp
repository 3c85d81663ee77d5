#pragma once

// Doubly linked list over the indices 0..n-1 that are still in play, so
// scans over live clusters skip retired ones in O(1) per step.

#include <vector>

#include "sahn/core.hpp"

namespace sahn::detail {

class ActiveList {
 public:
  explicit ActiveList(index_t n)
      : n_(n), succ_(static_cast<std::size_t>(n) + 1), pred_(static_cast<std::size_t>(n) + 1) {
    for (index_t i = 0; i <= n; ++i) {
      succ_[static_cast<std::size_t>(i)] = i + 1;
      pred_[static_cast<std::size_t>(i)] = i - 1;
    }
    start_ = n > 0 ? 0 : n;
  }

  index_t start() const noexcept { return start_; }
  /// One past the last index; the loop sentinel.
  index_t end() const noexcept { return n_; }
  index_t succ(index_t i) const noexcept { return succ_[static_cast<std::size_t>(i)]; }

  void remove(index_t i) noexcept {
    const index_t s = succ(i);
    const index_t p = pred_[static_cast<std::size_t>(i)];
    if (i == start_) {
      start_ = s;
    } else {
      succ_[static_cast<std::size_t>(p)] = s;
    }
    pred_[static_cast<std::size_t>(s)] = p;
    succ_[static_cast<std::size_t>(i)] = n_ + 1;  // marks i as removed
  }

  bool contains(index_t i) const noexcept { return succ_[static_cast<std::size_t>(i)] <= n_; }

 private:
  index_t n_;
  index_t start_;
  std::vector<index_t> succ_;
  std::vector<index_t> pred_;
};

}  // namespace sahn::detail
