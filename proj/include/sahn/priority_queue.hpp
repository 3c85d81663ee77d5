#pragma once

#include <cstddef>
#include <vector>

#include "sahn/core.hpp"

namespace sahn {

/// Binary min-heap over the indices 0..capacity-1, keyed by doubles, with
/// O(log n) key changes and removal by index. Equal keys are ordered by
/// index, so argmin() is deterministic.
class IndexedMinHeap {
 public:
  /// Heap containing every index i with key keys[i]; built in O(n).
  explicit IndexedMinHeap(std::vector<double> keys);

  /// Index with the smallest key. Throws ArgumentError when empty.
  index_t argmin() const;
  void remove_min();
  /// Sets the key of a contained index (up or down).
  void update(index_t i, double key);
  void remove(index_t i);
  /// Puts a removed index back with the given key.
  void insert(index_t i, double key);

  bool contains(index_t i) const;
  double key(index_t i) const;
  std::size_t size() const noexcept { return heap_.size(); }
  bool empty() const noexcept { return heap_.empty(); }
  index_t capacity() const noexcept { return static_cast<index_t>(keys_.size()); }

 private:
  bool less(index_t x, index_t y) const noexcept;
  void sift_up(std::size_t pos);
  void sift_down(std::size_t pos);
  void place(std::size_t pos, index_t i) noexcept;
  void require(index_t i) const;

  std::vector<double> keys_;
  std::vector<index_t> heap_;  // heap position -> index
  std::vector<index_t> pos_;   // index -> heap position, -1 if absent
};

}  // namespace sahn
