#include "sahn/priority_queue.hpp"

#include <sstream>

namespace sahn {

IndexedMinHeap::IndexedMinHeap(std::vector<double> keys)
    : keys_(std::move(keys)), heap_(keys_.size()), pos_(keys_.size()) {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    heap_[i] = static_cast<index_t>(i);
    pos_[i] = static_cast<index_t>(i);
  }
  for (std::size_t p = heap_.size() / 2; p-- > 0;) sift_down(p);
}

bool IndexedMinHeap::less(index_t x, index_t y) const noexcept {
  const double kx = keys_[static_cast<std::size_t>(x)];
  const double ky = keys_[static_cast<std::size_t>(y)];
  return kx < ky || (kx == ky && x < y);
}

void IndexedMinHeap::place(std::size_t pos, index_t i) noexcept {
  heap_[pos] = i;
  pos_[static_cast<std::size_t>(i)] = static_cast<index_t>(pos);
}

void IndexedMinHeap::sift_up(std::size_t pos) {
  const index_t i = heap_[pos];
  while (pos > 0) {
    const std::size_t parent = (pos - 1) / 2;
    if (!less(i, heap_[parent])) break;
    place(pos, heap_[parent]);
    pos = parent;
  }
  place(pos, i);
}

void IndexedMinHeap::sift_down(std::size_t pos) {
  const index_t i = heap_[pos];
  const std::size_t n = heap_.size();
  for (;;) {
    std::size_t child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
    if (!less(heap_[child], i)) break;
    place(pos, heap_[child]);
    pos = child;
  }
  place(pos, i);
}

void IndexedMinHeap::require(index_t i) const {
  if (!contains(i)) {
    std::ostringstream msg;
    msg << "index " << i << " is not in the heap";
    throw ArgumentError(msg.str());
  }
}

index_t IndexedMinHeap::argmin() const {
  if (heap_.empty()) throw ArgumentError("argmin of an empty heap");
  return heap_.front();
}

void IndexedMinHeap::remove_min() { remove(argmin()); }

void IndexedMinHeap::update(index_t i, double key) {
  require(i);
  keys_[static_cast<std::size_t>(i)] = key;
  const auto p = static_cast<std::size_t>(pos_[static_cast<std::size_t>(i)]);
  sift_up(p);
  sift_down(static_cast<std::size_t>(pos_[static_cast<std::size_t>(i)]));
}

void IndexedMinHeap::remove(index_t i) {
  require(i);
  const auto p = static_cast<std::size_t>(pos_[static_cast<std::size_t>(i)]);
  const index_t last = heap_.back();
  heap_.pop_back();
  pos_[static_cast<std::size_t>(i)] = -1;
  if (last == i) return;
  place(p, last);
  sift_up(p);
  sift_down(static_cast<std::size_t>(pos_[static_cast<std::size_t>(last)]));
}

void IndexedMinHeap::insert(index_t i, double key) {
  if (i < 0 || i >= capacity()) throw ArgumentError("index out of range for the heap");
  if (contains(i)) throw ArgumentError("index is already in the heap");
  keys_[static_cast<std::size_t>(i)] = key;
  heap_.push_back(i);
  pos_[static_cast<std::size_t>(i)] = static_cast<index_t>(heap_.size() - 1);
  sift_up(heap_.size() - 1);
}

bool IndexedMinHeap::contains(index_t i) const {
  return i >= 0 && i < capacity() && pos_[static_cast<std::size_t>(i)] >= 0;
}

double IndexedMinHeap::key(index_t i) const {
  require(i);
  return keys_[static_cast<std::size_t>(i)];
}

}  // namespace sahn
