#pragma once

#include <vector>

#include "sahn/core.hpp"

namespace sahn {

/// Rows sorted by delta with equal deltas kept in input order. Stability is
/// required for correctness of the NN-chain and MST pipelines.
UnsortedDendrogram stable_sort_by_delta(UnsortedDendrogram u);

/// Union-find over the 2n-1 node labels of a scipy-convention dendrogram.
/// unite() always creates the next consecutive label, starting at n.
class UnionFind {
 public:
  explicit UnionFind(index_t n);

  /// Root label of x, compressing the walked path.
  index_t find(index_t x);

  /// Root label of x without modifying the structure. Reference version of
  /// find() kept for differential testing.
  index_t find_uncompressed(index_t x) const;

  /// Joins the roots m and n under next_label() and advances the counter.
  void unite(index_t m, index_t n);

  index_t next_label() const noexcept { return next_label_; }
  /// Parent of x, or -1 for a root.
  index_t parent(index_t x) const { return parent_.at(static_cast<std::size_t>(x)); }

 private:
  void check(index_t x) const;

  std::vector<index_t> parent_;  // -1 marks a root
  index_t next_label_;
};

/// Converts stably sorted representative rows into scipy labels. Requires
/// exactly n-1 rows with representatives in 0..n-1.
StepwiseDendrogram label(const UnsortedDendrogram& sorted);

}  // namespace sahn
