#pragma once

// Prim-style core over any symmetric distance callable dist(i, j), shared by
// the matrix and the on-the-fly vector front ends.

#include <limits>
#include <sstream>
#include <vector>

#include "sahn/core.hpp"

namespace sahn::detail {

// Lookahead for Distance::prefetch(i, j), which a matrix-backed distance
// offers because column reads in condensed storage have an irregular stride
// the hardware prefetcher misses.
inline constexpr std::size_t prefetch_distance = 16;

template <class Distance>
UnsortedDendrogram mst_core(index_t n, index_t start, Distance&& dist) {
  if (n < 1) throw ArgumentError("need at least one point");
  if (start < 0 || start >= n) {
    std::ostringstream msg;
    msg << "start point " << start << " is out of range for " << n << " points";
    throw ArgumentError(msg.str());
  }
  UnsortedDendrogram out{n, {}};
  out.rows.reserve(static_cast<std::size_t>(n - 1));
  // Points outside the tree, ascending, with their distance to the tree.
  std::vector<index_t> rest;
  rest.reserve(static_cast<std::size_t>(n - 1));
  for (index_t s = 0; s < n; ++s)
    if (s != start) rest.push_back(s);
  std::vector<double> to_tree(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());

  index_t c = start;
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if constexpr (requires { dist.prefetch(index_t{}, index_t{}); }) {
        if (const std::size_t p = k + prefetch_distance; p < rest.size()) dist.prefetch(rest[p], c);
      }
      const index_t s = rest[k];
      double& ds = to_tree[static_cast<std::size_t>(s)];
      const double v = dist(s, c);
      if (v < ds) ds = v;
      if (ds < to_tree[static_cast<std::size_t>(rest[best])]) best = k;
    }
    const index_t next = rest[best];
    out.rows.push_back({c, next, to_tree[static_cast<std::size_t>(next)]});
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    c = next;
  }
  return out;
}

}  // namespace sahn::detail
