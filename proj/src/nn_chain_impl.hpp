#pragma once

// The chain loop, generic over how cluster dissimilarities are stored. A
// workspace provides
//   index_t size() const;
//   double distance(index_t i, index_t j) const;   // working domain
//   void merge(index_t retired, index_t survivor); // survivor > retired
//   std::span<const double> working() const;       // for observers
// and the loop owns the live set.

#include <vector>

#include "active_list.hpp"
#include "sahn/nn_chain.hpp"

namespace sahn::detail {

template <class Workspace>
UnsortedDendrogram nn_chain_run(Workspace& ws, const NNChainObserver* observer) {
  const index_t n = ws.size();
  UnsortedDendrogram out{n, {}};
  if (n < 2) return out;
  out.rows.reserve(static_cast<std::size_t>(n - 1));
  ActiveList active(n);
  std::vector<char> live(static_cast<std::size_t>(n), 1);
  std::vector<index_t> chain;
  chain.reserve(static_cast<std::size_t>(n));

  auto appended = [&] {
    if (observer && observer->on_append) observer->on_append(chain, ws.working(), live);
  };

  for (index_t step = 0; step < n - 1; ++step) {
    index_t a, b;
    double best;
    if (chain.size() <= 3) {
      // Restart from the lowest live index.
      chain.clear();
      a = active.start();
      chain.push_back(a);
      appended();
      b = active.succ(a);
      best = ws.distance(a, b);
      for (index_t y = active.succ(b); y < n; y = active.succ(y)) {
        const double v = ws.distance(a, y);
        if (v < best) {
          best = v;
          b = y;
        }
      }
    } else {
      // Drop the merged pair; the tail's predecessor seeds the next search.
      chain.resize(chain.size() - 2);
      b = chain.back();
      chain.pop_back();
      a = chain.back();
      best = ws.distance(a, b);
    }
    // Here a is the predecessor of b (or the chain head) and best = d(a, b).
    for (;;) {
      chain.push_back(b);
      appended();
      index_t next = a;
      for (index_t y = active.start(); y < n; y = active.succ(y)) {
        if (y == b) continue;
        const double v = ws.distance(b, y);
        if (v < best) {
          best = v;
          next = y;
        }
      }
      if (next == a) break;  // a and b are reciprocal nearest neighbors
      a = b;
      b = next;
    }
    out.rows.push_back({a, b, best});
    const index_t lo = a < b ? a : b;
    const index_t hi = a < b ? b : a;
    ws.merge(lo, hi);
    active.remove(lo);
    live[static_cast<std::size_t>(lo)] = 0;
    if (observer && observer->on_merge) observer->on_merge(lo, hi, ws.working());
  }
  return out;
}

}  // namespace sahn::detail
