#include "sahn/generic.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "active_list.hpp"
#include "sahn/priority_queue.hpp"
#include "update_rules.hpp"

namespace sahn {

namespace {

using detail::tri;

struct State {
  index_t n;
  std::vector<double> d;
  detail::ActiveList active;
  std::vector<index_t> nnghbr;
  std::vector<double> mindist;

  // Nearest active neighbor of x among higher indices; lowest index on ties.
  void search(index_t x) {
    index_t best = active.succ(x);
    double best_d = d[tri(x, best, n)];
    for (index_t y = active.succ(best); y < n; y = active.succ(y)) {
      const double v = d[tri(x, y, n)];
      if (v < best_d) {
        best_d = v;
        best = y;
      }
    }
    nnghbr[static_cast<std::size_t>(x)] = best;
    mindist[static_cast<std::size_t>(x)] = best_d;
  }

  void check_lower_bounds(const IndexedMinHeap& queue) const {
    for (index_t x = active.start(); x < n - 1; x = active.succ(x)) {
      const auto ux = static_cast<std::size_t>(x);
      const index_t nb = nnghbr[ux];
      if (nb <= x || !active.contains(nb) || queue.key(x) != mindist[ux]) {
        std::ostringstream msg;
        msg << "candidate state of " << x << " is inconsistent";
        throw std::logic_error(msg.str());
      }
      for (index_t y = active.succ(x); y < n; y = active.succ(y)) {
        if (d[tri(x, y, n)] < mindist[ux]) {
          std::ostringstream msg;
          msg << "mindist[" << x << "] = " << mindist[ux] << " exceeds d[" << x << "," << y
              << "] = " << d[tri(x, y, n)];
          throw std::logic_error(msg.str());
        }
      }
    }
  }
};

}  // namespace

StepwiseDendrogram generic_linkage(CondensedMatrix d0, const Method& m,
                                   const GenericOptions& options) {
  const index_t n = d0.size();
  if (n < 1) throw ArgumentError("need at least one point");
  StepwiseDendrogram out{n, {}, LabelConvention::scipy};
  if (n == 1) return out;
  out.rows.reserve(static_cast<std::size_t>(n - 1));

  State s{n, detail::to_working(std::move(d0).release(), m), detail::ActiveList(n),
          std::vector<index_t>(static_cast<std::size_t>(n - 1)),
          std::vector<double>(static_cast<std::size_t>(n - 1))};
  std::vector<index_t> label(static_cast<std::size_t>(n));
  std::vector<index_t> size(static_cast<std::size_t>(n), 1);
  for (index_t x = 0; x < n; ++x) label[static_cast<std::size_t>(x)] = x;
  for (index_t x = 0; x < n - 1; ++x) s.search(x);
  IndexedMinHeap queue(s.mindist);
  std::uint64_t recalculations = 0;

  detail::with_update_rule(m, [&](auto rule) {
    for (index_t step = 0; step < n - 1; ++step) {
      if (options.check_lower_bounds) s.check_lower_bounds(queue);
      index_t a = queue.argmin();
      index_t b = s.nnghbr[static_cast<std::size_t>(a)];
      // The candidate is stale when its distance changed since it was found.
      while (s.mindist[static_cast<std::size_t>(a)] != s.d[tri(a, b, n)]) {
        s.search(a);
        ++recalculations;
        queue.update(a, s.mindist[static_cast<std::size_t>(a)]);
        a = queue.argmin();
        b = s.nnghbr[static_cast<std::size_t>(a)];
      }
      const double delta = s.d[tri(a, b, n)];
      queue.remove_min();
      out.rows.push_back(detail::merge_row(label[static_cast<std::size_t>(a)],
                                          label[static_cast<std::size_t>(b)],
                                          detail::from_working(delta, m), m));
      s.active.remove(a);

      // Cluster a joins cluster b; b's index carries the union.
      const double na = static_cast<double>(size[static_cast<std::size_t>(a)]);
      const double nb = static_cast<double>(size[static_cast<std::size_t>(b)]);
      for (index_t x = s.active.start(); x < n; x = s.active.succ(x)) {
        if (x == b) continue;
        const double nx = static_cast<double>(size[static_cast<std::size_t>(x)]);
        s.d[detail::sym(x, b, n)] =
            rule(s.d[detail::sym(x, a, n)], s.d[detail::sym(x, b, n)], delta, na, nb, nx);
      }
      size[static_cast<std::size_t>(b)] += size[static_cast<std::size_t>(a)];
      label[static_cast<std::size_t>(b)] = n + step;

      // Candidates that pointed at a now point at its successor b.
      for (index_t x = s.active.start(); x < a; x = s.active.succ(x)) {
        if (s.nnghbr[static_cast<std::size_t>(x)] == a) s.nnghbr[static_cast<std::size_t>(x)] = b;
      }
      // Keep mindist a lower bound where the new cluster came closer.
      for (index_t x = s.active.start(); x < b; x = s.active.succ(x)) {
        const double v = s.d[tri(x, b, n)];
        if (v < s.mindist[static_cast<std::size_t>(x)]) {
          s.nnghbr[static_cast<std::size_t>(x)] = b;
          s.mindist[static_cast<std::size_t>(x)] = v;
          queue.update(x, v);
        }
      }
      // Index n-1 is never retired, so every b < n-1 has a live successor.
      if (b < n - 1) {
        s.search(b);
        queue.update(b, s.mindist[static_cast<std::size_t>(b)]);
      }
    }
  });

  if (options.stats) options.stats->recalculations = recalculations;
  return out;
}

}  // namespace sahn
