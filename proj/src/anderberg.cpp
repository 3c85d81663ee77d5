#include "sahn/anderberg.hpp"

#include "active_list.hpp"
#include "update_rules.hpp"

namespace sahn {

StepwiseDendrogram anderberg_linkage(CondensedMatrix d0, const Method& m,
                                     const AnderbergOptions& options) {
  using detail::tri;
  const index_t n = d0.size();
  if (n < 1) throw ArgumentError("need at least one point");
  StepwiseDendrogram out{n, {}, LabelConvention::scipy};
  if (n == 1) return out;
  out.rows.reserve(static_cast<std::size_t>(n - 1));

  std::vector<double> d = detail::to_working(std::move(d0).release(), m);
  detail::ActiveList active(n);
  std::vector<index_t> nnghbr(static_cast<std::size_t>(n - 1));
  std::vector<double> mindist(static_cast<std::size_t>(n - 1));
  std::vector<index_t> label(static_cast<std::size_t>(n));
  std::vector<index_t> size(static_cast<std::size_t>(n), 1);
  for (index_t x = 0; x < n; ++x) label[static_cast<std::size_t>(x)] = x;

  auto search = [&](index_t x) {
    index_t best = active.succ(x);
    double best_d = d[tri(x, best, n)];
    for (index_t y = active.succ(best); y < n; y = active.succ(y)) {
      if (d[tri(x, y, n)] < best_d) {
        best_d = d[tri(x, y, n)];
        best = y;
      }
    }
    nnghbr[static_cast<std::size_t>(x)] = best;
    mindist[static_cast<std::size_t>(x)] = best_d;
  };
  for (index_t x = 0; x < n - 1; ++x) search(x);
  std::uint64_t recalculations = 0;

  detail::with_update_rule(m, [&](auto rule) {
    for (index_t step = 0; step < n - 1; ++step) {
      // Index n-1 is never retired and has no higher neighbor.
      index_t a = active.start();
      for (index_t x = active.succ(a); x < n - 1; x = active.succ(x)) {
        if (mindist[static_cast<std::size_t>(x)] < mindist[static_cast<std::size_t>(a)]) a = x;
      }
      const index_t b = nnghbr[static_cast<std::size_t>(a)];
      const double delta = mindist[static_cast<std::size_t>(a)];
      out.rows.push_back(detail::merge_row(label[static_cast<std::size_t>(a)],
                                          label[static_cast<std::size_t>(b)],
                                          detail::from_working(delta, m), m));
      active.remove(a);

      const double na = static_cast<double>(size[static_cast<std::size_t>(a)]);
      const double nb = static_cast<double>(size[static_cast<std::size_t>(b)]);
      for (index_t x = active.start(); x < n; x = active.succ(x)) {
        if (x == b) continue;
        const double nx = static_cast<double>(size[static_cast<std::size_t>(x)]);
        d[detail::sym(x, b, n)] =
            rule(d[detail::sym(x, a, n)], d[detail::sym(x, b, n)], delta, na, nb, nx);
      }
      size[static_cast<std::size_t>(b)] += size[static_cast<std::size_t>(a)];
      label[static_cast<std::size_t>(b)] = n + step;

      for (index_t x = active.start(); x < b; x = active.succ(x)) {
        const auto ux = static_cast<std::size_t>(x);
        const double v = d[tri(x, b, n)];
        if (nnghbr[ux] == a || nnghbr[ux] == b) {
          // The old neighbor is gone or moved; b is still nearest unless it
          // moved away.
          if (v > mindist[ux]) {
            search(x);
            ++recalculations;
          } else {
            nnghbr[ux] = b;
            mindist[ux] = v;
          }
        } else if (v < mindist[ux]) {
          nnghbr[ux] = b;
          mindist[ux] = v;
        }
      }
      if (b < n - 1) search(b);
    }
  });

  if (options.stats) options.stats->recalculations = recalculations;
  return out;
}

}  // namespace sahn
