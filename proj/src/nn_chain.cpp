#include "sahn/nn_chain.hpp"

#include "nn_chain_impl.hpp"
#include "sahn/postprocess.hpp"
#include "update_rules.hpp"

namespace sahn {

namespace {

template <class Rule>
class MatrixWorkspace {
 public:
  MatrixWorkspace(index_t n, std::vector<double> d, Rule rule)
      : n_(n), d_(std::move(d)), size_(static_cast<std::size_t>(n), 1), rule_(rule) {}

  index_t size() const { return n_; }
  double distance(index_t i, index_t j) const { return d_[detail::sym(i, j, n_)]; }
  std::span<const double> working() const { return d_; }

  void merge(index_t lo, index_t hi) {
    const double ij = distance(lo, hi);
    const double ni = static_cast<double>(size_[static_cast<std::size_t>(lo)]);
    const double nj = static_cast<double>(size_[static_cast<std::size_t>(hi)]);
    for (index_t k = 0; k < n_; ++k) {
      const double nk = static_cast<double>(size_[static_cast<std::size_t>(k)]);
      if (k == lo || k == hi || nk == 0) continue;
      d_[detail::sym(k, hi, n_)] = rule_(distance(lo, k), distance(hi, k), ij, ni, nj, nk);
    }
    size_[static_cast<std::size_t>(hi)] += size_[static_cast<std::size_t>(lo)];
    size_[static_cast<std::size_t>(lo)] = 0;
  }

 private:
  index_t n_;
  std::vector<double> d_;
  std::vector<index_t> size_;  // 0 once retired
  Rule rule_;
};

void require_supported(const Method& m, const NNChainOptions& options) {
  if (!options.unchecked && !nn_chain_supports(m)) {
    throw MethodError("the nearest-neighbor chain needs a reducible, order-independent method "
                      "(single, complete, average, weighted or ward); got " +
                      m.name());
  }
}

// Core rows with working-domain deltas.
UnsortedDendrogram core_working(CondensedMatrix d0, const Method& m,
                                const NNChainOptions& options) {
  require_supported(m, options);
  const index_t n = d0.size();
  if (n < 1) throw ArgumentError("need at least one point");
  auto d = detail::to_working(std::move(d0).release(), m);
  return detail::with_update_rule(m, [&](auto rule) {
    MatrixWorkspace ws(n, std::move(d), rule);
    return detail::nn_chain_run(ws, options.observer);
  });
}

}  // namespace

bool nn_chain_supports(const Method& m) {
  switch (m.kind()) {
    case MethodKind::single:
    case MethodKind::complete:
    case MethodKind::average:
    case MethodKind::weighted:
    case MethodKind::ward: return true;
    default: return false;
  }
}

UnsortedDendrogram nn_chain_core(CondensedMatrix d, const Method& m,
                                 const NNChainOptions& options) {
  UnsortedDendrogram u = core_working(std::move(d), m, options);
  for (MergeRow& r : u.rows) r.delta = detail::from_working(r.delta, m);
  return u;
}

StepwiseDendrogram nn_chain_linkage(CondensedMatrix d, const Method& m,
                                    const NNChainOptions& options) {
  // Sorting before the square root keeps distinct squared heights distinct.
  StepwiseDendrogram z = label(stable_sort_by_delta(core_working(std::move(d), m, options)));
  for (MergeRow& r : z.rows) r.delta = detail::from_working(r.delta, m);
  return z;
}

}  // namespace sahn
