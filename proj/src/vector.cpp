#include "sahn/vector.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "mst_impl.hpp"
#include "nn_chain_impl.hpp"
#include "sahn/postprocess.hpp"
#include "sahn/priority_queue.hpp"
#include "update_rules.hpp"

namespace sahn {

namespace {

double squared_distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double t = x[k] - y[k];
    s += t * t;
  }
  return s;
}

void require_geometric(const Method& m, bool ward_only) {
  const MethodKind k = m.kind();
  if (k == MethodKind::ward) return;
  if (!ward_only && (k == MethodKind::centroid || k == MethodKind::median)) return;
  throw MethodError(ward_only ? "the chain over centroids supports ward only; got " + m.name()
                              : "cluster centers exist only for ward, centroid and median; got " +
                                    m.name());
}

// Centers of live clusters in slots; the distance is the method's squared
// dissimilarity between two clusters.
class Centers {
 public:
  Centers(const VectorDataset& ds, index_t slots, MethodKind kind)
      : dim_(static_cast<std::size_t>(ds.dim())),
        kind_(kind),
        c_(static_cast<std::size_t>(slots) * dim_),
        size_(static_cast<std::size_t>(slots), 0) {}

  void set_point(index_t slot, std::span<const double> p) {
    std::copy(p.begin(), p.end(), c_.begin() + static_cast<std::ptrdiff_t>(offset(slot)));
    size_[static_cast<std::size_t>(slot)] = 1;
  }

  std::span<const double> center(index_t slot) const {
    return {c_.data() + offset(slot), dim_};
  }
  index_t count(index_t slot) const { return size_[static_cast<std::size_t>(slot)]; }

  double distance(index_t s, index_t t) const {
    const double sq = squared_distance(center(s), center(t));
    if (kind_ != MethodKind::ward) return sq;
    const double ns = static_cast<double>(count(s)), nt = static_cast<double>(count(t));
    return 2 * ns * nt / (ns + nt) * sq;
  }

  // Writes the union of s and t into target (which may be s or t).
  void merge_into(index_t s, index_t t, index_t target) {
    const double ns = static_cast<double>(count(s)), nt = static_cast<double>(count(t));
    const double ws = kind_ == MethodKind::median ? 0.5 : ns / (ns + nt);
    const double wt = kind_ == MethodKind::median ? 0.5 : nt / (ns + nt);
    const std::size_t os = offset(s), ot = offset(t), oo = offset(target);
    for (std::size_t k = 0; k < dim_; ++k) c_[oo + k] = ws * c_[os + k] + wt * c_[ot + k];
    size_[static_cast<std::size_t>(target)] = count(s) + count(t);
    if (target != s) size_[static_cast<std::size_t>(s)] = 0;
    if (target != t) size_[static_cast<std::size_t>(t)] = 0;
  }

 private:
  std::size_t offset(index_t slot) const { return static_cast<std::size_t>(slot) * dim_; }

  std::size_t dim_;
  MethodKind kind_;
  std::vector<double> c_;
  std::vector<index_t> size_;  // 0 for an empty slot
};

class WardCentroidWorkspace {
 public:
  explicit WardCentroidWorkspace(const VectorDataset& ds)
      : n_(ds.size()), centers_(ds, ds.size(), MethodKind::ward) {
    for (index_t i = 0; i < n_; ++i) centers_.set_point(i, ds.point(i));
  }
  index_t size() const { return n_; }
  double distance(index_t i, index_t j) const { return centers_.distance(i, j); }
  std::span<const double> working() const { return {}; }
  void merge(index_t lo, index_t hi) { centers_.merge_into(lo, hi, hi); }

 private:
  index_t n_;
  Centers centers_;
};

}  // namespace

VectorDataset::VectorDataset(index_t n, index_t dim, std::vector<double> coords)
    : n_(n), dim_(dim), coords_(std::move(coords)) {
  if (n < 1) throw ArgumentError("a dataset needs at least one point");
  if (dim < 1) throw ArgumentError("a dataset needs at least one dimension");
  if (static_cast<index_t>(coords_.size()) != n * dim) {
    std::ostringstream msg;
    msg << "expected " << n * dim << " coordinates for " << n << " points in " << dim
        << " dimensions, got " << coords_.size();
    throw ArgumentError(msg.str());
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k])) {
      std::ostringstream msg;
      msg << "coordinate " << k % static_cast<std::size_t>(dim) << " of point "
          << k / static_cast<std::size_t>(dim) << " is not finite";
      throw DataError(msg.str());
    }
  }
}

std::span<const double> VectorDataset::point(index_t i) const {
  if (i < 0 || i >= n_) throw ArgumentError("point index out of range");
  return {coords_.data() + static_cast<std::size_t>(i * dim_), static_cast<std::size_t>(dim_)};
}

Metric Metric::euclidean() {
  return Metric([](auto x, auto y) { return std::sqrt(squared_distance(x, y)); }, "euclidean");
}

Metric Metric::squared_euclidean() {
  return Metric([](auto x, auto y) { return squared_distance(x, y); }, "squared_euclidean");
}

Metric Metric::custom(Function f, std::string name) {
  if (!f) throw ArgumentError("custom metric needs a callable");
  return Metric(std::move(f), std::move(name));
}

double Metric::operator()(std::span<const double> x, std::span<const double> y) const {
  const double v = f_(x, y);
  if (!std::isfinite(v) || v < 0) {
    std::ostringstream msg;
    msg << "metric " << name_ << " returned " << v << "; dissimilarities must be finite and >= 0";
    throw DataError(msg.str());
  }
  return v;
}

CondensedMatrix pairwise_dissimilarity(const VectorDataset& ds, const Metric& metric) {
  const index_t n = ds.size();
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(condensed_size(n)));
  for (index_t i = 0; i < n; ++i)
    for (index_t j = i + 1; j < n; ++j) v.push_back(metric(ds.point(i), ds.point(j)));
  return CondensedMatrix(n, std::move(v));
}

StepwiseDendrogram mst_linkage_vectors(const VectorDataset& ds, const Metric& metric,
                                       index_t start) {
  auto core = detail::mst_core(ds.size(), start, [&](index_t i, index_t j) {
    return metric(ds.point(i), ds.point(j));
  });
  return label(stable_sort_by_delta(std::move(core)));
}

StepwiseDendrogram generic_linkage_variant(const VectorDataset& ds, const Method& m,
                                           const VariantOptions& options) {
  require_geometric(m, false);
  const index_t n = ds.size();
  StepwiseDendrogram out{n, {}, LabelConvention::scipy};
  if (n == 1) return out;
  out.rows.reserve(static_cast<std::size_t>(n - 1));

  // Slot order is label order: merge k (0-based) occupies slot n-2-k, below
  // every earlier node; point i occupies slot n-1+i.
  const index_t slots = 2 * n - 1;
  auto scipy_label = [n](index_t slot) {
    return slot >= n - 1 ? slot - (n - 1) : n + (n - 2 - slot);
  };
  constexpr double inf = std::numeric_limits<double>::infinity();
  Centers centers(ds, slots, m.kind());
  for (index_t i = 0; i < n; ++i) centers.set_point(n - 1 + i, ds.point(i));
  auto live = [&](index_t s) { return centers.count(s) > 0; };

  std::vector<index_t> nnghbr(static_cast<std::size_t>(slots), -1);
  std::vector<double> mindist(static_cast<std::size_t>(slots), inf);
  // Nearest live neighbor among higher slots; inf when there is none.
  auto search = [&](index_t s) {
    index_t best = -1;
    double best_d = inf;
    for (index_t t = s + 1; t < slots; ++t) {
      if (!live(t)) continue;
      const double v = centers.distance(s, t);
      if (best < 0 || v < best_d) {
        best = t;
        best_d = v;
      }
    }
    nnghbr[static_cast<std::size_t>(s)] = best;
    mindist[static_cast<std::size_t>(s)] = best_d;
  };
  for (index_t s = n - 1; s < slots; ++s) search(s);
  IndexedMinHeap queue(mindist);
  for (index_t s = 0; s < n - 1; ++s) queue.remove(s);
  std::uint64_t recalculations = 0;

  for (index_t step = 0; step < n - 1; ++step) {
    index_t a = queue.argmin();
    // Distances between live clusters never change, so a candidate is only
    // stale when its neighbor has been merged away.
    while (!live(nnghbr[static_cast<std::size_t>(a)])) {
      search(a);
      ++recalculations;
      queue.update(a, mindist[static_cast<std::size_t>(a)]);
      a = queue.argmin();
    }
    const index_t b = nnghbr[static_cast<std::size_t>(a)];
    out.rows.push_back(detail::merge_row(scipy_label(a), scipy_label(b),
                                        std::sqrt(mindist[static_cast<std::size_t>(a)]), m));
    queue.remove(a);
    queue.remove(b);

    const index_t fresh = n - 2 - step;
    centers.merge_into(a, b, fresh);
    if (options.on_center) options.on_center(n + step, centers.center(fresh));
    if (step < n - 2) {
      search(fresh);
      queue.insert(fresh, mindist[static_cast<std::size_t>(fresh)]);
    }
  }

  if (options.stats) options.stats->recalculations = recalculations;
  return out;
}

StepwiseDendrogram nn_chain_linkage_vectors(const VectorDataset& ds, const Method& m) {
  require_geometric(m, true);
  WardCentroidWorkspace ws(ds);
  UnsortedDendrogram u = detail::nn_chain_run(ws, nullptr);
  StepwiseDendrogram z = label(stable_sort_by_delta(std::move(u)));
  for (MergeRow& r : z.rows) r.delta = std::sqrt(r.delta);
  return z;
}

}  // namespace sahn
