#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sahn/core.hpp"
#include "sahn/instrumentation.hpp"

namespace sahn {

/// n points in dim dimensions, row-major. Coordinates must be finite.
class VectorDataset {
 public:
  VectorDataset(index_t n, index_t dim, std::vector<double> coords);

  index_t size() const noexcept { return n_; }
  index_t dim() const noexcept { return dim_; }
  std::span<const double> point(index_t i) const;
  std::span<const double> coords() const noexcept { return coords_; }

 private:
  index_t n_;
  index_t dim_;
  std::vector<double> coords_;
};

/// Dissimilarity between two points of equal dimension.
class Metric {
 public:
  using Function = std::function<double(std::span<const double>, std::span<const double>)>;

  static Metric euclidean();
  static Metric squared_euclidean();
  /// Results are checked: negative or non-finite values raise DataError.
  static Metric custom(Function f, std::string name = "custom");

  /// Checked evaluation.
  double operator()(std::span<const double> x, std::span<const double> y) const;
  const std::string& name() const noexcept { return name_; }

 private:
  Metric(Function f, std::string name) : f_(std::move(f)), name_(std::move(name)) {}
  Function f_;
  std::string name_;
};

CondensedMatrix pairwise_dissimilarity(const VectorDataset& ds, const Metric& metric);

/// Single linkage with distances computed on the fly: Theta(n) scratch
/// memory besides the dataset, and each pair evaluated once.
StepwiseDendrogram mst_linkage_vectors(const VectorDataset& ds, const Metric& metric,
                                       index_t start = 0);

/// Receives the members' centers after every merge (centroid or midpoint),
/// keyed by the new scipy label.
using CenterObserver = std::function<void(index_t label, std::span<const double> center)>;

struct VariantOptions {
  LinkageStats* stats = nullptr;
  CenterObserver on_center;
};

/// Generic algorithm over cluster centers for ward, centroid and median on
/// Euclidean data. Every merge creates a node ordered below all existing
/// ones, so a candidate only goes stale when its neighbor disappears. Rows
/// are in merge order under scipy labels; no sort. Throws MethodError for
/// any other method.
StepwiseDendrogram generic_linkage_variant(const VectorDataset& ds, const Method& m,
                                           const VariantOptions& options = {});

/// Nearest-neighbor chain over centroids for ward on Euclidean data.
/// Throws MethodError for any other method.
StepwiseDendrogram nn_chain_linkage_vectors(const VectorDataset& ds, const Method& m);

}  // namespace sahn
