#pragma once

#include <functional>
#include <span>

#include "sahn/core.hpp"

namespace sahn {

/// Hooks into the chain loop for instrumentation.
struct NNChainObserver {
  /// After an element is appended: the chain, the working dissimilarities
  /// (condensed, squared for ward; empty in vector mode) and the live flags.
  std::function<void(std::span<const index_t> chain, std::span<const double> working,
                     std::span<const char> live)>
      on_append;
  /// After a merge: the retired index, the index that now carries the
  /// union, and the updated working dissimilarities.
  std::function<void(index_t retired, index_t survivor, std::span<const double> working)>
      on_merge;
};

struct NNChainOptions {
  /// Skip the method whitelist. Only for reproducing how the chain fails on
  /// formulas it does not support.
  bool unchecked = false;
  const NNChainObserver* observer = nullptr;
};

/// True for the methods the nearest-neighbor chain handles correctly:
/// single, complete, average, weighted and ward.
bool nn_chain_supports(const Method& m);

/// Reciprocal-nearest-neighbor merges between cluster representatives, in
/// the order found. The chain starts at the lowest live index; after a merge
/// the three last elements are cut and the search resumes from the new tail,
/// preferring its predecessor on ties. Of a merged pair the smaller index is
/// retired and the larger carries the union. Takes the matrix by value as
/// its working copy. Throws MethodError for centroid, median and flexible.
UnsortedDendrogram nn_chain_core(CondensedMatrix d, const Method& m,
                                 const NNChainOptions& options = {});

/// nn_chain_core followed by a stable sort on delta and relabeling.
StepwiseDendrogram nn_chain_linkage(CondensedMatrix d, const Method& m,
                                    const NNChainOptions& options = {});

}  // namespace sahn
