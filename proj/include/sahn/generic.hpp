#pragma once

#include "sahn/core.hpp"
#include "sahn/instrumentation.hpp"

namespace sahn {

struct GenericOptions {
  /// Receives the number of lazy nearest-neighbor recomputations.
  LinkageStats* stats = nullptr;
  /// Verify at the top of every iteration that each candidate distance is a
  /// lower bound for its row; throws std::logic_error on a violation. O(n^2)
  /// per iteration, for tests only.
  bool check_lower_bounds = false;
};

/// Nearest-neighbor candidates with lower bounds in an indexed min-heap.
/// Handles every method, including those with inversions. Rows are in merge
/// order under scipy labels. Takes the matrix by value as its working copy.
StepwiseDendrogram generic_linkage(CondensedMatrix d, const Method& m,
                                   const GenericOptions& options = {});

}  // namespace sahn
