#pragma once

#include "sahn/core.hpp"
#include "sahn/instrumentation.hpp"

namespace sahn {

struct AnderbergOptions {
  /// Receives the number of nearest-neighbor searches repeated after a merge
  /// (searches for the merged cluster itself are not counted).
  LinkageStats* stats = nullptr;
};

/// Baseline with an exact nearest neighbor per index among higher indices.
/// Each step scans the neighbor list for the global minimum; after a merge
/// every index whose neighbor distance may have grown is searched again.
/// Rows are in merge order under scipy labels.
StepwiseDendrogram anderberg_linkage(CondensedMatrix d, const Method& m,
                                     const AnderbergOptions& options = {});

}  // namespace sahn
