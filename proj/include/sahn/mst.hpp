#pragma once

#include "sahn/core.hpp"

namespace sahn {

/// Prim-style single linkage core. Grows a tree from start and emits, for
/// each newly attached point, (last attached point, new point, distance of
/// the new point to the tree). Reads each dissimilarity once, never writes
/// the input and uses Theta(n) scratch memory. Ties in the argmin go to the
/// lowest index. Throws ArgumentError when start is out of range.
UnsortedDendrogram mst_linkage_core(const CondensedMatrix& d, index_t start = 0);

/// Single linkage: mst_linkage_core followed by a stable sort and relabeling.
StepwiseDendrogram mst_linkage(const CondensedMatrix& d, index_t start = 0);

}  // namespace sahn
