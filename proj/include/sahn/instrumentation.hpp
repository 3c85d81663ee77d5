#pragma once

#include <cstdint>

namespace sahn {

/// Counters filled in by the matrix-based algorithms when requested.
struct LinkageStats {
  /// Nearest-neighbor searches repeated after the initial pass.
  std::uint64_t recalculations = 0;
};

}  // namespace sahn
