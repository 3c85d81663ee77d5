#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sahn/core.hpp"
#include "sahn/instrumentation.hpp"
#include "sahn/vector.hpp"

namespace sahn {

enum class Algorithm { automatic, primitive, generic, nnchain, mst, anderberg, generic_variant };

std::string_view to_string(Algorithm a);
/// Accepts auto, primitive, generic, nnchain, mst, anderberg, generic-variant.
Algorithm parse_algorithm(std::string_view text);

/// Default choice per method: single -> mst; complete, average, weighted,
/// ward -> nnchain; centroid, median, flexible -> generic.
Algorithm recommended_algorithm(const Method& m);

/// Why the pair cannot run, or nullopt when it can. generic-variant needs
/// vector input; every other algorithm runs on a matrix.
std::optional<std::string> illegal_pair(Algorithm a, const Method& m);

/// Runs a matrix algorithm (automatic is resolved first). Throws MethodError
/// for an illegal pair.
StepwiseDendrogram run_matrix_algorithm(Algorithm a, const Method& m, CondensedMatrix d,
                                        LinkageStats* stats = nullptr);

}  // namespace sahn
