#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sahn/core.hpp"

namespace sahn {

/// How the primitive algorithm resolves several pairs at the global minimum.
/// Every choice yields a valid dendrogram; determinism is a test convenience.
struct TieBreak {
  enum class Kind { lexicographic, reverse_lexicographic, random };
  Kind kind = Kind::lexicographic;
  std::uint64_t seed = 0;

  static TieBreak lexicographic() { return {Kind::lexicographic, 0}; }
  static TieBreak reverse_lexicographic() { return {Kind::reverse_lexicographic, 0}; }
  static TieBreak random(std::uint64_t seed) { return {Kind::random, seed}; }
};

/// Relative tolerance used by the validator and the enumerator.
inline constexpr double default_tolerance = 1e-12;

/// The procedural definition of SAHN clustering, Theta(n^3): repeatedly
/// merge a globally closest pair and update dissimilarities with the
/// method's formula. Pairs are compared by scipy labels (smaller first) for
/// tie-breaking; rows are emitted as (smaller label, larger label).
StepwiseDendrogram primitive_clustering(const CondensedMatrix& d0, const Method& m,
                                        TieBreak tie_break = TieBreak::lexicographic());

enum class ValidationFailure { none, structure, not_live, not_minimal, delta_mismatch };

std::string_view to_string(ValidationFailure f);

struct ValidationResult {
  bool valid = true;
  index_t step = 0;
  ValidationFailure reason = ValidationFailure::none;
  std::string message;

  explicit operator bool() const noexcept { return valid; }
};

/// Decides whether cand is a possible output of primitive_clustering under
/// some tie resolution, by replaying its merges.
///
/// At every step the merged pair must be live, its dissimilarity must attain
/// the current global minimum, and the recorded delta must match it. For
/// ward, centroid and median the comparison happens on squared values (the
/// candidate's delta is squared). Two values x, y count as equal when
///   |x - y| <= tol * max(|x|, |y|, s)
/// where s is the largest input value in the working domain; tol = 0 demands
/// exact equality. The row order (a, b) selects I = a, J = b in the update.
ValidationResult validate_dendrogram(const CondensedMatrix& d0, const Method& m,
                                     const StepwiseDendrogram& cand,
                                     double tol = default_tolerance);

/// Every dendrogram the primitive algorithm can produce under any tie
/// choices, with rows written as (smaller label, larger label). Branches on
/// all pairs equal to the minimum under the validator's tolerance rule.
/// Throws SizeError for n > 8.
std::vector<StepwiseDendrogram> enumerate_valid_dendrograms(const CondensedMatrix& d0,
                                                            const Method& m,
                                                            double tol = default_tolerance);

/// Same merge sequence up to the order of labels within a row, with deltas
/// equal under the tolerance rule (scale taken from the deltas themselves).
bool same_merges(const StepwiseDendrogram& x, const StepwiseDendrogram& y,
                 double tol = default_tolerance);

/// Membership test against the output of enumerate_valid_dendrograms.
bool contains_dendrogram(std::span<const StepwiseDendrogram> set, const StepwiseDendrogram& cand,
                         double tol = default_tolerance);

}  // namespace sahn
