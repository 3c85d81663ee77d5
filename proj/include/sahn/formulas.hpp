#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "sahn/core.hpp"

namespace sahn {

/// Cluster cardinalities for an update: I and J are merged, K is any other
/// cluster.
struct SizeTriple {
  index_t n_i = 1;
  index_t n_j = 1;
  index_t n_k = 1;
};

/// Lance-Williams update d(I u J, K) for method m.
///
/// For ward, centroid and median the arguments and the result are SQUARED
/// dissimilarities; algorithms keep these methods in squared form and take
/// the square root only when a merge row is emitted. Every other method,
/// flexible included, works on the values as given.
///
/// Throws ArgumentError if any size is < 1.
double update_distance(const Method& m, double d_ik, double d_jk, double d_ij, SizeTriple sizes);

/// Coefficients of the combined formula that reproduce the named method's
/// update for these sizes (squared form for the geometric methods).
/// Throws ArgumentError for flexible, which carries its own coefficients.
FlexibleCoefficients flexible_coefficients(MethodKind kind, SizeTriple sizes);

/// Evaluates the combined four-coefficient formula.
double combined_formula(const FlexibleCoefficients& c, double d_ik, double d_jk, double d_ij);

/// Non-iterative dissimilarity between disjoint clusters A and B on the
/// original matrix: single -> min, complete -> max, average -> mean,
/// ward -> the general (not necessarily Euclidean) Ward expression.
/// Returned on the unsquared scale.
///
/// Throws ArgumentError for empty or overlapping sets and MethodError for
/// weighted, centroid, median and flexible, which have no such expression on
/// a dissimilarity matrix.
double closed_form_dissimilarity(const Method& m, std::span<const index_t> a,
                                 std::span<const index_t> b, const CondensedMatrix& d0);

struct ReducibilityCounterexample {
  double d_ik = 0.0;
  double d_jk = 0.0;
  double d_ij = 0.0;
  SizeTriple sizes;
  double merged = 0.0;  // update_distance(m, d_ik, d_jk, d_ij, sizes)
};

struct ReducibilityReport {
  std::uint64_t trials = 0;
  std::optional<ReducibilityCounterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Sampled falsification of the reducibility property
///   d(I,J) <= min{d(I,K), d(J,K)}  =>  min{d(I,K), d(J,K)} <= d(I u J, K).
/// Cluster sizes are drawn from 1..max_size; values are a mix of continuous
/// draws and small integers so that equalities are exercised. Stops at the
/// first counterexample. Requires max_size >= 3.
ReducibilityReport check_reducibility(const Method& m, std::uint64_t trials, index_t max_size,
                                      std::uint64_t seed);

}  // namespace sahn
