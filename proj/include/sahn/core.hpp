#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sahn/errors.hpp"

namespace sahn {

using index_t = std::int64_t;

/// Offset of the pair (i, j), i < j, in a condensed matrix over n points.
/// Throws ArgumentError unless 0 <= i < j < n.
index_t condensed_index(index_t i, index_t j, index_t n);

/// Number of entries in a condensed matrix over n points.
constexpr index_t condensed_size(index_t n) noexcept { return n * (n - 1) / 2; }

/// Pairwise dissimilarities stored as the strict upper triangle, row-major.
///
/// Symmetry and the zero diagonal are structural: only pairs i < j are
/// stored. Values must be finite and nonnegative; the triangle inequality is
/// not required and distinct points may be at distance zero.
class CondensedMatrix {
 public:
  CondensedMatrix(index_t n, std::vector<double> values);

  index_t size() const noexcept { return n_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Dissimilarity between distinct points i and j (either order).
  double operator()(index_t i, index_t j) const;

  /// Hands the storage to an algorithm that updates it in place.
  std::vector<double> release() && { return std::move(values_); }

  friend bool operator==(const CondensedMatrix&, const CondensedMatrix&) = default;

 private:
  index_t n_;
  std::vector<double> values_;
};

enum class MethodKind { single, complete, average, weighted, ward, centroid, median, flexible };

/// Lance-Williams coefficients of the combined update formula
///   d(I u J, K) = alpha_i d(I,K) + alpha_j d(J,K) + beta d(I,J) + gamma |d(I,K) - d(J,K)|.
struct FlexibleCoefficients {
  double alpha_i = 0.0;
  double alpha_j = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  friend bool operator==(const FlexibleCoefficients&, const FlexibleCoefficients&) = default;
};

/// Linkage scheme: one of the seven named schemes, or a flexible scheme with
/// user-chosen coefficients.
class Method {
 public:
  static Method single() { return Method(MethodKind::single); }
  static Method complete() { return Method(MethodKind::complete); }
  static Method average() { return Method(MethodKind::average); }
  static Method weighted() { return Method(MethodKind::weighted); }
  static Method ward() { return Method(MethodKind::ward); }
  static Method centroid() { return Method(MethodKind::centroid); }
  static Method median() { return Method(MethodKind::median); }
  static Method flexible(double alpha_i, double alpha_j, double beta, double gamma) {
    return Method(FlexibleCoefficients{alpha_i, alpha_j, beta, gamma});
  }
  /// Named kinds only; use flexible() for the parameterized family.
  static Method named(MethodKind kind);

  /// Accepts "single" ... "median" and "flexible:aI,aJ,b,g".
  static Method parse(std::string_view text);

  MethodKind kind() const noexcept { return kind_; }
  /// Present exactly for flexible.
  const std::optional<FlexibleCoefficients>& coefficients() const noexcept { return coeffs_; }

  /// True for the schemes whose dendrograms can contain inversions.
  bool may_invert() const noexcept;
  /// True for ward, centroid and median, which are updated on squared values.
  bool squared() const noexcept;

  std::string name() const;

  friend bool operator==(const Method&, const Method&) = default;

 private:
  explicit Method(MethodKind kind) : kind_(kind) {}
  explicit Method(FlexibleCoefficients c) : kind_(MethodKind::flexible), coeffs_(c) {}

  MethodKind kind_;
  std::optional<FlexibleCoefficients> coeffs_;
};

std::string_view to_string(MethodKind kind);

/// The seven named methods, in table order.
std::span<const MethodKind> named_methods();

enum class LabelConvention { scipy, r, matlab };

std::string_view to_string(LabelConvention c);
LabelConvention parse_convention(std::string_view text);

/// One merge step (a, b, delta).
struct MergeRow {
  index_t a = 0;
  index_t b = 0;
  double delta = 0.0;

  friend bool operator==(const MergeRow&, const MergeRow&) = default;
};

/// List of n-1 merges with node labels under a label convention.
///
/// Under scipy labels singletons are 0..n-1 and row i creates node n+i.
/// Rows are in merge order and need not be sorted by delta.
struct StepwiseDendrogram {
  index_t n = 0;
  std::vector<MergeRow> rows;
  LabelConvention convention = LabelConvention::scipy;

  friend bool operator==(const StepwiseDendrogram&, const StepwiseDendrogram&) = default;
};

/// Core-algorithm output: merges between cluster representatives (original
/// point indices), before sorting and relabeling.
struct UnsortedDendrogram {
  index_t n = 0;
  std::vector<MergeRow> rows;
};

/// Relabels singletons and new nodes to the target convention. Deltas and
/// row order are unchanged.
StepwiseDendrogram convert_convention(const StepwiseDendrogram& d, LabelConvention target);

/// Structural check only: n-1 rows, every label in range for the
/// convention, created before use, merged at most once, a != b.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> structural_error(const StepwiseDendrogram& d);

}  // namespace sahn
