#pragma once

// Inlined Lance-Williams update rules shared by every algorithm. All callers
// go through these functors so that two algorithms performing the same merge
// on the same inputs produce bit-identical dissimilarities.

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "sahn/core.hpp"

namespace sahn::detail {

struct SingleRule {
  double operator()(double ik, double jk, double, double, double, double) const {
    return std::min(ik, jk);
  }
};

struct CompleteRule {
  double operator()(double ik, double jk, double, double, double, double) const {
    return std::max(ik, jk);
  }
};

struct AverageRule {
  double operator()(double ik, double jk, double, double ni, double nj, double) const {
    return (ni * ik + nj * jk) / (ni + nj);
  }
};

struct WeightedRule {
  double operator()(double ik, double jk, double, double, double, double) const {
    return (ik + jk) / 2;
  }
};

// Squared form.
struct WardRule {
  double operator()(double ik, double jk, double ij, double ni, double nj, double nk) const {
    return ((ni + nk) * ik + (nj + nk) * jk - nk * ij) / (ni + nj + nk);
  }
};

// Squared form.
struct CentroidRule {
  double operator()(double ik, double jk, double ij, double ni, double nj, double) const {
    const double s = ni + nj;
    return (ni * ik + nj * jk) / s - ni * nj * ij / (s * s);
  }
};

// Squared form.
struct MedianRule {
  double operator()(double ik, double jk, double ij, double, double, double) const {
    return (ik + jk) / 2 - ij / 4;
  }
};

struct FlexibleRule {
  FlexibleCoefficients c;
  double operator()(double ik, double jk, double ij, double, double, double) const {
    return c.alpha_i * ik + c.alpha_j * jk + c.beta * ij + c.gamma * std::abs(ik - jk);
  }
};

/// Calls f with the rule functor for m. The functor type is a template
/// parameter of f so the update inlines into the algorithm's inner loop.
template <class F>
decltype(auto) with_update_rule(const Method& m, F&& f) {
  switch (m.kind()) {
    case MethodKind::single: return f(SingleRule{});
    case MethodKind::complete: return f(CompleteRule{});
    case MethodKind::average: return f(AverageRule{});
    case MethodKind::weighted: return f(WeightedRule{});
    case MethodKind::ward: return f(WardRule{});
    case MethodKind::centroid: return f(CentroidRule{});
    case MethodKind::median: return f(MedianRule{});
    case MethodKind::flexible: break;
  }
  return f(FlexibleRule{*m.coefficients()});
}

/// Input values in the method's working domain (squared for ward, centroid
/// and median).
inline std::vector<double> to_working(std::vector<double> values, const Method& m) {
  if (m.squared()) {
    for (double& v : values) v *= v;
  }
  return values;
}

/// Working-domain merge height back to the user-facing scale.
inline double from_working(double value, const Method& m) {
  return m.squared() ? std::sqrt(value) : value;
}

inline double to_working(double value, const Method& m) {
  return m.squared() ? value * value : value;
}

/// Row-major offset of (i, j), i < j, without range checks.
inline std::size_t tri(index_t i, index_t j, index_t n) {
  return static_cast<std::size_t>(n * i - i * (i + 1) / 2 + (j - i - 1));
}

/// Symmetric accessor over a condensed array (i != j, either order).
inline std::size_t sym(index_t i, index_t j, index_t n) {
  return i < j ? tri(i, j, n) : tri(j, i, n);
}

// Rows list the smaller label first unless the update treats I and J
// differently, in which case the order records which side was I.
inline MergeRow merge_row(index_t i, index_t j, double delta, const Method& m) {
  const auto& c = m.coefficients();
  const bool asymmetric = c && c->alpha_i != c->alpha_j;
  if (!asymmetric && j < i) std::swap(i, j);
  return {i, j, delta};
}

}  // namespace sahn::detail
