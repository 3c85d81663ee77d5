#pragma once

// Canned matrices and random generators shared by the tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sahn/core.hpp"
#include "sahn/vector.hpp"

namespace fixtures {

using sahn::CondensedMatrix;
using sahn::index_t;

// Three points with two ties at 2.0; they differ in which pair is at 3.0.
inline CondensedMatrix tie_a() { return CondensedMatrix(3, {2.0, 2.0, 3.0}); }
inline CondensedMatrix tie_b() { return CondensedMatrix(3, {2.0, 3.0, 2.0}); }
inline CondensedMatrix tie_c() { return CondensedMatrix(3, {3.0, 2.0, 2.0}); }

// Five points A..E on which the chain goes wrong for the sum formula.
inline CondensedMatrix chain_counterexample() {
  return CondensedMatrix(5, {3, 4, 6, 15, 5, 7, 12, 1, 13, 14});
}
inline sahn::Method sum_formula() { return sahn::Method::flexible(1, 1, 1, 0); }

inline CondensedMatrix unit_triangle() { return CondensedMatrix(3, {1.0, 1.0, 1.0}); }

inline sahn::VectorDataset unit_triangle_points() {
  return sahn::VectorDataset(3, 2, {0.0, 0.0, 1.0, 0.0, 0.5, std::sqrt(0.75)});
}

// Small integers in 1..max_value, so ties are frequent.
inline CondensedMatrix random_integer(index_t n, std::mt19937_64& rng, int max_value = 4) {
  std::uniform_int_distribution<int> dist(1, max_value);
  std::vector<double> v(static_cast<std::size_t>(sahn::condensed_size(n)));
  for (double& x : v) x = dist(rng);
  return CondensedMatrix(n, std::move(v));
}

inline CondensedMatrix random_real(index_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(sahn::condensed_size(n)));
  for (double& x : v) x = dist(rng);
  return CondensedMatrix(n, std::move(v));
}

// Gaussian points, so geometric methods see Euclidean data.
inline sahn::VectorDataset random_points(index_t n, index_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(n * dim));
  for (double& x : c) x = dist(rng);
  return sahn::VectorDataset(n, dim, std::move(c));
}

inline std::vector<sahn::Method> named_methods() {
  std::vector<sahn::Method> out;
  for (sahn::MethodKind k : sahn::named_methods()) out.push_back(sahn::Method::named(k));
  return out;
}

inline std::vector<sahn::Method> chain_methods() {
  return {sahn::Method::single(), sahn::Method::complete(), sahn::Method::average(),
          sahn::Method::weighted(), sahn::Method::ward()};
}

}  // namespace fixtures
