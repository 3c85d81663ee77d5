#include "sahn/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "update_rules.hpp"

namespace sahn {

namespace {

void require_sizes(SizeTriple s) {
  if (s.n_i < 1 || s.n_j < 1 || s.n_k < 1) {
    std::ostringstream msg;
    msg << "cluster sizes must be positive, got (" << s.n_i << ", " << s.n_j << ", " << s.n_k
        << ")";
    throw ArgumentError(msg.str());
  }
}

}  // namespace

double update_distance(const Method& m, double d_ik, double d_jk, double d_ij, SizeTriple sizes) {
  require_sizes(sizes);
  return detail::with_update_rule(m, [&](auto rule) {
    return rule(d_ik, d_jk, d_ij, static_cast<double>(sizes.n_i), static_cast<double>(sizes.n_j),
                static_cast<double>(sizes.n_k));
  });
}

FlexibleCoefficients flexible_coefficients(MethodKind kind, SizeTriple sizes) {
  require_sizes(sizes);
  const double ni = static_cast<double>(sizes.n_i);
  const double nj = static_cast<double>(sizes.n_j);
  const double nk = static_cast<double>(sizes.n_k);
  switch (kind) {
    case MethodKind::single: return {0.5, 0.5, 0.0, -0.5};
    case MethodKind::complete: return {0.5, 0.5, 0.0, 0.5};
    case MethodKind::average: return {ni / (ni + nj), nj / (ni + nj), 0.0, 0.0};
    case MethodKind::weighted: return {0.5, 0.5, 0.0, 0.0};
    case MethodKind::ward: {
      const double s = ni + nj + nk;
      return {(ni + nk) / s, (nj + nk) / s, -nk / s, 0.0};
    }
    case MethodKind::centroid: {
      const double s = ni + nj;
      return {ni / s, nj / s, -ni * nj / (s * s), 0.0};
    }
    case MethodKind::median: return {0.5, 0.5, -0.25, 0.0};
    case MethodKind::flexible: break;
  }
  throw ArgumentError("flexible method already carries its coefficients");
}

double combined_formula(const FlexibleCoefficients& c, double d_ik, double d_jk, double d_ij) {
  return detail::FlexibleRule{c}(d_ik, d_jk, d_ij, 1.0, 1.0, 1.0);
}

double closed_form_dissimilarity(const Method& m, std::span<const index_t> a,
                                 std::span<const index_t> b, const CondensedMatrix& d0) {
  if (a.empty() || b.empty()) throw ArgumentError("clusters must be nonempty");
  const index_t n = d0.size();
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (index_t x : a) {
    if (x < 0 || x >= n) throw ArgumentError("point index out of range");
    in_a[static_cast<std::size_t>(x)] = 1;
  }
  for (index_t y : b) {
    if (y < 0 || y >= n) throw ArgumentError("point index out of range");
    if (in_a[static_cast<std::size_t>(y)]) throw ArgumentError("clusters must be disjoint");
  }

  switch (m.kind()) {
    case MethodKind::single: {
      double best = d0(a[0], b[0]);
      for (index_t x : a)
        for (index_t y : b) best = std::min(best, d0(x, y));
      return best;
    }
    case MethodKind::complete: {
      double best = d0(a[0], b[0]);
      for (index_t x : a)
        for (index_t y : b) best = std::max(best, d0(x, y));
      return best;
    }
    case MethodKind::average: {
      double sum = 0.0;
      for (index_t x : a)
        for (index_t y : b) sum += d0(x, y);
      return sum / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
    }
    case MethodKind::ward: {
      auto sq = [&](index_t x, index_t y) {
        const double v = d0(x, y);
        return v * v;
      };
      double cross = 0.0, within_a = 0.0, within_b = 0.0;
      for (index_t x : a)
        for (index_t y : b) cross += sq(x, y);
      for (index_t x : a)
        for (index_t y : a)
          if (x != y) within_a += sq(x, y);
      for (index_t x : b)
        for (index_t y : b)
          if (x != y) within_b += sq(x, y);
      const double na = static_cast<double>(a.size());
      const double nb = static_cast<double>(b.size());
      const double value = (2 * cross - nb / na * within_a - na / nb * within_b) / (na + nb);
      return std::sqrt(std::max(value, 0.0));
    }
    default: break;
  }
  throw MethodError("no closed-form cluster dissimilarity for method " + m.name());
}

ReducibilityReport check_reducibility(const Method& m, std::uint64_t trials, index_t max_size,
                                      std::uint64_t seed) {
  if (max_size < 3) throw ArgumentError("check_reducibility needs max_size >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<index_t> size_dist(1, max_size);
  std::uniform_real_distribution<double> real_dist(0.0, 1.0);
  std::uniform_int_distribution<int> small_int(1, 4);
  std::bernoulli_distribution coin(0.5);

  ReducibilityReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const bool integral = coin(rng);
    double v[3];
    for (double& x : v) x = integral ? small_int(rng) : real_dist(rng);
    std::sort(v, v + 3);
    // The smallest value is d(I,J), so the hypothesis holds.
    const double d_ij = v[0];
    double d_ik = v[1], d_jk = v[2];
    if (coin(rng)) std::swap(d_ik, d_jk);
    const SizeTriple sizes{size_dist(rng), size_dist(rng), size_dist(rng)};
    const double merged = update_distance(m, d_ik, d_jk, d_ij, sizes);
    const double lower = std::min(d_ik, d_jk);
    ++report.trials;
    // Relative slack of 1e-12 absorbs last-digit rounding in the update.
    if (merged < lower - 1e-12 * lower) {
      report.counterexample = ReducibilityCounterexample{d_ik, d_jk, d_ij, sizes, merged};
      break;
    }
  }
  return report;
}

}  // namespace sahn
