#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "sahn/formulas.hpp"

using namespace sahn;

TEST_CASE("update_distance examples") {
  CHECK(update_distance(Method::single(), 3, 5, 1, {}) == 3);
  CHECK(update_distance(Method::complete(), 3, 5, 1, {}) == 5);
  CHECK(update_distance(Method::average(), 3, 6, 1, {1, 2, 1}) == 5);
  CHECK(update_distance(Method::weighted(), 2, 8, 1, {3, 1, 2}) == 5);
  CHECK(update_distance(Method::centroid(), 1, 1, 1, {}) == doctest::Approx(0.75));
  CHECK(update_distance(Method::median(), 1, 1, 1, {5, 1, 1}) == doctest::Approx(0.75));
  // Squared ward on three unit-distance points: (2 + 2 - 1) / 3 = 1.
  CHECK(update_distance(Method::ward(), 1, 1, 1, {}) == doctest::Approx(1.0));
  CHECK(update_distance(Method::flexible(1, 1, 1, 0), 6, 7, 1, {}) == 14);
  CHECK_THROWS_AS(update_distance(Method::single(), 1, 1, 1, {0, 1, 1}), ArgumentError);
  CHECK_THROWS_AS(update_distance(Method::average(), 1, 1, 1, {1, 1, -2}), ArgumentError);
}

TEST_CASE("flexible_coefficients examples") {
  CHECK(flexible_coefficients(MethodKind::single, {}) == FlexibleCoefficients{0.5, 0.5, 0, -0.5});
  CHECK(flexible_coefficients(MethodKind::complete, {}) == FlexibleCoefficients{0.5, 0.5, 0, 0.5});
  const auto avg = flexible_coefficients(MethodKind::average, {1, 2, 1});
  CHECK(avg.alpha_i == doctest::Approx(1.0 / 3));
  CHECK(avg.alpha_j == doctest::Approx(2.0 / 3));
  CHECK(avg.beta == 0);
  CHECK(avg.gamma == 0);
  CHECK_THROWS_AS(flexible_coefficients(MethodKind::flexible, {}), ArgumentError);
}

TEST_CASE("combined formula reproduces every named update") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> val(0.0, 10.0);
  std::uniform_int_distribution<index_t> size(1, 20);
  for (MethodKind k : named_methods()) {
    const Method m = Method::named(k);
    for (int t = 0; t < 10000; ++t) {
      const double ik = val(rng), jk = val(rng), ij = val(rng);
      const SizeTriple s{size(rng), size(rng), size(rng)};
      const double direct = update_distance(m, ik, jk, ij, s);
      const double combined = combined_formula(flexible_coefficients(k, s), ik, jk, ij);
      REQUIRE(std::abs(direct - combined) <=
              1e-12 * std::max({std::abs(direct), std::abs(combined), 1.0}));
    }
  }
}

TEST_CASE("closed_form_dissimilarity examples") {
  const CondensedMatrix d(3, {5, 2, 4});
  const index_t a0[] = {0}, a1[] = {1}, a01[] = {0, 1}, a2[] = {2};
  CHECK(closed_form_dissimilarity(Method::single(), a0, a1, d) == 5);
  CHECK(closed_form_dissimilarity(Method::average(), a01, a2, d) == 3);
  CHECK(closed_form_dissimilarity(Method::complete(), a01, a2, d) == 4);
  CHECK(closed_form_dissimilarity(Method::single(), a01, a2, d) == 2);
  CHECK(closed_form_dissimilarity(Method::ward(), a0, a1, d) == doctest::Approx(5));
  CHECK_THROWS_AS(closed_form_dissimilarity(Method::single(), a01, a1, d), ArgumentError);
  CHECK_THROWS_AS(closed_form_dissimilarity(Method::single(), {}, a1, d), ArgumentError);
  CHECK_THROWS_AS(closed_form_dissimilarity(Method::weighted(), a0, a1, d), MethodError);
  CHECK_THROWS_AS(closed_form_dissimilarity(Method::centroid(), a0, a1, d), MethodError);
  CHECK_THROWS_AS(closed_form_dissimilarity(Method::median(), a0, a1, d), MethodError);
}

TEST_CASE("ward recursion agrees with the closed form along random merge sequences") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const index_t n = std::uniform_int_distribution<index_t>(3, 10)(rng);
    // Euclidean input keeps every squared Ward value nonnegative.
    const CondensedMatrix d0 = pairwise_dissimilarity(fixtures::random_points(n, 3, rng), Metric::euclidean());
    std::vector<std::vector<index_t>> members;
    for (index_t i = 0; i < n; ++i) members.push_back({i});
    // Squared pairwise values between current clusters.
    std::vector<std::vector<double>> w(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    for (index_t i = 0; i < n; ++i)
      for (index_t j = 0; j < n; ++j)
        if (i != j) w[i][j] = d0(i, j) * d0(i, j);
    std::vector<index_t> live(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) live[i] = i;
    while (live.size() > 2) {
      std::shuffle(live.begin(), live.end(), rng);
      const index_t a = live[0], b = live[1];
      for (index_t k : live) {
        if (k == a || k == b) continue;
        const SizeTriple s{static_cast<index_t>(members[a].size()),
                           static_cast<index_t>(members[b].size()),
                           static_cast<index_t>(members[k].size())};
        w[b][k] = w[k][b] = update_distance(Method::ward(), w[a][k], w[b][k], w[a][b], s);
      }
      members[b].insert(members[b].end(), members[a].begin(), members[a].end());
      live.erase(live.begin());
      for (index_t x : live)
        for (index_t y : live) {
          if (x >= y) continue;
          const double closed = closed_form_dissimilarity(Method::ward(), members[x], members[y], d0);
          REQUIRE(std::sqrt(w[x][y]) == doctest::Approx(closed).epsilon(1e-9));
        }
    }
  }
}

TEST_CASE("weighted linkage gives the quarter mean in either merge order") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  const Method m = Method::weighted();
  for (int t = 0; t < 10000; ++t) {
    // Points I, J, K, L.
    const double ij = val(rng), ik = val(rng), il = val(rng), jk = val(rng), jl = val(rng),
                 kl = val(rng);
    const double expected = (ik + il + jk + jl) / 4;
    // (I,J) first: d(IJ,K), d(IJ,L), then merge K and L.
    const double ijk = update_distance(m, ik, jk, ij, {}), ijl = update_distance(m, il, jl, ij, {});
    const double first = update_distance(m, ijk, ijl, kl, {1, 1, 2});
    // (K,L) first.
    const double kli = update_distance(m, ik, il, kl, {}), klj = update_distance(m, jk, jl, kl, {});
    const double second = update_distance(m, kli, klj, ij, {1, 1, 2});
    REQUIRE(first == doctest::Approx(expected).epsilon(1e-12));
    REQUIRE(second == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("reducibility sampling") {
  for (MethodKind k : {MethodKind::single, MethodKind::complete, MethodKind::average,
                       MethodKind::weighted, MethodKind::ward}) {
    const auto report = check_reducibility(Method::named(k), 100000, 8, 3);
    CHECK(report.passed());
    CHECK(report.trials == 100000);
  }
  const auto centroid = check_reducibility(Method::centroid(), 100000, 8, 3);
  REQUIRE_FALSE(centroid.passed());
  const auto& c = *centroid.counterexample;
  CHECK(c.merged < std::min(c.d_ik, c.d_jk));
  CHECK_FALSE(check_reducibility(Method::median(), 100000, 8, 3).passed());
  CHECK_THROWS_AS(check_reducibility(Method::single(), 10, 2, 0), ArgumentError);
}

TEST_CASE("monotone schemes never merge below the merged pair") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  std::uniform_int_distribution<index_t> size(1, 10);
  for (const Method& m : fixtures::chain_methods()) {
    for (int t = 0; t < 100000; ++t) {
      double v[3] = {val(rng), val(rng), val(rng)};
      std::sort(v, v + 3);
      if (m.squared())
        for (double& x : v) x *= x;
      const double merged = update_distance(m, v[1], v[2], v[0], {size(rng), size(rng), size(rng)});
      REQUIRE(v[0] <= merged * (1 + 1e-12));
    }
  }
}
