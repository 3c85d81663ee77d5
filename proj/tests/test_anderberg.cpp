#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sahn/anderberg.hpp"
#include "sahn/generic.hpp"
#include "sahn/oracle.hpp"

using namespace sahn;

TEST_CASE("anderberg examples") {
  CHECK(anderberg_linkage(CondensedMatrix(2, {5}), Method::average()).rows ==
        std::vector<MergeRow>{{0, 1, 5.0}});
  const auto t = fixtures::unit_triangle();
  const auto z = anderberg_linkage(t, Method::centroid());
  CHECK(validate_dendrogram(t, Method::centroid(), z).valid);
  CHECK(same_merges(z, generic_linkage(t, Method::centroid())));
  CHECK(z.rows[1].delta < z.rows[0].delta);
  CHECK(validate_dendrogram(fixtures::tie_a(), Method::single(),
                            anderberg_linkage(fixtures::tie_a(), Method::single()))
            .valid);
  CHECK(anderberg_linkage(CondensedMatrix(1, {}), Method::single()).rows.empty());
}

TEST_CASE("anderberg output validates on random matrices") {
  std::mt19937_64 rng(61);
  for (const Method& m : fixtures::named_methods()) {
    for (int trial = 0; trial < 150; ++trial) {
      const index_t n = std::uniform_int_distribution<index_t>(2, 25)(rng);
      const CondensedMatrix d =
          trial % 2 ? fixtures::random_integer(n, rng) : fixtures::random_real(n, rng);
      const auto r = validate_dendrogram(d, m, anderberg_linkage(d, m));
      REQUIRE_MESSAGE(r.valid, m.name() << " n=" << n << ": " << r.message);
    }
  }
}

TEST_CASE("anderberg searches at least as often as generic") {
  // Without ties both algorithms merge the same pairs in the same order, so
  // the counters are comparable step by step.
  std::mt19937_64 rng(62);
  for (const Method& m : fixtures::named_methods()) {
    for (int trial = 0; trial < 100; ++trial) {
      const index_t n = std::uniform_int_distribution<index_t>(2, 60)(rng);
      const CondensedMatrix d = fixtures::random_real(n, rng);
      LinkageStats g, a;
      generic_linkage(d, m, {&g});
      anderberg_linkage(d, m, {&a});
      REQUIRE_MESSAGE(g.recalculations <= a.recalculations, m.name() << " n=" << n);
    }
  }
}
