#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sahn/bench.hpp"

using namespace sahn;

TEST_CASE("gaussian mixture is deterministic and well shaped") {
  const auto a = gen_gaussian_mixture(5, 2, 1, 42);
  const auto b = gen_gaussian_mixture(5, 2, 1, 42);
  CHECK(std::vector<double>(a.coords().begin(), a.coords().end()) ==
        std::vector<double>(b.coords().begin(), b.coords().end()));
  const auto wide = gen_gaussian_mixture(10, 200, 3, 1);
  CHECK(wide.size() == 10);
  CHECK(wide.dim() == 200);
  CHECK_THROWS_AS(gen_gaussian_mixture(0, 2, 1, 1), ArgumentError);
}

TEST_CASE("single mode sample mean approaches its center") {
  // With spread 0 the single center sits at the origin.
  const index_t n = 10000;
  const auto ds = gen_gaussian_mixture(n, 3, 1, 7, 0.0);
  for (index_t j = 0; j < 3; ++j) {
    double mean = 0;
    for (index_t i = 0; i < n; ++i) mean += ds.point(i)[j];
    mean /= n;
    CHECK(std::abs(mean) < 5 / std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("uniform dissimilarities") {
  const auto d = gen_uniform_dissimilarities(50, 3);
  CHECK(d == gen_uniform_dissimilarities(50, 3));
  for (double v : d.values()) {
    CHECK(v > 0);
    CHECK(v < 1);
  }
  CHECK(gen_uniform_dissimilarities(3, 1).values().size() == 3);
}

TEST_CASE("plan parsing") {
  std::istringstream in(R"({"cells": [
    {"algorithm": "generic", "method": "centroid", "n": [200, 400], "dim": 3, "modes": 5},
    {"algorithm": "mst", "method": "single", "n": 10, "generator": "uniform", "seed": 9, "repeats": 1},
    {"algorithm": "nnchain", "method": "ward", "n": 16, "modes": "sqrt"}]})");
  const auto plan = parse_plan(in);
  REQUIRE(plan.size() == 4);
  CHECK(plan[1].n == 400);
  CHECK(plan[2].generator == Generator::uniform);
  CHECK(plan[2].seed == 9);
  CHECK(plan[3].modes == 0);
  std::istringstream bad_json("{");
  CHECK_THROWS_AS(parse_plan(bad_json), PlanError);
  std::istringstream missing(R"([{"algorithm": "mst", "n": 3}])");
  CHECK_THROWS_AS(parse_plan(missing), PlanError);
  std::istringstream bad_alg(R"([{"algorithm": "slink", "method": "single", "n": 3}])");
  CHECK_THROWS_AS(parse_plan(bad_alg), PlanError);
}

TEST_CASE("illegal pairs are rejected before running") {
  BenchmarkCell ok;
  ok.algorithm = Algorithm::generic;
  ok.method = Method::centroid();
  ok.n = 20;
  BenchmarkCell bad = ok;
  bad.algorithm = Algorithm::nnchain;
  CHECK_THROWS_AS(run_benchmark({ok, bad}), PlanError);
  BenchmarkCell uniform_variant = ok;
  uniform_variant.algorithm = Algorithm::generic_variant;
  uniform_variant.generator = Generator::uniform;
  CHECK_THROWS_AS(run_benchmark({uniform_variant}), PlanError);
}

TEST_CASE("benchmark records and csv") {
  std::vector<BenchmarkCell> plan;
  for (Algorithm a : {Algorithm::generic, Algorithm::anderberg}) {
    for (index_t n : {40, 80, 160}) {
      BenchmarkCell c;
      c.algorithm = a;
      c.method = Method::centroid();
      c.n = n;
      c.repeats = 3;
      plan.push_back(c);
    }
  }
  BenchmarkCell single;
  single.algorithm = Algorithm::mst;
  single.generator = Generator::uniform;
  single.n = 300;
  single.repeats = 1;
  plan.push_back(single);
  BenchmarkCell variant;
  variant.algorithm = Algorithm::generic_variant;
  variant.method = Method::ward();
  variant.n = 50;
  plan.push_back(variant);

  const auto records = run_benchmark(plan);
  REQUIRE(records.size() == plan.size());
  for (const auto& r : records) {
    CHECK(r.seconds >= 0);
    REQUIRE(r.valid.has_value());  // n <= 200 always checked; the first large run too
    CHECK(*r.valid);
  }
  CHECK(records[6].algorithm == "mst");
  CHECK_FALSE(records[6].dim.has_value());
  CHECK(records[3].recalculations >= records[0].recalculations);

  std::ostringstream csv;
  write_benchmark_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "algorithm,method,n,dim,modes,seed,repeat,seconds,recalculations");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 3 * 6 + 1 + 3);
  CHECK(csv.str().find("mst,single,300,,,1,0,") != std::string::npos);
}
