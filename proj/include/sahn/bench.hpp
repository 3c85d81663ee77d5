#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sahn/core.hpp"
#include "sahn/dispatch.hpp"
#include "sahn/vector.hpp"

namespace sahn {

/// Mixture of `modes` unit-covariance Gaussians in dim dimensions. Mode
/// centers are Gaussian with per-coordinate standard deviation `spread`
/// (default sqrt(modes)); each point picks its mode uniformly. Deterministic
/// for a fixed seed.
VectorDataset gen_gaussian_mixture(index_t n, index_t dim, index_t modes, std::uint64_t seed,
                                   std::optional<double> spread = std::nullopt);

/// Independent uniform(0,1) dissimilarities, never exactly 0.
CondensedMatrix gen_uniform_dissimilarities(index_t n, std::uint64_t seed);

enum class Generator { gaussian, uniform };

struct BenchmarkCell {
  Algorithm algorithm = Algorithm::generic;
  Method method = Method::single();
  index_t n = 100;
  Generator generator = Generator::gaussian;
  index_t dim = 3;
  /// Number of mixture modes; 0 selects ceil(sqrt(n)).
  index_t modes = 5;
  std::optional<double> spread;
  std::uint64_t seed = 1;
  int repeats = 3;
};

struct BenchmarkRecord {
  std::string algorithm;
  std::string method;
  index_t n = 0;
  std::optional<index_t> dim;    // gaussian data only
  std::optional<index_t> modes;  // gaussian data only
  std::uint64_t seed = 0;
  double seconds = 0.0;  // median over repeats
  std::vector<double> repeat_seconds;
  std::uint64_t recalculations = 0;
  std::optional<std::uint64_t> peak_bytes;
  /// Spot check of the output against the matrix; unset when not sampled.
  std::optional<bool> valid;
};

/// Reads a JSON plan: an array of cells, or an object with a "cells" array.
/// Each cell has "algorithm", "method", "n" (number or array, expanded),
/// and optionally "generator" ("gaussian" | "uniform"), "dim", "modes"
/// (number or "sqrt"), "spread", "seed", "repeats". Throws PlanError.
std::vector<BenchmarkCell> parse_plan(std::istream& in);
std::vector<BenchmarkCell> parse_plan_file(const std::filesystem::path& path);

/// Runs the cells one after another. Every pair is checked before anything
/// runs (PlanError). Timing covers the clustering call only. Outputs of runs
/// with n <= 200 are all validated, larger ones one in ten.
std::vector<BenchmarkRecord> run_benchmark(const std::vector<BenchmarkCell>& plan);

/// CSV with header algorithm,method,n,dim,modes,seed,repeat,seconds,recalculations
/// and one row per repeat.
void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records);

}  // namespace sahn
