#include "sahn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "sahn/oracle.hpp"

namespace sahn {

namespace {

using json = nlohmann::json;

index_t resolved_modes(const BenchmarkCell& c) {
  return c.modes > 0 ? c.modes
                     : static_cast<index_t>(std::ceil(std::sqrt(static_cast<double>(c.n))));
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

template <class T>
T field(const json& cell, const char* key, T fallback) {
  if (!cell.contains(key)) return fallback;
  try {
    return cell.at(key).get<T>();
  } catch (const json::exception&) {
    throw PlanError(std::string("plan field '") + key + "' has the wrong type");
  }
}

void parse_cell(const json& cell, std::vector<BenchmarkCell>& out) {
  if (!cell.is_object()) throw PlanError("every plan cell must be an object");
  for (const char* key : {"algorithm", "method", "n"})
    if (!cell.contains(key)) throw PlanError(std::string("plan cell lacks '") + key + "'");
  BenchmarkCell base;
  try {
    base.algorithm = parse_algorithm(field<std::string>(cell, "algorithm", ""));
    base.method = Method::parse(field<std::string>(cell, "method", ""));
  } catch (const PlanError&) {
    throw;
  } catch (const Error& e) {
    throw PlanError(e.what());
  }
  const std::string gen = field<std::string>(cell, "generator", "gaussian");
  if (gen == "gaussian") {
    base.generator = Generator::gaussian;
  } else if (gen == "uniform") {
    base.generator = Generator::uniform;
  } else {
    throw PlanError("unknown generator '" + gen + "'");
  }
  base.dim = field<index_t>(cell, "dim", base.dim);
  if (cell.contains("modes") && cell.at("modes").is_string()) {
    if (cell.at("modes").get<std::string>() != "sqrt") throw PlanError("modes must be a number or \"sqrt\"");
    base.modes = 0;
  } else {
    base.modes = field<index_t>(cell, "modes", base.modes);
  }
  if (cell.contains("spread")) base.spread = field<double>(cell, "spread", 1.0);
  base.seed = field<std::uint64_t>(cell, "seed", base.seed);
  base.repeats = field<int>(cell, "repeats", base.repeats);
  if (base.repeats < 1) throw PlanError("repeats must be at least 1");
  if (base.dim < 1) throw PlanError("dim must be at least 1");
  if (base.modes < 0) throw PlanError("modes must be positive or \"sqrt\"");

  const json& n = cell.at("n");
  std::vector<index_t> sizes;
  if (n.is_array()) {
    for (const json& v : n) {
      if (!v.is_number_integer()) throw PlanError("n must hold integers");
      sizes.push_back(v.get<index_t>());
    }
  } else if (n.is_number_integer()) {
    sizes.push_back(n.get<index_t>());
  } else {
    throw PlanError("n must be an integer or an array of integers");
  }
  for (index_t s : sizes) {
    if (s < 1) throw PlanError("n must be at least 1");
    BenchmarkCell c = base;
    c.n = s;
    out.push_back(c);
  }
}

}  // namespace

VectorDataset gen_gaussian_mixture(index_t n, index_t dim, index_t modes, std::uint64_t seed,
                                   std::optional<double> spread) {
  if (n < 1 || dim < 1 || modes < 1) throw ArgumentError("n, dim and modes must be positive");
  const double s = spread.value_or(std::sqrt(static_cast<double>(modes)));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> centers(static_cast<std::size_t>(modes * dim));
  for (double& c : centers) c = s * normal(rng);
  std::uniform_int_distribution<index_t> pick(0, modes - 1);
  std::vector<double> coords(static_cast<std::size_t>(n * dim));
  for (index_t i = 0; i < n; ++i) {
    const index_t k = pick(rng);
    for (index_t j = 0; j < dim; ++j)
      coords[static_cast<std::size_t>(i * dim + j)] =
          centers[static_cast<std::size_t>(k * dim + j)] + normal(rng);
  }
  return VectorDataset(n, dim, std::move(coords));
}

CondensedMatrix gen_uniform_dissimilarities(index_t n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("need at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(condensed_size(n)));
  for (double& x : v) {
    do x = unit(rng);
    while (x == 0.0);
  }
  return CondensedMatrix(n, std::move(v));
}

std::vector<BenchmarkCell> parse_plan(std::istream& in) {
  json plan;
  try {
    plan = json::parse(in);
  } catch (const json::parse_error& e) {
    throw PlanError(std::string("plan is not valid JSON: ") + e.what());
  }
  const json* cells = &plan;
  if (plan.is_object()) {
    if (!plan.contains("cells")) throw PlanError("plan object lacks a \"cells\" array");
    cells = &plan.at("cells");
  }
  if (!cells->is_array()) throw PlanError("plan cells must be an array");
  std::vector<BenchmarkCell> out;
  for (const json& c : *cells) parse_cell(c, out);
  return out;
}

std::vector<BenchmarkCell> parse_plan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PlanError("cannot open plan " + path.string());
  return parse_plan(in);
}

std::vector<BenchmarkRecord> run_benchmark(const std::vector<BenchmarkCell>& plan) {
  for (const BenchmarkCell& c : plan) {
    if (c.algorithm == Algorithm::automatic) continue;
    if (auto why = illegal_pair(c.algorithm, c.method)) throw PlanError(*why);
    if (c.algorithm == Algorithm::generic_variant && c.generator != Generator::gaussian)
      throw PlanError("generic-variant needs gaussian (vector) data");
    if (c.repeats < 1) throw PlanError("repeats must be at least 1");
  }

  using clock = std::chrono::steady_clock;
  std::vector<BenchmarkRecord> records;
  std::uint64_t large_runs = 0;
  for (const BenchmarkCell& c : plan) {
    BenchmarkRecord rec;
    rec.algorithm = std::string(to_string(c.algorithm));
    rec.method = c.method.name();
    rec.n = c.n;
    rec.seed = c.seed;

    std::optional<VectorDataset> points;
    std::optional<CondensedMatrix> matrix;
    if (c.generator == Generator::gaussian) {
      rec.dim = c.dim;
      rec.modes = resolved_modes(c);
      points = gen_gaussian_mixture(c.n, c.dim, *rec.modes, c.seed, c.spread);
      matrix = pairwise_dissimilarity(*points, Metric::euclidean());
    } else {
      matrix = gen_uniform_dissimilarities(c.n, c.seed);
    }

    for (int r = 0; r < c.repeats; ++r) {
      LinkageStats stats;
      StepwiseDendrogram z;
      double seconds = 0.0;
      if (c.algorithm == Algorithm::generic_variant) {
        VariantOptions opts;
        opts.stats = &stats;
        const auto t0 = clock::now();
        z = generic_linkage_variant(*points, c.method, opts);
        seconds = std::chrono::duration<double>(clock::now() - t0).count();
      } else {
        CondensedMatrix work = *matrix;
        const auto t0 = clock::now();
        z = run_matrix_algorithm(c.algorithm, c.method, std::move(work), &stats);
        seconds = std::chrono::duration<double>(clock::now() - t0).count();
      }
      rec.repeat_seconds.push_back(seconds);
      rec.recalculations = stats.recalculations;

      const bool check = c.n <= 200 || large_runs++ % 10 == 0;
      if (check) {
        const bool ok = validate_dendrogram(*matrix, c.method, z).valid;
        rec.valid = rec.valid.value_or(true) && ok;
      }
    }
    rec.seconds = median(rec.repeat_seconds);
    records.push_back(std::move(rec));
  }
  return records;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records) {
  out << "algorithm,method,n,dim,modes,seed,repeat,seconds,recalculations\n";
  const auto old = out.precision(9);
  for (const BenchmarkRecord& r : records) {
    for (std::size_t k = 0; k < r.repeat_seconds.size(); ++k) {
      out << r.algorithm << ',' << csv_field(r.method) << ',' << r.n << ',';
      if (r.dim) out << *r.dim;
      out << ',';
      if (r.modes) out << *r.modes;
      out << ',' << r.seed << ',' << k << ',' << r.repeat_seconds[k] << ',' << r.recalculations
          << '\n';
    }
  }
  out.precision(old);
}

}  // namespace sahn
