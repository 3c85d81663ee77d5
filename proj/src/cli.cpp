#include "sahn/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "sahn/bench.hpp"
#include "sahn/dispatch.hpp"
#include "sahn/io.hpp"
#include "sahn/nn_chain.hpp"
#include "sahn/oracle.hpp"
#include "sahn/vector.hpp"

namespace sahn {

namespace {

struct ClusterArgs {
  std::string method;
  std::string algorithm = "auto";
  std::string input;
  std::string vectors;
  std::string labels = "scipy";
  std::string output = "-";
};

struct ValidateArgs {
  std::string input;
  std::string method;
  std::string dendrogram;
  std::string labels = "scipy";
  double tolerance = default_tolerance;
};

struct BenchArgs {
  std::string plan;
  std::string out = "-";
};

// Writes to the named file, or to the fallback stream for "-".
template <class F>
void with_output(const std::string& path, std::ostream& fallback, F&& write) {
  if (path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot open " + path + " for writing");
  write(file);
  if (!file) throw ParseError("failed writing " + path);
}

StepwiseDendrogram cluster_vectors(Algorithm a, const Method& m, const VectorDataset& ds) {
  switch (a) {
    case Algorithm::generic_variant: return generic_linkage_variant(ds, m);
    case Algorithm::mst: return mst_linkage_vectors(ds, Metric::euclidean());
    case Algorithm::nnchain:
      if (m.kind() == MethodKind::ward) return nn_chain_linkage_vectors(ds, m);
      break;
    default: break;
  }
  return run_matrix_algorithm(a, m, pairwise_dissimilarity(ds, Metric::euclidean()));
}

int cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err) {
  const Method m = Method::parse(args.method);
  Algorithm a = parse_algorithm(args.algorithm);
  const LabelConvention conv = parse_convention(args.labels);
  if (a == Algorithm::automatic) a = recommended_algorithm(m);
  if (auto why = illegal_pair(a, m)) {
    err << "error: " << to_string(a) << " cannot run " << m.name() << ": " << *why << '\n';
    return exit_illegal_pair;
  }
  if (args.input.empty() == args.vectors.empty()) {
    err << "error: give exactly one of --input and --vectors\n";
    return exit_illegal_pair;
  }
  if (a == Algorithm::generic_variant && args.vectors.empty()) {
    err << "error: generic-variant clusters points; use --vectors\n";
    return exit_illegal_pair;
  }
  const StepwiseDendrogram z =
      args.vectors.empty()
          ? run_matrix_algorithm(a, m, parse_matrix_file(args.input))
          : cluster_vectors(a, m, parse_vectors_csv_file(args.vectors));
  with_output(args.output, out,
              [&](std::ostream& os) { write_dendrogram(os, convert_convention(z, conv)); });
  return exit_ok;
}

int validate(const ValidateArgs& args, std::ostream& out) {
  const Method m = Method::parse(args.method);
  const CondensedMatrix d = parse_matrix_file(args.input);
  const StepwiseDendrogram z =
      parse_dendrogram_file(args.dendrogram, parse_convention(args.labels));
  const ValidationResult r = validate_dendrogram(d, m, z, args.tolerance);
  if (r.valid) {
    out << "valid\n";
    return exit_ok;
  }
  out << "invalid at step " << r.step << " (" << to_string(r.reason) << "): " << r.message
      << '\n';
  return exit_invalid;
}

int bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const std::vector<BenchmarkCell> plan = parse_plan_file(args.plan);
  for (const BenchmarkCell& c : plan) {
    if (auto why = illegal_pair(c.algorithm, c.method)) {
      err << "error: plan pairs " << to_string(c.algorithm) << " with " << c.method.name()
          << ": " << *why << '\n';
      return exit_illegal_pair;
    }
  }
  const std::vector<BenchmarkRecord> records = run_benchmark(plan);
  with_output(args.out, out, [&](std::ostream& os) { write_benchmark_csv(os, records); });
  int code = exit_ok;
  for (const BenchmarkRecord& r : records) {
    if (r.valid == false) {
      err << "error: spot validation failed for " << r.algorithm << ' ' << r.method
          << " n=" << r.n << " seed=" << r.seed << '\n';
      code = exit_invalid;
    }
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical clustering with the SAHN linkage methods"};
  app.require_subcommand(1);

  ClusterArgs ca;
  CLI::App* cl = app.add_subcommand("cluster", "Cluster a dissimilarity matrix or points");
  cl->add_option("--method", ca.method,
                 "single|complete|average|weighted|ward|centroid|median|flexible:aI,aJ,b,g")
      ->required();
  cl->add_option("--algorithm", ca.algorithm,
                 "auto|primitive|generic|nnchain|mst|anderberg|generic-variant")
      ->capture_default_str();
  cl->add_option("--input", ca.input, "Condensed matrix file");
  cl->add_option("--vectors", ca.vectors, "CSV file with one point per line");
  cl->add_option("--labels", ca.labels, "scipy|r|matlab")->capture_default_str();
  cl->add_option("--output", ca.output, "Output file, - for stdout")->capture_default_str();

  ValidateArgs va;
  CLI::App* vl = app.add_subcommand("validate", "Check a dendrogram against a matrix");
  vl->add_option("--input", va.input, "Condensed matrix file")->required();
  vl->add_option("--method", va.method, "Linkage method")->required();
  vl->add_option("--dendrogram", va.dendrogram, "TSV rows a, b, delta")->required();
  vl->add_option("--labels", va.labels, "Label convention of the dendrogram")
      ->capture_default_str();
  vl->add_option("--tolerance", va.tolerance, "Relative tolerance, 0 for exact")
      ->capture_default_str();

  BenchArgs ba;
  CLI::App* bl = app.add_subcommand("bench", "Run a JSON benchmark plan");
  bl->add_option("--plan", ba.plan, "Plan file")->required();
  bl->add_option("--out", ba.out, "CSV output, - for stdout")->capture_default_str();

  std::vector<const char*> argv{"sahn"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_illegal_pair;
  }

  try {
    if (*cl) return cluster(ca, out, err);
    if (*vl) return validate(va, out);
    return bench(ba, out, err);
  } catch (const MethodError& e) {
    err << "error: " << e.what() << '\n';
    return exit_illegal_pair;
  } catch (const ArgumentError& e) {
    // Unknown method, algorithm or label names.
    err << "error: " << e.what() << '\n';
    return exit_illegal_pair;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace sahn
