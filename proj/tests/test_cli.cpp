#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "sahn/cli.hpp"

using namespace sahn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sahn_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("cluster on the tie fixture") {
  TempDir dir;
  const auto a = dir.file("A.txt", "3\n2 2 3\n");
  const auto r = run({"cluster", "--method", "single", "--input", a, "--labels", "scipy"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\t1\t2\n3\t2\t2\n");
  const auto rl = run({"cluster", "--method", "single", "--input", a, "--labels", "r"});
  CHECK(rl.out == "-1\t-2\t2\n1\t-3\t2\n");
  const auto ml = run({"cluster", "--method", "single", "--input", a, "--labels", "matlab"});
  CHECK(ml.out == "1\t2\t2\n4\t3\t2\n");
}

TEST_CASE("validate verdicts and exit codes") {
  TempDir dir;
  const auto c = dir.file("C.txt", "3\n3 2 2\n");
  const auto a = dir.file("A.txt", "3\n2 2 3\n");
  const auto z = dir.file("z.tsv", "0\t1\t2\n2\t3\t2\n");
  const auto bad = run({"validate", "--input", c, "--method", "single", "--dendrogram", z});
  CHECK(bad.code == 3);
  CHECK(bad.out.find("step 0") != std::string::npos);
  const auto good = run({"validate", "--input", a, "--method", "single", "--dendrogram", z});
  CHECK(good.code == 0);
  CHECK(good.out == "valid\n");
}

TEST_CASE("illegal pairs exit with 2") {
  TempDir dir;
  const auto a = dir.file("A.txt", "3\n2 2 3\n");
  const auto r = run({"cluster", "--method", "centroid", "--algorithm", "nnchain", "--input", a});
  CHECK(r.code == 2);
  CHECK(r.err.find("single, complete, average, weighted and ward") != std::string::npos);
  CHECK(run({"cluster", "--method", "average", "--algorithm", "mst", "--input", a}).code == 2);
  CHECK(run({"cluster", "--method", "ward", "--algorithm", "generic-variant", "--input", a}).code == 2);
  CHECK(run({"cluster", "--method", "bogus", "--input", a}).code == 2);
  CHECK(run({"cluster", "--method", "single"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("input errors exit with 1") {
  TempDir dir;
  const auto shortfile = dir.file("short.txt", "3\n3 4\n");
  const auto r = run({"cluster", "--method", "single", "--input", shortfile});
  CHECK(r.code == 1);
  CHECK(r.err.find("expected 3 values") != std::string::npos);
  CHECK(run({"cluster", "--method", "single", "--input", dir.path("missing.txt")}).code == 1);
  const auto neg = dir.file("neg.txt", "2\n-1\n");
  CHECK(run({"cluster", "--method", "single", "--input", neg}).code == 1);
}

TEST_CASE("every legal algorithm gives a valid answer") {
  TempDir dir;
  const auto m = dir.file("m.txt", "5\n3 4 6 15 5 7 12 1 13 14\n");
  const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"single", {"auto", "primitive", "generic", "nnchain", "mst", "anderberg"}},
      {"average", {"auto", "primitive", "generic", "nnchain", "anderberg"}},
      {"centroid", {"auto", "primitive", "generic", "anderberg"}},
      {"flexible:0.5,0.5,0,0", {"auto", "primitive", "generic", "anderberg"}},
  };
  for (const auto& [method, algs] : table) {
    for (const auto& alg : algs) {
      const auto out = dir.path("z_" + alg + ".tsv");
      REQUIRE(run({"cluster", "--method", method, "--algorithm", alg, "--input", m, "--output", out})
                  .code == 0);
      const auto v = run({"validate", "--input", m, "--method", method, "--dendrogram", out});
      CHECK_MESSAGE(v.code == 0, method << " " << alg << ": " << v.out);
    }
  }
}

TEST_CASE("vector input") {
  TempDir dir;
  const auto pts = dir.file("pts.csv", "x,y\n0,0\n1,0\n0,3\n5,5\n");
  for (const std::string alg : {"generic-variant", "generic", "auto"}) {
    const auto r = run({"cluster", "--method", "centroid", "--algorithm", alg, "--vectors", pts});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 6) == "0\t1\t1\n");
  }
  CHECK(run({"cluster", "--method", "ward", "--algorithm", "nnchain", "--vectors", pts}).code == 0);
  CHECK(run({"cluster", "--method", "single", "--algorithm", "mst", "--vectors", pts}).code == 0);
  CHECK(run({"cluster", "--method", "single", "--vectors", pts, "--input", pts}).code == 2);
}

TEST_CASE("bench subcommand") {
  TempDir dir;
  const auto plan = dir.file("plan.json",
                             R"([{"algorithm": "generic", "method": "centroid", "n": [20, 40], "repeats": 2}])");
  const auto r = run({"bench", "--plan", plan});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("algorithm,method,n,dim,modes,seed,repeat,seconds,recalculations\n", 0) == 0);
  const auto bad = dir.file("bad.json", R"([{"algorithm": "nnchain", "method": "median", "n": 20}])");
  CHECK(run({"bench", "--plan", bad}).code == 2);
  const auto broken = dir.file("broken.json", "[");
  CHECK(run({"bench", "--plan", broken}).code == 1);
}
