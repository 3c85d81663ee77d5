#include <doctest.h>

#include <sstream>

#include "sahn/io.hpp"

using namespace sahn;

namespace {

CondensedMatrix matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

VectorDataset vectors(const std::string& text) {
  std::istringstream in(text);
  return parse_vectors_csv(in);
}

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("matrix files") {
  CHECK(matrix("3\n3 4 5") == CondensedMatrix(3, {3, 4, 5}));
  CHECK(matrix("2\n5") == CondensedMatrix(2, {5}));
  CHECK(matrix("# header\n3\n# middle\n3 4\n5\n") == CondensedMatrix(3, {3, 4, 5}));
  CHECK(matrix("1\n") == CondensedMatrix(1, {}));
  CHECK_THROWS_AS(matrix("3\n3 4"), ParseError);
  CHECK(error_of([] { matrix("3\n3 4"); }).find("expected 3 values for 3 points, found 2") !=
        std::string::npos);
  CHECK_THROWS_AS(matrix("3\n3 4 5 6"), ParseError);
  CHECK_THROWS_AS(matrix(""), ParseError);
  CHECK_THROWS_AS(matrix("x\n1"), ParseError);
  CHECK_THROWS_AS(matrix("3\n3 four 5"), ParseError);
  CHECK_THROWS_AS(matrix("3\n3 -4 5"), DataError);
  CHECK(error_of([] { matrix("3\n3 -4 5"); }).find("token 3") != std::string::npos);
  CHECK_THROWS_AS(matrix("3\n3 4 nan"), DataError);
  CHECK(error_of([] { matrix("3\n3 4 nan"); }).find("token 4") != std::string::npos);
}

TEST_CASE("vector files") {
  const auto a = vectors("0\n1\n3");
  CHECK(a.size() == 3);
  CHECK(a.dim() == 1);
  const auto b = vectors("x,y\n0,0\n1,0\n");
  CHECK(b.size() == 2);
  CHECK(b.dim() == 2);
  CHECK(b.point(1)[0] == 1);
  CHECK(vectors("1.5, 2\n\n3,4\n").size() == 2);
  CHECK_THROWS_AS(vectors("0,0\n1"), ParseError);
  CHECK(error_of([] { vectors("0,0\n1"); }).find("line 2") != std::string::npos);
  CHECK(error_of([] { vectors("a,b\n0,0\n1,2,3"); }).find("line 3") != std::string::npos);
  CHECK_THROWS_AS(vectors("0,0\n1,z"), ParseError);
  CHECK_THROWS_AS(vectors("x,y\n"), ParseError);
}

TEST_CASE("dendrogram round trip at full precision") {
  const StepwiseDendrogram z{3, {{0, 1, 0.1}, {3, 2, 1.0 / 3.0}}, LabelConvention::scipy};
  std::ostringstream out;
  write_dendrogram(out, z);
  CHECK(out.str().substr(0, 6) == "0\t1\t0.");
  std::istringstream in(out.str());
  CHECK(parse_dendrogram(in, LabelConvention::scipy) == z);
  std::istringstream bad("0\t1\n");
  CHECK_THROWS_AS(parse_dendrogram(bad, LabelConvention::scipy), ParseError);
}
