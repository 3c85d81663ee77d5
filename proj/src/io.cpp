#include "sahn/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace sahn {

namespace {

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Whole-token conversions; false on trailing garbage.
bool to_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

bool to_index(std::string_view s, index_t& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

CondensedMatrix parse_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (!t.empty() && t.front() == '#') continue;
    std::istringstream words{std::string(t)};
    for (std::string w; words >> w;) tokens.push_back(std::move(w));
  }
  if (tokens.empty()) throw ParseError("empty matrix file: expected the point count");
  index_t n = 0;
  if (!to_index(tokens[0], n) || n < 1)
    throw ParseError("token 1: expected a positive point count, found '" + tokens[0] + "'");
  const index_t expected = condensed_size(n);
  const index_t found = static_cast<index_t>(tokens.size()) - 1;
  if (found != expected) {
    std::ostringstream msg;
    msg << "expected " << expected << " values for " << n << " points, found " << found;
    throw ParseError(msg.str());
  }
  std::vector<double> values(static_cast<std::size_t>(expected));
  for (index_t k = 0; k < expected; ++k) {
    const std::string& tok = tokens[static_cast<std::size_t>(k + 1)];
    double v = 0.0;
    if (!to_double(tok, v)) {
      std::ostringstream msg;
      msg << "token " << k + 2 << ": '" << tok << "' is not a number";
      throw ParseError(msg.str());
    }
    if (!std::isfinite(v) || v < 0) {
      std::ostringstream msg;
      msg << "token " << k + 2 << ": dissimilarity " << tok << " is not a finite value >= 0";
      throw DataError(msg.str());
    }
    values[static_cast<std::size_t>(k)] = v;
  }
  return CondensedMatrix(n, std::move(values));
}

CondensedMatrix parse_matrix_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_matrix(in);
}

VectorDataset parse_vectors_csv(std::istream& in) {
  std::vector<double> coords;
  index_t dim = 0, n = 0, lineno = 0;
  bool first = true;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
      const std::size_t comma = t.find(',', pos);
      fields.push_back(trim(t.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    double v = 0.0;
    if (first) {
      first = false;
      dim = static_cast<index_t>(fields.size());
      if (!to_double(fields[0], v)) continue;  // header
    }
    if (static_cast<index_t>(fields.size()) != dim) {
      std::ostringstream msg;
      msg << "line " << lineno << ": expected " << dim << " fields, found " << fields.size();
      throw ParseError(msg.str());
    }
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (!to_double(fields[k], v)) {
        std::ostringstream msg;
        msg << "line " << lineno << ": field " << k + 1 << " '" << fields[k]
            << "' is not a number";
        throw ParseError(msg.str());
      }
      coords.push_back(v);
    }
    ++n;
  }
  if (n == 0) throw ParseError("no data rows in vector file");
  return VectorDataset(n, dim, std::move(coords));
}

VectorDataset parse_vectors_csv_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_vectors_csv(in);
}

void write_dendrogram(std::ostream& out, const StepwiseDendrogram& d) {
  const auto old = out.precision(17);
  for (const MergeRow& r : d.rows) out << r.a << '\t' << r.b << '\t' << r.delta << '\n';
  out.precision(old);
}

StepwiseDendrogram parse_dendrogram(std::istream& in, LabelConvention convention) {
  StepwiseDendrogram d{0, {}, convention};
  std::string line;
  index_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream words{std::string(t)};
    std::string a, b, delta, extra;
    words >> a >> b >> delta;
    MergeRow row;
    if (delta.empty() || (words >> extra) || !to_index(a, row.a) || !to_index(b, row.b) ||
        !to_double(delta, row.delta)) {
      std::ostringstream msg;
      msg << "line " << lineno << ": expected 'a<TAB>b<TAB>delta'";
      throw ParseError(msg.str());
    }
    d.rows.push_back(row);
  }
  d.n = static_cast<index_t>(d.rows.size()) + 1;
  return d;
}

StepwiseDendrogram parse_dendrogram_file(const std::filesystem::path& path,
                                         LabelConvention convention) {
  auto in = open(path);
  return parse_dendrogram(in, convention);
}

}  // namespace sahn
