#pragma once

#include <filesystem>
#include <iosfwd>

#include "sahn/core.hpp"
#include "sahn/vector.hpp"

namespace sahn {

/// Whitespace-separated text: the point count N, then N(N-1)/2 values in
/// condensed row-major order. Lines starting with '#' are comments.
/// ParseError for malformed tokens or a wrong count; DataError, naming the
/// 1-based token position, for negative or non-finite values.
CondensedMatrix parse_matrix(std::istream& in);
CondensedMatrix parse_matrix_file(const std::filesystem::path& path);

/// One point per line, comma-separated, all lines of equal arity. A first
/// line whose first field is not a number is a header and skipped. Blank
/// lines are ignored. ParseError with the line number on ragged rows.
VectorDataset parse_vectors_csv(std::istream& in);
VectorDataset parse_vectors_csv_file(const std::filesystem::path& path);

/// TSV rows "a<TAB>b<TAB>delta" with 17 significant digits.
void write_dendrogram(std::ostream& out, const StepwiseDendrogram& d);

/// Reads the TSV format written by write_dendrogram. Labels are taken as
/// given; n is inferred as rows + 1.
StepwiseDendrogram parse_dendrogram(std::istream& in, LabelConvention convention);
StepwiseDendrogram parse_dendrogram_file(const std::filesystem::path& path,
                                         LabelConvention convention);

}  // namespace sahn
