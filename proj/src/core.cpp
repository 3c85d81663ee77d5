#include "sahn/core.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace sahn {

index_t condensed_index(index_t i, index_t j, index_t n) {
  if (i < 0 || i >= j || j >= n) {
    std::ostringstream msg;
    msg << "condensed_index requires 0 <= i < j < n, got i=" << i << " j=" << j << " n=" << n;
    throw ArgumentError(msg.str());
  }
  return n * i - i * (i + 1) / 2 + (j - i - 1);
}

CondensedMatrix::CondensedMatrix(index_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1) throw ArgumentError("condensed matrix needs at least one point");
  if (static_cast<index_t>(values_.size()) != condensed_size(n)) {
    std::ostringstream msg;
    msg << "condensed matrix for n=" << n << " needs " << condensed_size(n) << " values, got "
        << values_.size();
    throw ArgumentError(msg.str());
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k]) || values_[k] < 0.0) {
      std::ostringstream msg;
      msg << "dissimilarity at offset " << k << " is not a finite nonnegative number";
      throw DataError(msg.str());
    }
  }
}

double CondensedMatrix::operator()(index_t i, index_t j) const {
  if (i > j) std::swap(i, j);
  return values_[static_cast<std::size_t>(condensed_index(i, j, n_))];
}

Method Method::named(MethodKind kind) {
  if (kind == MethodKind::flexible)
    throw ArgumentError("flexible method needs coefficients; use Method::flexible");
  return Method(kind);
}

Method Method::parse(std::string_view text) {
  constexpr std::string_view prefix = "flexible:";
  if (text.starts_with(prefix)) {
    std::array<double, 4> c{};
    std::string_view rest = text.substr(prefix.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto comma = rest.find(',');
      std::string_view token = rest.substr(0, comma);
      if (token.empty()) throw ArgumentError("flexible needs four comma-separated coefficients");
      std::string owned(token);
      std::size_t used = 0;
      try {
        c[k] = std::stod(owned, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != owned.size())
        throw ArgumentError("bad flexible coefficient '" + owned + "'");
      if (k + 1 < c.size()) {
        if (comma == std::string_view::npos)
          throw ArgumentError("flexible needs four comma-separated coefficients");
        rest = rest.substr(comma + 1);
      } else if (comma != std::string_view::npos) {
        throw ArgumentError("flexible needs exactly four coefficients");
      }
    }
    return flexible(c[0], c[1], c[2], c[3]);
  }
  for (MethodKind kind : named_methods()) {
    if (to_string(kind) == text) return Method(kind);
  }
  throw ArgumentError("unknown method '" + std::string(text) + "'");
}

bool Method::may_invert() const noexcept {
  return kind_ == MethodKind::centroid || kind_ == MethodKind::median ||
         kind_ == MethodKind::flexible;
}

bool Method::squared() const noexcept {
  return kind_ == MethodKind::ward || kind_ == MethodKind::centroid ||
         kind_ == MethodKind::median;
}

std::string Method::name() const {
  if (!coeffs_) return std::string(to_string(kind_));
  std::ostringstream out;
  out << "flexible:" << coeffs_->alpha_i << ',' << coeffs_->alpha_j << ',' << coeffs_->beta << ','
      << coeffs_->gamma;
  return out.str();
}

std::string_view to_string(MethodKind kind) {
  switch (kind) {
    case MethodKind::single: return "single";
    case MethodKind::complete: return "complete";
    case MethodKind::average: return "average";
    case MethodKind::weighted: return "weighted";
    case MethodKind::ward: return "ward";
    case MethodKind::centroid: return "centroid";
    case MethodKind::median: return "median";
    case MethodKind::flexible: return "flexible";
  }
  return "?";
}

std::span<const MethodKind> named_methods() {
  static constexpr std::array kinds{MethodKind::single,   MethodKind::complete, MethodKind::average,
                                    MethodKind::weighted, MethodKind::ward,     MethodKind::centroid,
                                    MethodKind::median};
  return kinds;
}

std::string_view to_string(LabelConvention c) {
  switch (c) {
    case LabelConvention::scipy: return "scipy";
    case LabelConvention::r: return "r";
    case LabelConvention::matlab: return "matlab";
  }
  return "?";
}

LabelConvention parse_convention(std::string_view text) {
  if (text == "scipy") return LabelConvention::scipy;
  if (text == "r") return LabelConvention::r;
  if (text == "matlab") return LabelConvention::matlab;
  throw ArgumentError("unknown label convention '" + std::string(text) + "'");
}

namespace {

// Labels that are not valid under the source convention map to -1, which the
// structural check rejects.
index_t to_scipy(index_t label, index_t n, LabelConvention from) {
  switch (from) {
    case LabelConvention::scipy: return label;
    case LabelConvention::r:
      if (label < 0) return -label - 1 < n ? -label - 1 : -1;
      if (label == 0) return -1;
      return n + label - 1;
    case LabelConvention::matlab: return label >= 1 ? label - 1 : -1;
  }
  return -1;
}

index_t from_scipy(index_t label, index_t n, LabelConvention to) {
  switch (to) {
    case LabelConvention::scipy: return label;
    case LabelConvention::r: return label < n ? -(label + 1) : label - n + 1;
    case LabelConvention::matlab: return label + 1;
  }
  return label;
}

}  // namespace

StepwiseDendrogram convert_convention(const StepwiseDendrogram& d, LabelConvention target) {
  StepwiseDendrogram out{d.n, {}, target};
  out.rows.reserve(d.rows.size());
  for (const MergeRow& row : d.rows) {
    index_t a = to_scipy(row.a, d.n, d.convention);
    index_t b = to_scipy(row.b, d.n, d.convention);
    out.rows.push_back({from_scipy(a, d.n, target), from_scipy(b, d.n, target), row.delta});
  }
  return out;
}

std::optional<std::string> structural_error(const StepwiseDendrogram& d) {
  if (d.n < 1) return "dendrogram needs at least one point";
  if (static_cast<index_t>(d.rows.size()) != d.n - 1) {
    std::ostringstream msg;
    msg << "expected " << d.n - 1 << " rows, found " << d.rows.size();
    return msg.str();
  }
  std::vector<bool> merged(static_cast<std::size_t>(2 * d.n - 1), false);
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    const MergeRow& row = d.rows[i];
    const index_t limit = d.n + static_cast<index_t>(i);
    for (index_t raw : {row.a, row.b}) {
      index_t label = to_scipy(raw, d.n, d.convention);
      if (label < 0 || label >= limit) {
        std::ostringstream msg;
        msg << "row " << i << ": label " << raw << " is not an existing node";
        return msg.str();
      }
      if (merged[static_cast<std::size_t>(label)]) {
        std::ostringstream msg;
        msg << "row " << i << ": label " << raw << " was already merged";
        return msg.str();
      }
    }
    if (row.a == row.b) {
      std::ostringstream msg;
      msg << "row " << i << ": node " << row.a << " merged with itself";
      return msg.str();
    }
    if (!std::isfinite(row.delta)) {
      std::ostringstream msg;
      msg << "row " << i << ": delta is not a finite number";
      return msg.str();
    }
    merged[static_cast<std::size_t>(to_scipy(row.a, d.n, d.convention))] = true;
    merged[static_cast<std::size_t>(to_scipy(row.b, d.n, d.convention))] = true;
  }
  return std::nullopt;
}

}  // namespace sahn
