#include "sahn/postprocess.hpp"

#include <algorithm>
#include <sstream>

namespace sahn {

UnsortedDendrogram stable_sort_by_delta(UnsortedDendrogram u) {
  std::stable_sort(u.rows.begin(), u.rows.end(),
                   [](const MergeRow& x, const MergeRow& y) { return x.delta < y.delta; });
  return u;
}

UnionFind::UnionFind(index_t n)
    : parent_(static_cast<std::size_t>(n > 0 ? 2 * n - 1 : 0), -1), next_label_(n) {
  if (n < 1) throw ArgumentError("union-find needs at least one point");
}

void UnionFind::check(index_t x) const {
  if (x < 0 || x >= next_label_) {
    std::ostringstream msg;
    msg << "label " << x << " does not exist yet (next label is " << next_label_ << ")";
    throw ArgumentError(msg.str());
  }
}

index_t UnionFind::find(index_t x) {
  check(x);
  index_t root = x;
  while (parent_[static_cast<std::size_t>(root)] >= 0) root = parent_[static_cast<std::size_t>(root)];
  while (x != root) {
    const index_t up = parent_[static_cast<std::size_t>(x)];
    parent_[static_cast<std::size_t>(x)] = root;
    x = up;
  }
  return root;
}

index_t UnionFind::find_uncompressed(index_t x) const {
  check(x);
  while (parent_[static_cast<std::size_t>(x)] >= 0) x = parent_[static_cast<std::size_t>(x)];
  return x;
}

void UnionFind::unite(index_t m, index_t n) {
  check(m);
  check(n);
  if (next_label_ >= static_cast<index_t>(parent_.size()))
    throw ArgumentError("union-find is full");
  parent_[static_cast<std::size_t>(m)] = next_label_;
  parent_[static_cast<std::size_t>(n)] = next_label_;
  ++next_label_;
}

StepwiseDendrogram label(const UnsortedDendrogram& sorted) {
  const index_t n = sorted.n;
  if (static_cast<index_t>(sorted.rows.size()) != n - 1) {
    std::ostringstream msg;
    msg << "label() expects " << n - 1 << " rows, got " << sorted.rows.size();
    throw ArgumentError(msg.str());
  }
  StepwiseDendrogram out{n, {}, LabelConvention::scipy};
  out.rows.reserve(sorted.rows.size());
  UnionFind uf(n);
  for (const MergeRow& row : sorted.rows) {
    if (row.a < 0 || row.a >= n || row.b < 0 || row.b >= n) {
      std::ostringstream msg;
      msg << "representative out of range in row (" << row.a << ", " << row.b << ")";
      throw ArgumentError(msg.str());
    }
    const index_t a = uf.find(row.a);
    const index_t b = uf.find(row.b);
    if (a == b) throw ArgumentError("rows merge a cluster with itself");
    out.rows.push_back({a, b, row.delta});
    uf.unite(a, b);
  }
  return out;
}

}  // namespace sahn
