#include "sahn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "update_rules.hpp"

namespace sahn {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bool close(double x, double y, double tol, double scale) {
  if (x == y) return true;
  return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), scale});
}

// Replays Lance-Williams merges on a working-domain copy of the matrix.
// Slots are original point indices; a merged cluster lives in the slot of
// its second argument. Dead slots have their entries set to +inf, and each
// row caches its minimum over higher slots so the global minimum is O(n).
class Replay {
 public:
  Replay(const CondensedMatrix& d0, const Method& m)
      : n_(d0.size()),
        m_(m),
        d_(detail::to_working(std::vector<double>(d0.values().begin(), d0.values().end()), m)),
        size_(static_cast<std::size_t>(n_), 1),
        slot_of_(static_cast<std::size_t>(2 * n_ - 1), -1),
        label_of_(static_cast<std::size_t>(n_)) {
    for (index_t i = 0; i < n_; ++i) {
      slot_of_[static_cast<std::size_t>(i)] = i;
      label_of_[static_cast<std::size_t>(i)] = i;
    }
    for (double v : d_) scale_ = std::max(scale_, std::abs(v));
    row_min_.assign(static_cast<std::size_t>(n_), inf);
    row_arg_.assign(static_cast<std::size_t>(n_), -1);
    for (index_t s = 0; s < n_; ++s) rescan(s);
  }

  index_t n() const { return n_; }
  index_t step() const { return step_; }
  double scale() const { return scale_; }
  double at(index_t s, index_t t) const { return d_[detail::sym(s, t, n_)]; }
  index_t slot(index_t label) const {
    if (label < 0 || label >= n_ + step_) return -1;
    return slot_of_[static_cast<std::size_t>(label)];
  }
  index_t label(index_t slot) const { return label_of_[static_cast<std::size_t>(slot)]; }
  bool live(index_t slot) const { return size_[static_cast<std::size_t>(slot)] > 0; }

  double global_min() const {
    double best = inf;
    for (double v : row_min_) best = std::min(best, v);
    return best;
  }

  // Live slot pairs (s < t) whose value is within tolerance of the minimum.
  std::vector<std::pair<index_t, index_t>> minimal_pairs(double tol) const {
    const double lo = global_min();
    std::vector<std::pair<index_t, index_t>> out;
    for (index_t s = 0; s < n_; ++s) {
      if (!live(s)) continue;
      for (index_t t = s + 1; t < n_; ++t) {
        if (live(t) && close(d_[detail::tri(s, t, n_)], lo, tol, scale_)) out.emplace_back(s, t);
      }
    }
    return out;
  }

  // Merges slot a (as I) and slot b (as J) into slot b.
  void merge(index_t a, index_t b) {
    const double ab = at(a, b);
    const double na = static_cast<double>(size_[static_cast<std::size_t>(a)]);
    const double nb = static_cast<double>(size_[static_cast<std::size_t>(b)]);
    detail::with_update_rule(m_, [&](auto rule) {
      for (index_t x = 0; x < n_; ++x) {
        if (x == a || x == b || !live(x)) continue;
        const double nx = static_cast<double>(size_[static_cast<std::size_t>(x)]);
        d_[detail::sym(b, x, n_)] = rule(at(a, x), at(b, x), ab, na, nb, nx);
      }
    });
    for (index_t x = 0; x < n_; ++x) {
      if (x != a) d_[detail::sym(a, x, n_)] = inf;
    }
    row_min_[static_cast<std::size_t>(a)] = inf;
    row_arg_[static_cast<std::size_t>(a)] = -1;
    for (index_t x = 0; x < n_; ++x) {
      if (x == a || !live(x)) continue;
      const auto ux = static_cast<std::size_t>(x);
      if (x == b || row_arg_[ux] == a || row_arg_[ux] == b) {
        rescan(x);
      } else if (x < b && d_[detail::tri(x, b, n_)] < row_min_[ux]) {
        row_min_[ux] = d_[detail::tri(x, b, n_)];
        row_arg_[ux] = b;
      }
    }
    slot_of_[static_cast<std::size_t>(label(a))] = -1;
    slot_of_[static_cast<std::size_t>(label(b))] = -1;
    size_[static_cast<std::size_t>(b)] += size_[static_cast<std::size_t>(a)];
    size_[static_cast<std::size_t>(a)] = 0;
    const index_t fresh = n_ + step_;
    slot_of_[static_cast<std::size_t>(fresh)] = b;
    label_of_[static_cast<std::size_t>(b)] = fresh;
    ++step_;
  }

 private:
  void rescan(index_t s) {
    double best = inf;
    index_t arg = -1;
    for (index_t t = s + 1; t < n_; ++t) {
      const double v = d_[detail::tri(s, t, n_)];
      if (v < best) {
        best = v;
        arg = t;
      }
    }
    row_min_[static_cast<std::size_t>(s)] = best;
    row_arg_[static_cast<std::size_t>(s)] = arg;
  }

  index_t n_;
  Method m_;
  std::vector<double> d_;
  std::vector<index_t> size_;     // 0 for a dead slot
  std::vector<index_t> slot_of_;  // label -> slot, -1 once merged
  std::vector<index_t> label_of_;
  std::vector<double> row_min_;
  std::vector<index_t> row_arg_;
  index_t step_ = 0;
  double scale_ = 0.0;
};

std::string step_message(index_t step, const std::string& what) {
  std::ostringstream msg;
  msg << "step " << step << ": " << what;
  return msg.str();
}

void enumerate(const Replay& state, double tol, std::vector<MergeRow>& path,
               std::vector<StepwiseDendrogram>& out) {
  if (state.step() == state.n() - 1) {
    out.push_back({state.n(), path, LabelConvention::scipy});
    return;
  }
  for (auto [s, t] : state.minimal_pairs(tol)) {
    index_t la = state.label(s), lb = state.label(t);
    const double delta = state.at(s, t);  // working domain until the end
    Replay next = state;
    // Replay with I = smaller label, J = larger label, matching the row.
    if (la < lb) {
      next.merge(s, t);
    } else {
      next.merge(t, s);
      std::swap(la, lb);
    }
    path.push_back({la, lb, delta});
    enumerate(next, tol, path, out);
    path.pop_back();
  }
}

}  // namespace

std::string_view to_string(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::none: return "none";
    case ValidationFailure::structure: return "structure";
    case ValidationFailure::not_live: return "not_live";
    case ValidationFailure::not_minimal: return "not_minimal";
    case ValidationFailure::delta_mismatch: return "delta_mismatch";
  }
  return "unknown";
}

StepwiseDendrogram primitive_clustering(const CondensedMatrix& d0, const Method& m,
                                        TieBreak tie_break) {
  const index_t n = d0.size();
  if (n < 1) throw ArgumentError("need at least one point");
  Replay state(d0, m);
  std::mt19937_64 rng(tie_break.seed);
  StepwiseDendrogram out{n, {}, LabelConvention::scipy};
  out.rows.reserve(static_cast<std::size_t>(n - 1));
  for (index_t step = 0; step < n - 1; ++step) {
    // Exact ties only: the primitive algorithm is the ground truth.
    auto ties = state.minimal_pairs(0.0);
    auto key = [&](std::pair<index_t, index_t> p) {
      const index_t x = state.label(p.first), y = state.label(p.second);
      return std::pair{std::min(x, y), std::max(x, y)};
    };
    std::sort(ties.begin(), ties.end(), [&](auto p, auto q) { return key(p) < key(q); });
    std::size_t pick = 0;
    switch (tie_break.kind) {
      case TieBreak::Kind::lexicographic: pick = 0; break;
      case TieBreak::Kind::reverse_lexicographic: pick = ties.size() - 1; break;
      case TieBreak::Kind::random:
        pick = std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng);
        break;
    }
    auto [s, t] = ties[pick];
    if (state.label(s) > state.label(t)) std::swap(s, t);
    const double delta = detail::from_working(state.at(s, t), m);
    const auto [la, lb] = key(ties[pick]);
    state.merge(s, t);
    out.rows.push_back({la, lb, delta});
  }
  return out;
}

ValidationResult validate_dendrogram(const CondensedMatrix& d0, const Method& m,
                                     const StepwiseDendrogram& cand, double tol) {
  if (cand.n != d0.size()) {
    std::ostringstream msg;
    msg << "dendrogram has n = " << cand.n << " but the matrix has " << d0.size() << " points";
    return {false, 0, ValidationFailure::structure, msg.str()};
  }
  if (auto err = structural_error(cand)) {
    return {false, 0, ValidationFailure::structure, *err};
  }
  const StepwiseDendrogram z = convert_convention(cand, LabelConvention::scipy);
  Replay state(d0, m);
  for (index_t step = 0; step < z.n - 1; ++step) {
    const MergeRow& row = z.rows[static_cast<std::size_t>(step)];
    const index_t s = state.slot(row.a), t = state.slot(row.b);
    if (s < 0 || t < 0 || s == t) {
      std::ostringstream msg;
      msg << "pair (" << row.a << ", " << row.b << ") is not two live clusters";
      return {false, step, ValidationFailure::not_live, step_message(step, msg.str())};
    }
    const double dab = state.at(s, t);
    const double lo = state.global_min();
    if (dab > lo && !close(dab, lo, tol, state.scale())) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "pair (" << row.a << ", " << row.b << ") is at " << detail::from_working(dab, m)
          << " but the minimum is " << detail::from_working(lo, m);
      return {false, step, ValidationFailure::not_minimal, step_message(step, msg.str())};
    }
    const double claimed = detail::to_working(row.delta, m);
    if (!close(claimed, dab, tol, state.scale())) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "recorded delta " << row.delta << " differs from the replayed "
          << detail::from_working(dab, m);
      return {false, step, ValidationFailure::delta_mismatch, step_message(step, msg.str())};
    }
    state.merge(s, t);
  }
  return {};
}

std::vector<StepwiseDendrogram> enumerate_valid_dendrograms(const CondensedMatrix& d0,
                                                            const Method& m, double tol) {
  if (d0.size() > 8) throw SizeError("enumeration is limited to n <= 8");
  if (d0.size() < 1) throw ArgumentError("need at least one point");
  Replay state(d0, m);
  std::vector<StepwiseDendrogram> out;
  std::vector<MergeRow> path;
  enumerate(state, tol, path, out);
  for (auto& z : out)
    for (auto& r : z.rows) r.delta = detail::from_working(r.delta, m);
  std::set<std::vector<std::pair<index_t, index_t>>> seen;
  std::vector<StepwiseDendrogram> unique;
  for (auto& z : out) {
    std::vector<std::pair<index_t, index_t>> key;
    for (const auto& r : z.rows) key.emplace_back(r.a, r.b);
    if (seen.insert(key).second) unique.push_back(std::move(z));
  }
  return unique;
}

bool same_merges(const StepwiseDendrogram& x, const StepwiseDendrogram& y, double tol) {
  const auto zx = convert_convention(x, LabelConvention::scipy);
  const auto zy = convert_convention(y, LabelConvention::scipy);
  if (zx.n != zy.n || zx.rows.size() != zy.rows.size()) return false;
  double scale = 0.0;
  for (const auto& r : zx.rows) scale = std::max(scale, std::abs(r.delta));
  for (std::size_t i = 0; i < zx.rows.size(); ++i) {
    const MergeRow& p = zx.rows[i];
    const MergeRow& q = zy.rows[i];
    if (std::minmax(p.a, p.b) != std::minmax(q.a, q.b)) return false;
    if (!close(p.delta, q.delta, tol, scale)) return false;
  }
  return true;
}

bool contains_dendrogram(std::span<const StepwiseDendrogram> set, const StepwiseDendrogram& cand,
                         double tol) {
  return std::any_of(set.begin(), set.end(),
                     [&](const StepwiseDendrogram& z) { return same_merges(z, cand, tol); });
}

}  // namespace sahn
