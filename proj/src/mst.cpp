#include "sahn/mst.hpp"

#include "mst_impl.hpp"
#include "sahn/postprocess.hpp"
#include "update_rules.hpp"

namespace sahn {

UnsortedDendrogram mst_linkage_core(const CondensedMatrix& d, index_t start) {
  const index_t n = d.size();
  struct Lookup {
    std::span<const double> v;
    index_t n;
    double operator()(index_t i, index_t j) const { return v[detail::sym(i, j, n)]; }
    void prefetch(index_t i, index_t j) const { __builtin_prefetch(&v[detail::sym(i, j, n)]); }
  };
  return detail::mst_core(n, start, Lookup{d.values(), n});
}

StepwiseDendrogram mst_linkage(const CondensedMatrix& d, index_t start) {
  return label(stable_sort_by_delta(mst_linkage_core(d, start)));
}

}  // namespace sahn
