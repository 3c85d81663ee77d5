#include "sahn/dispatch.hpp"

#include "sahn/anderberg.hpp"
#include "sahn/generic.hpp"
#include "sahn/mst.hpp"
#include "sahn/nn_chain.hpp"
#include "sahn/oracle.hpp"

namespace sahn {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::primitive: return "primitive";
    case Algorithm::generic: return "generic";
    case Algorithm::nnchain: return "nnchain";
    case Algorithm::mst: return "mst";
    case Algorithm::anderberg: return "anderberg";
    case Algorithm::generic_variant: return "generic-variant";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::automatic, Algorithm::primitive, Algorithm::generic,
                      Algorithm::nnchain, Algorithm::mst, Algorithm::anderberg,
                      Algorithm::generic_variant}) {
    if (text == to_string(a)) return a;
  }
  throw ArgumentError("unknown algorithm '" + std::string(text) + "'");
}

Algorithm recommended_algorithm(const Method& m) {
  switch (m.kind()) {
    case MethodKind::single: return Algorithm::mst;
    case MethodKind::complete:
    case MethodKind::average:
    case MethodKind::weighted:
    case MethodKind::ward: return Algorithm::nnchain;
    default: return Algorithm::generic;
  }
}

std::optional<std::string> illegal_pair(Algorithm a, const Method& m) {
  switch (a) {
    case Algorithm::nnchain:
      if (!nn_chain_supports(m))
        return "nnchain supports single, complete, average, weighted and ward only; " + m.name() +
               " lacks the reducibility or order independence it relies on";
      break;
    case Algorithm::mst:
      if (m.kind() != MethodKind::single) return "mst computes single linkage only";
      break;
    case Algorithm::generic_variant:
      if (m.kind() != MethodKind::ward && m.kind() != MethodKind::centroid &&
          m.kind() != MethodKind::median)
        return "generic-variant supports ward, centroid and median only, which have cluster "
               "centers";
      break;
    default: break;
  }
  return std::nullopt;
}

StepwiseDendrogram run_matrix_algorithm(Algorithm a, const Method& m, CondensedMatrix d,
                                        LinkageStats* stats) {
  if (a == Algorithm::automatic) a = recommended_algorithm(m);
  if (auto why = illegal_pair(a, m)) throw MethodError(*why);
  switch (a) {
    case Algorithm::primitive: return primitive_clustering(d, m);
    case Algorithm::generic: return generic_linkage(std::move(d), m, {stats});
    case Algorithm::nnchain: return nn_chain_linkage(std::move(d), m);
    case Algorithm::mst: return mst_linkage(d);
    case Algorithm::anderberg: return anderberg_linkage(std::move(d), m, {stats});
    case Algorithm::generic_variant:
      throw MethodError("generic-variant needs vector input");
    case Algorithm::automatic: break;
  }
  throw MethodError("unhandled algorithm");
}

}  // namespace sahn
