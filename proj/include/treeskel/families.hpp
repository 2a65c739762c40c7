#pragma once

#include <optional>
#include <set>
#include <string>

#include "treeskel/char_vector.hpp"
#include "treeskel/enumeration.hpp"

namespace treeskel {

/// Names a tree family: the unconstrained spanning trees of K_n or one of
/// the four constrained variants.
///   mst     all spanning trees
///   lcmst   at most k leaves                       (k)
///   rlsmst  at most k leaves inside U              (k, u)
///   svmst   all leaves inside U                    (u)
///   dcmst   maximum degree at most k               (k)
struct FamilySpec {
  std::string family = "mst";
  int n = 0;
  int k = 0;
  std::optional<std::set<int>> u;
};

inline std::optional<TreeConstraint> family_constraint(const FamilySpec& f) {
  if (f.family == "mst") return std::nullopt;
  if (f.family == "lcmst") return TreeConstraint(LeafMax{f.k});
  if (f.family == "rlsmst") {
    if (!f.u) throw std::invalid_argument("rlsmst requires a subset U");
    return TreeConstraint(LeafMaxInSubset{*f.u, f.k});
  }
  if (f.family == "svmst") {
    if (!f.u) throw std::invalid_argument("svmst requires a subset U");
    return TreeConstraint(LeavesOnlyIn{*f.u});
  }
  if (f.family == "dcmst") return TreeConstraint(DegreeMax{f.k});
  throw std::invalid_argument("unknown family: " + f.family);
}

/// Builds the family's full vertex set by enumeration and filtering.
inline VertexSet build_family_vertex_set(const FamilySpec& f,
                                         int cap = kDefaultEnumerationCap) {
  auto trees = enumerate_spanning_trees(f.n, cap);
  if (auto c = family_constraint(f)) trees = filter_family(trees, *c, f.n);
  return make_vertex_set(f.n, std::move(trees));
}

}  // namespace treeskel
