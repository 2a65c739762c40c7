#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "treeskel/errors.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/rational.hpp"
#include "treeskel/spanning_tree.hpp"

namespace treeskel {

inline constexpr int kDefaultEnumerationCap = 8;

/// All spanning trees of K_n in lexicographic order of their sorted
/// edge-index lists. Enumeration walks edge subsets in lex order and prunes
/// on cycles, so the output order is deterministic by construction.
inline std::vector<SpanningTree> enumerate_spanning_trees(int n, int cap = kDefaultEnumerationCap) {
  if (n < 2) throw std::invalid_argument("enumerate_spanning_trees requires n >= 2");
  if (n > cap)
    throw resource_limit_error("n = " + std::to_string(n) +
                               " exceeds the spanning-tree enumeration cap " + std::to_string(cap));
  EdgeSpace space(n);
  const int d = space.dim();
  std::vector<SpanningTree> out;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n - 1));

  auto recurse = [&](auto&& self, int first, const detail::DisjointSet& dsu) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      out.push_back(SpanningTree{chosen});
      return;
    }
    const int needed = n - 1 - static_cast<int>(chosen.size());
    for (int e = first; e + needed <= d; ++e) {
      auto [i, j] = space.endpoints(e);
      detail::DisjointSet next = dsu;
      if (!next.unite(i, j)) continue;
      chosen.push_back(e);
      self(self, e + 1, next);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, detail::DisjointSet(n));
  return out;
}

inline std::vector<SpanningTree> enumerate_spanning_trees(const GraphInstance& g,
                                                          int cap = kDefaultEnumerationCap) {
  return enumerate_spanning_trees(g.n, cap);
}

/// Spanning-tree count of K_n by the matrix-tree theorem: determinant of the
/// top-left (n-1)x(n-1) minor of the Laplacian, by exact fraction-free-ish
/// Gaussian elimination over rationals. Serves as the independent oracle for
/// the enumerator.
inline Integer count_spanning_trees(int n) {
  if (n < 2) throw std::invalid_argument("count_spanning_trees requires n >= 2");
  const int m = n - 1;
  std::vector<RationalVec> a(static_cast<std::size_t>(m),
                             RationalVec(static_cast<std::size_t>(m), Rational(-1)));
  for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = n - 1;
  Rational det = 1;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Integer(0);
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= p;
    for (int r = col + 1; r < m; ++r) {
      Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
      if (f == 0) continue;
      for (int c = col; c < m; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  return det.get_num();  // Laplacian minors of K_n have integer determinant
}

inline Integer count_spanning_trees(const GraphInstance& g) { return count_spanning_trees(g.n); }

// The four constrained families.
struct LeafMax {
  int k;
};
struct LeafMaxInSubset {
  std::set<int> u;
  int k;
};
struct LeavesOnlyIn {
  std::set<int> u;
};
struct DegreeMax {
  int k;
};

using TreeConstraint = std::variant<LeafMax, LeafMaxInSubset, LeavesOnlyIn, DegreeMax>;

inline void validate_constraint(const TreeConstraint& c, int n) {
  if (const auto* lm = std::get_if<LeafMax>(&c)) {
    if (lm->k < 1 || lm->k >= n) throw std::invalid_argument("LeafMax requires 1 <= k < n");
  } else if (const auto* ls = std::get_if<LeafMaxInSubset>(&c)) {
    if (ls->k < 1 || ls->k >= static_cast<int>(ls->u.size()))
      throw std::invalid_argument("LeafMaxInSubset requires 1 <= k < |U|");
    for (int v : ls->u)
      if (v < 0 || v >= n) throw std::invalid_argument("subset vertex out of range");
  } else if (const auto* lo = std::get_if<LeavesOnlyIn>(&c)) {
    for (int v : lo->u)
      if (v < 0 || v >= n) throw std::invalid_argument("subset vertex out of range");
  } else if (const auto* dm = std::get_if<DegreeMax>(&c)) {
    if (dm->k < 1 || dm->k >= n) throw std::invalid_argument("DegreeMax requires 1 <= k < n");
  }
}

inline bool satisfies(const SpanningTree& t, const EdgeSpace& space, const TreeConstraint& c) {
  const std::vector<int> deg = degrees(t, space);
  if (const auto* lm = std::get_if<LeafMax>(&c)) {
    int leaves = 0;
    for (int d : deg)
      if (d == 1) ++leaves;
    return leaves <= lm->k;
  }
  if (const auto* ls = std::get_if<LeafMaxInSubset>(&c)) {
    int leaves_in_u = 0;
    for (int v : ls->u)
      if (deg[static_cast<std::size_t>(v)] == 1) ++leaves_in_u;
    return leaves_in_u <= ls->k;
  }
  if (const auto* lo = std::get_if<LeavesOnlyIn>(&c)) {
    for (int v = 0; v < space.n(); ++v)
      if (deg[static_cast<std::size_t>(v)] == 1 && !lo->u.contains(v)) return false;
    return true;
  }
  const auto& dm = std::get<DegreeMax>(c);
  for (int d : deg)
    if (d > dm.k) return false;
  return true;
}

/// Keeps exactly the trees satisfying the constraint, preserving input order.
inline std::vector<SpanningTree> filter_family(const std::vector<SpanningTree>& trees,
                                               const TreeConstraint& c, int n) {
  validate_constraint(c, n);
  EdgeSpace space(n);
  std::vector<SpanningTree> out;
  for (const auto& t : trees)
    if (satisfies(t, space, c)) out.push_back(t);
  return out;
}

}  // namespace treeskel
