#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "treeskel/edge_space.hpp"
#include "treeskel/errors.hpp"

namespace treeskel {

namespace detail {

// Small union-find, path halving, union by size.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace detail

/// A spanning tree of K_n, stored as the sorted list of its n-1 edge indices.
struct SpanningTree {
  std::vector<int> edges;

  bool operator==(const SpanningTree&) const = default;
  auto operator<=>(const SpanningTree&) const = default;
};

inline SpanningTree make_tree(const EdgeSpace& space, std::vector<std::pair<int, int>> pairs) {
  SpanningTree t;
  t.edges.reserve(pairs.size());
  for (auto [i, j] : pairs) t.edges.push_back(space.index(i, j));
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

inline std::vector<int> degrees(const SpanningTree& t, const EdgeSpace& space) {
  std::vector<int> deg(static_cast<std::size_t>(space.n()), 0);
  for (int e : t.edges) {
    auto [i, j] = space.endpoints(e);
    ++deg[static_cast<std::size_t>(i)];
    ++deg[static_cast<std::size_t>(j)];
  }
  return deg;
}

/// Number of degree-1 vertices.
inline int leaf_count(const SpanningTree& t, const EdgeSpace& space) {
  int leaves = 0;
  for (int d : degrees(t, space))
    if (d == 1) ++leaves;
  return leaves;
}

/// True iff t has exactly n-1 distinct, sorted, acyclic edges (which on n
/// vertices forces a connected spanning tree).
inline bool is_spanning_tree(const SpanningTree& t, const EdgeSpace& space) {
  const int n = space.n();
  if (static_cast<int>(t.edges.size()) != n - 1) return false;
  detail::DisjointSet dsu(n);
  int prev = -1;
  for (int e : t.edges) {
    if (e <= prev || e >= space.dim()) return false;
    prev = e;
    auto [i, j] = space.endpoints(e);
    if (!dsu.unite(i, j)) return false;
  }
  return true;
}

inline void check_spanning_tree(const SpanningTree& t, const EdgeSpace& space) {
  if (!is_spanning_tree(t, space)) throw contract_error("edge set is not a spanning tree");
}

}  // namespace treeskel
