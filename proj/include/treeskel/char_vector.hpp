#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "treeskel/edge_space.hpp"
#include "treeskel/rational.hpp"
#include "treeskel/spanning_tree.hpp"

namespace treeskel {

/// Characteristic vector of a tree in the edge space of K_n: exactly the
/// entries of the tree's edges are 1.
inline RationalVec char_vector(const SpanningTree& t, const EdgeSpace& space) {
  RationalVec x(static_cast<std::size_t>(space.dim()), Rational(0));
  for (int e : t.edges) x[static_cast<std::size_t>(e)] = 1;
  return x;
}

/// Edge set of a tree packed into a 64-bit mask (valid for dim <= 64, i.e.
/// n <= 11, well beyond the enumeration cap).
inline std::uint64_t edge_mask(const SpanningTree& t, const EdgeSpace& space) {
  if (space.dim() > 64) throw std::invalid_argument("edge_mask requires dim <= 64");
  std::uint64_t m = 0;
  for (int e : t.edges) m |= 1ULL << e;
  return m;
}

/// The vertex set of an integral tree polytope: a list of spanning trees of
/// K_n, lex-sorted and de-duplicated, with their edge masks cached. Every
/// 0/1 point of a polytope spanned by 0/1 points is a vertex, so the trees
/// are exactly the polytope's vertices.
struct VertexSet {
  int n = 0;
  std::vector<SpanningTree> trees;
  std::vector<std::uint64_t> masks;

  int size() const { return static_cast<int>(trees.size()); }
};

inline VertexSet make_vertex_set(int n, std::vector<SpanningTree> trees) {
  std::sort(trees.begin(), trees.end());
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  VertexSet vs;
  vs.n = n;
  EdgeSpace space(n);
  vs.masks.reserve(trees.size());
  for (const auto& t : trees) {
    check_spanning_tree(t, space);
    vs.masks.push_back(edge_mask(t, space));
  }
  vs.trees = std::move(trees);
  return vs;
}

/// Vertex set over arbitrary 0/1 points of K_n's edge space, given as edge
/// sets that need not be spanning trees (Hamiltonian paths on a vertex
/// subset, Hamiltonian cycles, ...). Same container and ordering contract as
/// make_vertex_set, minus the spanning-tree validation; everything downstream
/// (LP adjacency tests, skeletons, cliques, labels) operates on edge masks and so
/// works on these points unchanged.
inline VertexSet make_point_set(int n, std::vector<SpanningTree> points) {
  EdgeSpace space(n);
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      int e = p.edges[i];
      if (e < 0 || e >= space.dim()) throw std::invalid_argument("point edge index out of range");
      if (i > 0 && p.edges[i - 1] >= e) throw std::invalid_argument("point edges must be strictly increasing");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  VertexSet vs;
  vs.n = n;
  vs.masks.reserve(points.size());
  for (const auto& p : points) vs.masks.push_back(edge_mask(p, space));
  vs.trees = std::move(points);
  return vs;
}

/// Human-readable vertex label: the tree's edge labels joined by commas,
/// e.g. "01,12,23" for the path 0-1-2-3 in K_4.
inline std::string tree_label(const SpanningTree& t, const EdgeSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (i) out += ',';
    out += space.edge_label(t.edges[i]);
  }
  return out;
}

}  // namespace treeskel
