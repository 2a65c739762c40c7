#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "treeskel/char_vector.hpp"
#include "treeskel/lp.hpp"

namespace treeskel {

/// Single edge exchange: the symmetric difference of the edge sets has
/// exactly two elements. For the unconstrained spanning-tree polytope this
/// is equivalent to vertex adjacency; for constrained variants it is only a
/// combinatorial heuristic and must not be used as ground truth.
inline bool edge_swap_adjacent(const SpanningTree& a, const SpanningTree& b,
                               const EdgeSpace& space) {
  return std::popcount(edge_mask(a, space) ^ edge_mask(b, space)) == 2;
}

/// Proof of non-adjacency: a point of the segment [x_i, x_j] written as a
/// convex combination of other vertices. Checkable from scratch with exact
/// arithmetic.
struct ConvexCertificate {
  Rational alpha, beta;                          // alpha*x_i + beta*x_j
  std::vector<std::pair<int, Rational>> gamma;   // (vertex index, coefficient), nonzero only
};

/// Ground-truth adjacency of two vertices of conv(vs) by exact LP
/// feasibility: x_i and x_j are NOT adjacent iff some point alpha*x_i +
/// beta*x_j (alpha+beta = 1, alpha,beta >= 0) is also a convex combination
/// of the remaining vertices. Such a combination can only use vertices
/// supported inside the union support of x_i and x_j (any vertex with an
/// edge outside the union would contribute a positive coordinate there), so
/// the LP is restricted to those candidates and to the union coordinates.
/// With no candidates at all the pair is trivially adjacent. When the pair
/// is non-adjacent and `cert` is given, it receives the combination found.
inline bool lp_adjacent(const VertexSet& vs, int i, int j,
                            const SimplexOptions& opt = {},
                            ConvexCertificate* cert = nullptr) {
  const int m = vs.size();
  if (i < 0 || j < 0 || i >= m || j >= m) throw std::invalid_argument("vertex index out of range");
  if (i == j) throw std::invalid_argument("adjacency of a vertex with itself is undefined");
  const std::uint64_t u = vs.masks[static_cast<std::size_t>(i)] | vs.masks[static_cast<std::size_t>(j)];

  std::vector<int> cand;
  for (int z = 0; z < m; ++z) {
    if (z == i || z == j) continue;
    if ((vs.masks[static_cast<std::size_t>(z)] & ~u) == 0) cand.push_back(z);
  }
  if (cand.empty()) return true;

  std::vector<int> coords;
  for (int e = 0; e < 64; ++e)
    if (u >> e & 1) coords.push_back(e);

  // Variables: alpha, beta, then one gamma per candidate.
  LinearProgram lp(2 + static_cast<int>(cand.size()));
  lp.set_nonnegative();
  auto bit = [&](int vertex, int e) {
    return Rational((vs.masks[static_cast<std::size_t>(vertex)] >> e) & 1);
  };
  for (int e : coords) {
    RationalVec row(lp.num_vars, Rational(0));
    row[0] = bit(i, e);
    row[1] = bit(j, e);
    for (std::size_t c = 0; c < cand.size(); ++c) row[c + 2] = -bit(cand[c], e);
    lp.add_equality(std::move(row), Rational(0));
  }
  {
    RationalVec row(lp.num_vars, Rational(0));
    row[0] = row[1] = 1;
    lp.add_equality(std::move(row), Rational(1));
  }
  {
    RationalVec row(lp.num_vars, Rational(0));
    for (std::size_t c = 0; c < cand.size(); ++c) row[c + 2] = 1;
    lp.add_equality(std::move(row), Rational(1));
  }
  const FeasibilityResult res = feasible(lp, opt);
  if (res.feasible && cert) {
    cert->alpha = res.witness[0];
    cert->beta = res.witness[1];
    cert->gamma.clear();
    for (std::size_t c = 0; c < cand.size(); ++c)
      if (res.witness[c + 2] != 0) cert->gamma.emplace_back(cand[c], res.witness[c + 2]);
  }
  return !res.feasible;
}

/// Which adjacency decision procedure a caller wants.
///   Lp    exact LP feasibility test (always valid)
///   Swap  single-edge-exchange rule (valid for the unconstrained family)
///   Auto  Swap when the vertex set is the full spanning-tree family,
///         Lp otherwise
enum class AdjacencyMethod { Lp, Swap, Auto };

inline AdjacencyMethod resolve_method(AdjacencyMethod m, bool full_mst_family) {
  if (m != AdjacencyMethod::Auto) return m;
  return full_mst_family ? AdjacencyMethod::Swap : AdjacencyMethod::Lp;
}

inline bool vertices_adjacent(const VertexSet& vs, int i, int j, AdjacencyMethod method,
                              const SimplexOptions& opt = {}) {
  if (method == AdjacencyMethod::Auto)
    throw std::invalid_argument("resolve Auto against the family before calling");
  if (method == AdjacencyMethod::Swap) {
    EdgeSpace space(vs.n);
    return edge_swap_adjacent(vs.trees[static_cast<std::size_t>(i)],
                              vs.trees[static_cast<std::size_t>(j)], space);
  }
  return lp_adjacent(vs, i, j, opt);
}

}  // namespace treeskel
