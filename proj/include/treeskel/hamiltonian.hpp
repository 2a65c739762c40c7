#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "treeskel/char_vector.hpp"
#include "treeskel/edge_space.hpp"

namespace treeskel {

/// A Hamiltonian path on a subset of K_n's vertices, stored as the visiting
/// order; sequence.front() and sequence.back() are the fixed endpoints.
struct HamiltonianPath {
  std::vector<int> sequence;

  bool operator==(const HamiltonianPath&) const = default;
  auto operator<=>(const HamiltonianPath&) const = default;
};

/// A Hamiltonian cycle on a subset of K_n's vertices; the closing edge from
/// sequence.back() to sequence.front() is implied. Canonical form: starts at
/// the smallest vertex, and the second vertex is smaller than the last (so
/// each cycle has exactly one representation).
struct HamiltonianCycle {
  std::vector<int> sequence;

  bool operator==(const HamiltonianCycle&) const = default;
  auto operator<=>(const HamiltonianCycle&) const = default;
};

namespace detail {

inline void check_ground(const EdgeSpace& space, const std::vector<int>& ground) {
  if (ground.size() < 2) throw std::invalid_argument("ground set needs at least 2 vertices");
  for (int v : ground)
    if (v < 0 || v >= space.n()) throw std::invalid_argument("ground vertex out of range");
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("ground set has duplicate vertices");
}

}  // namespace detail

inline std::vector<int> hp_edges(const HamiltonianPath& p, const EdgeSpace& space) {
  std::vector<int> edges;
  edges.reserve(p.sequence.size() - 1);
  for (std::size_t i = 0; i + 1 < p.sequence.size(); ++i)
    edges.push_back(space.index(p.sequence[i], p.sequence[i + 1]));
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::vector<int> hc_edges(const HamiltonianCycle& c, const EdgeSpace& space) {
  std::vector<int> edges;
  edges.reserve(c.sequence.size());
  for (std::size_t i = 0; i + 1 < c.sequence.size(); ++i)
    edges.push_back(space.index(c.sequence[i], c.sequence[i + 1]));
  edges.push_back(space.index(c.sequence.back(), c.sequence.front()));
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// All Hamiltonian paths on the ground set with fixed endpoints u, w, in
/// lexicographic order of the interior vertex sequence. Count = (|ground|-2)!.
inline std::vector<HamiltonianPath> enumerate_hamiltonian_paths(const std::vector<int>& ground,
                                                                int u, int w) {
  if (u == w) throw std::invalid_argument("path endpoints must differ");
  std::vector<int> middle;
  bool saw_u = false, saw_w = false;
  for (int v : ground) {
    if (v == u) saw_u = true;
    else if (v == w) saw_w = true;
    else middle.push_back(v);
  }
  if (!saw_u || !saw_w) throw std::invalid_argument("endpoints must belong to the ground set");
  std::sort(middle.begin(), middle.end());
  if (std::adjacent_find(middle.begin(), middle.end()) != middle.end())
    throw std::invalid_argument("ground set has duplicate vertices");

  std::vector<HamiltonianPath> paths;
  do {
    HamiltonianPath p;
    p.sequence.reserve(middle.size() + 2);
    p.sequence.push_back(u);
    p.sequence.insert(p.sequence.end(), middle.begin(), middle.end());
    p.sequence.push_back(w);
    paths.push_back(std::move(p));
  } while (std::next_permutation(middle.begin(), middle.end()));
  return paths;
}

/// Characteristic vectors of all u-w Hamiltonian paths on the ground set, as
/// points in the ambient edge space of K_n.
inline VertexSet hp_vertex_set(int n, const std::vector<int>& ground, int u, int w) {
  EdgeSpace space(n);
  detail::check_ground(space, ground);
  std::vector<SpanningTree> points;
  for (const auto& p : enumerate_hamiltonian_paths(ground, u, w))
    points.push_back(SpanningTree{hp_edges(p, space)});
  return make_point_set(n, std::move(points));
}

inline HamiltonianCycle canonical_cycle(std::vector<int> seq) {
  auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  return HamiltonianCycle{std::move(seq)};
}

/// All Hamiltonian cycles on the ground set in canonical form, sorted; empty
/// for |ground| < 3 (no simple cycle exists). Count = (|ground|-1)!/2.
inline std::vector<HamiltonianCycle> enumerate_hamiltonian_cycles(const std::vector<int>& ground) {
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("ground set has duplicate vertices");
  if (sorted.size() < 3) return {};
  std::vector<int> rest(sorted.begin() + 1, sorted.end());
  std::vector<HamiltonianCycle> cycles;
  do {
    if (rest.front() > rest.back()) continue;  // keep one of each reflection pair
    std::vector<int> seq;
    seq.reserve(sorted.size());
    seq.push_back(sorted.front());
    seq.insert(seq.end(), rest.begin(), rest.end());
    cycles.push_back(HamiltonianCycle{std::move(seq)});
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

/// Characteristic vectors of all Hamiltonian cycles on the ground set, as
/// points in the ambient edge space of K_n (the TSP polytope's vertex set).
inline VertexSet tsp_vertex_set(int n, const std::vector<int>& ground) {
  EdgeSpace space(n);
  detail::check_ground(space, ground);
  std::vector<SpanningTree> points;
  for (const auto& c : enumerate_hamiltonian_cycles(ground))
    points.push_back(SpanningTree{hc_edges(c, space)});
  return make_point_set(n, std::move(points));
}

/// Merge the terminal vertex w of a u-w Hamiltonian path into u: the path
/// u,p_1,...,p_m,w becomes the cycle u,p_1,...,p_m on the ground set minus w
/// (the edge (p_m,w) is replaced by the closing edge (p_m,u)). Needs at least
/// two interior vertices so the result is a simple cycle.
inline HamiltonianCycle merge_path_to_cycle(const HamiltonianPath& p) {
  if (p.sequence.size() < 4)
    throw std::invalid_argument("merging needs a path on at least 4 vertices");
  std::vector<int> seq(p.sequence.begin(), p.sequence.end() - 1);
  return canonical_cycle(std::move(seq));
}

}  // namespace treeskel
