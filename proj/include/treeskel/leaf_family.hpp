#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "treeskel/char_vector.hpp"
#include "treeskel/edge_space.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/hamiltonian.hpp"
#include "treeskel/spanning_tree.hpp"

namespace treeskel {

/// The leaf-constrained special family: two distinguished vertices u, w, a
/// set V_uw = v_u ∪ v_w of k pendant leaves (members of v_u attach to u,
/// members of v_w attach to w), and the remaining n-k-2 inner vertices, which
/// together with u and w carry a Hamiltonian path from u to w.
struct LeafFamilySpec {
  int n = 0;
  int k = 0;
  int u = 0;
  int w = 0;
  std::vector<int> v_u;
  std::vector<int> v_w;
};

inline void validate_leaf_spec(const LeafFamilySpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("leaf family needs n >= 2");
  if (spec.u == spec.w) throw std::invalid_argument("u and w must differ");
  if (spec.v_u.empty() || spec.v_w.empty())
    throw std::invalid_argument("both pendant sets must be nonempty (otherwise u or w itself "
                                "becomes a leaf and the leaf set is not V_uw)");
  if (static_cast<int>(spec.v_u.size() + spec.v_w.size()) != spec.k)
    throw std::invalid_argument("|v_u| + |v_w| must equal k");
  if (spec.n - spec.k - 2 < 0) throw std::invalid_argument("no room for inner vertices: need n-k-2 >= 0");
  std::vector<int> named{spec.u, spec.w};
  named.insert(named.end(), spec.v_u.begin(), spec.v_u.end());
  named.insert(named.end(), spec.v_w.begin(), spec.v_w.end());
  for (int v : named)
    if (v < 0 || v >= spec.n) throw std::invalid_argument("spec vertex out of range");
  std::sort(named.begin(), named.end());
  if (std::adjacent_find(named.begin(), named.end()) != named.end())
    throw std::invalid_argument("u, w, v_u, v_w must be pairwise disjoint");
}

/// The inner vertices V \ ({u,w} ∪ V_uw), sorted.
inline std::vector<int> lc_inner_vertices(const LeafFamilySpec& spec) {
  std::vector<bool> named(static_cast<std::size_t>(spec.n), false);
  named[static_cast<std::size_t>(spec.u)] = named[static_cast<std::size_t>(spec.w)] = true;
  for (int v : spec.v_u) named[static_cast<std::size_t>(v)] = true;
  for (int v : spec.v_w) named[static_cast<std::size_t>(v)] = true;
  std::vector<int> inner;
  for (int v = 0; v < spec.n; ++v)
    if (!named[static_cast<std::size_t>(v)]) inner.push_back(v);
  return inner;
}

/// The path ground set {u} ∪ inner ∪ {w}, sorted.
inline std::vector<int> lc_ground(const LeafFamilySpec& spec) {
  std::vector<int> g = lc_inner_vertices(spec);
  g.push_back(spec.u);
  g.push_back(spec.w);
  std::sort(g.begin(), g.end());
  return g;
}

/// Canonical spec used when only (n, k) are given: u=0, w=1, inner vertices
/// 2..n-k-1, pendants n-k..n-1 with the first ceil(k/2) attached to u.
inline LeafFamilySpec lc_default_spec(int n, int k) {
  LeafFamilySpec spec;
  spec.n = n;
  spec.k = k;
  spec.u = 0;
  spec.w = 1;
  int first_pendant = n - k;
  int at_u = (k + 1) / 2;
  for (int i = 0; i < k; ++i)
    (i < at_u ? spec.v_u : spec.v_w).push_back(first_pendant + i);
  validate_leaf_spec(spec);
  return spec;
}

/// The fixed pendant edges (v,u) for v ∈ v_u and (v,w) for v ∈ v_w, sorted.
inline std::vector<int> lc_pendant_edges(const LeafFamilySpec& spec, const EdgeSpace& space) {
  std::vector<int> edges;
  edges.reserve(spec.v_u.size() + spec.v_w.size());
  for (int v : spec.v_u) edges.push_back(space.index(spec.u, v));
  for (int v : spec.v_w) edges.push_back(space.index(spec.w, v));
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Lift a u-w Hamiltonian path on the spec's ground set to the family tree:
/// the path's edges plus the fixed pendant edges.
inline SpanningTree lc_lift(const HamiltonianPath& p, const LeafFamilySpec& spec) {
  validate_leaf_spec(spec);
  std::vector<int> ground = lc_ground(spec);
  std::vector<int> visited = p.sequence;
  std::sort(visited.begin(), visited.end());
  if (visited != ground) throw std::invalid_argument("path is not on the spec's ground set");
  if (p.sequence.front() != spec.u || p.sequence.back() != spec.w)
    throw std::invalid_argument("path endpoints must be u and w");
  EdgeSpace space(spec.n);
  SpanningTree t{hp_edges(p, space)};
  std::vector<int> pendants = lc_pendant_edges(spec, space);
  t.edges.insert(t.edges.end(), pendants.begin(), pendants.end());
  std::sort(t.edges.begin(), t.edges.end());
  check_spanning_tree(t, space);
  return t;
}

/// Project a family tree back to its Hamiltonian path: remove V_uw and the
/// pendant edges, and walk the remaining path from u to w. Inputs outside the
/// family violate the precondition and raise contract_error.
inline HamiltonianPath lc_project(const SpanningTree& t, const LeafFamilySpec& spec) {
  validate_leaf_spec(spec);
  EdgeSpace space(spec.n);
  std::vector<int> rest = t.edges;
  std::sort(rest.begin(), rest.end());
  for (int e : lc_pendant_edges(spec, space)) {
    auto it = std::lower_bound(rest.begin(), rest.end(), e);
    if (it == rest.end() || *it != e)
      throw contract_error("tree is missing a fixed pendant edge; not a family member");
    rest.erase(it);
  }
  std::vector<int> ground = lc_ground(spec);
  if (rest.size() + 1 != ground.size())
    throw contract_error("tree has the wrong number of path edges; not a family member");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(spec.n));
  for (int e : rest) {
    auto [a, b] = space.endpoints(e);
    if (!std::binary_search(ground.begin(), ground.end(), a) ||
        !std::binary_search(ground.begin(), ground.end(), b))
      throw contract_error("non-pendant edge leaves the path ground set; not a family member");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  HamiltonianPath p;
  p.sequence.reserve(ground.size());
  int prev = -1, cur = spec.u;
  p.sequence.push_back(cur);
  for (std::size_t step = 1; step < ground.size(); ++step) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    int next = -1;
    for (int v : nb)
      if (v != prev) {
        if (next != -1) throw contract_error("path walk is ambiguous; not a family member");
        next = v;
      }
    if (next == -1) throw contract_error("path walk ends early; not a family member");
    prev = cur;
    cur = next;
    p.sequence.push_back(cur);
  }
  if (cur != spec.w || adj[static_cast<std::size_t>(spec.w)].size() != 1)
    throw contract_error("walk from u does not end at w; not a family member");
  std::vector<int> visited = p.sequence;
  std::sort(visited.begin(), visited.end());
  if (visited != ground) throw contract_error("walk does not cover the ground set; not a family member");
  return p;
}

/// The family T_k: one tree per u-w Hamiltonian path on the ground set,
/// i.e. (n-k-2)! trees, each with exactly k leaves (the set V_uw).
inline VertexSet lc_family(const LeafFamilySpec& spec) {
  validate_leaf_spec(spec);
  std::vector<SpanningTree> trees;
  for (const auto& p : enumerate_hamiltonian_paths(lc_ground(spec), spec.u, spec.w))
    trees.push_back(lc_lift(p, spec));
  return make_vertex_set(spec.n, std::move(trees));
}

/// Every valid LeafFamilySpec on n vertices with k pendant leaves: all ordered
/// choices of (u, w), every k-subset of the rest as V_uw, and every split of
/// V_uw into nonempty (v_u, v_w). Deterministic order.
inline std::vector<LeafFamilySpec> all_leaf_specs(int n, int k) {
  if (k < 2 || n - k - 2 < 0) return {};
  std::vector<LeafFamilySpec> specs;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      if (u == w) continue;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (v != u && v != w) rest.push_back(v);
      std::vector<bool> pick(rest.size(), false);
      std::fill(pick.begin(), pick.begin() + k, true);
      // prev_permutation over the indicator vector walks all k-subsets.
      do {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (pick[i]) chosen.push_back(rest[i]);
        for (unsigned split = 1; split + 1 <= (1u << k) - 1; ++split) {
          LeafFamilySpec spec;
          spec.n = n;
          spec.k = k;
          spec.u = u;
          spec.w = w;
          for (int i = 0; i < k; ++i)
            (split >> i & 1 ? spec.v_u : spec.v_w).push_back(chosen[static_cast<std::size_t>(i)]);
          if (spec.v_u.empty() || spec.v_w.empty()) continue;
          specs.push_back(std::move(spec));
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  return specs;
}

}  // namespace treeskel
