#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "treeskel/char_vector.hpp"
#include "treeskel/edge_space.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/hamiltonian.hpp"
#include "treeskel/spanning_tree.hpp"

namespace treeskel {

/// The degree-constrained special family: s = floor((n-2)/(k-1)) spine groups
/// V_1..V_s of size k-1 whose first member is the group's representative and
/// whose other members attach to it as leaves; the representatives carry a
/// Hamiltonian path whose endpoint roles are fixed (V_1's representative
/// starts it, V_s's ends it); the leftover vertices form V_0 (hub v_0, its
/// first member, anchored to V_1's representative) and V_{s+1} (hub v_{s+1},
/// anchored to V_s's representative), with the hubs' other members attached
/// to their hub as leaves.
struct DegreeFamilySpec {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> spine_groups;
  std::vector<int> v0_group;
  std::vector<int> vs1_group;

  int s() const { return static_cast<int>(spine_groups.size()); }
};

/// Number of spine groups: s = floor((n-2)/(k-1)).
inline int dc_spine_count(int n, int k) {
  if (k < 2) throw std::invalid_argument("degree bound k must be at least 2");
  return (n - 2) / (k - 1);
}

inline void validate_degree_spec(const DegreeFamilySpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("degree bound k must be at least 2");
  if (spec.n < 2) throw std::invalid_argument("degree family needs n >= 2");
  int s = dc_spine_count(spec.n, spec.k);
  if (s < 2) throw std::invalid_argument("spine needs s >= 2 groups; n too small for this k");
  if (spec.s() != s) throw std::invalid_argument("spec must carry exactly s spine groups");
  if (spec.v0_group.empty() || spec.vs1_group.empty())
    throw std::invalid_argument("V_0 and V_{s+1} must be nonempty");
  std::vector<int> all;
  for (const auto& g : spec.spine_groups) {
    if (static_cast<int>(g.size()) != spec.k - 1)
      throw std::invalid_argument("every spine group must have k-1 vertices");
    all.insert(all.end(), g.begin(), g.end());
  }
  all.insert(all.end(), spec.v0_group.begin(), spec.v0_group.end());
  all.insert(all.end(), spec.vs1_group.begin(), spec.vs1_group.end());
  if (static_cast<int>(all.size()) != spec.n)
    throw std::invalid_argument("groups must cover all n vertices");
  for (int v : all)
    if (v < 0 || v >= spec.n) throw std::invalid_argument("spec vertex out of range");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("groups must be pairwise disjoint");
}

/// The spine representatives in group order (first member of each group).
inline std::vector<int> dc_reps(const DegreeFamilySpec& spec) {
  std::vector<int> reps;
  reps.reserve(spec.spine_groups.size());
  for (const auto& g : spec.spine_groups) reps.push_back(g.front());
  return reps;
}

/// Canonical spec used when only (n, k) are given: consecutive vertex blocks
/// V_0 = {0..}, then the s spine groups, then V_{s+1}; each block's smallest
/// vertex is its representative/hub; |V_0| = ceil(r/2) of the r leftovers.
inline DegreeFamilySpec dc_default_spec(int n, int k) {
  int s = dc_spine_count(n, k);
  if (s < 2) throw std::invalid_argument("spine needs s >= 2 groups; n too small for this k");
  int r = n - s * (k - 1);
  DegreeFamilySpec spec;
  spec.n = n;
  spec.k = k;
  int v0_size = (r + 1) / 2;
  int next = 0;
  for (int i = 0; i < v0_size; ++i) spec.v0_group.push_back(next++);
  for (int i = 0; i < s; ++i) {
    std::vector<int> g;
    for (int j = 0; j < k - 1; ++j) g.push_back(next++);
    spec.spine_groups.push_back(std::move(g));
  }
  while (next < n) spec.vs1_group.push_back(next++);
  validate_degree_spec(spec);
  return spec;
}

/// The edges present in every family member: group leaves to their
/// representative/hub, plus the two anchor edges (v_0, rep of V_1) and
/// (v_{s+1}, rep of V_s). Sorted.
inline std::vector<int> dc_fixed_edges(const DegreeFamilySpec& spec, const EdgeSpace& space) {
  std::vector<int> edges;
  for (const auto& g : spec.spine_groups)
    for (std::size_t i = 1; i < g.size(); ++i) edges.push_back(space.index(g.front(), g[i]));
  for (std::size_t i = 1; i < spec.v0_group.size(); ++i)
    edges.push_back(space.index(spec.v0_group.front(), spec.v0_group[i]));
  for (std::size_t i = 1; i < spec.vs1_group.size(); ++i)
    edges.push_back(space.index(spec.vs1_group.front(), spec.vs1_group[i]));
  edges.push_back(space.index(spec.v0_group.front(), spec.spine_groups.front().front()));
  edges.push_back(space.index(spec.vs1_group.front(), spec.spine_groups.back().front()));
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Lift a Hamiltonian path on the representatives (from V_1's rep to V_s's
/// rep) to the family tree: the spine edges plus all fixed edges.
inline SpanningTree dc_lift(const HamiltonianPath& p, const DegreeFamilySpec& spec) {
  validate_degree_spec(spec);
  std::vector<int> reps = dc_reps(spec);
  std::vector<int> visited = p.sequence, ground = reps;
  std::sort(visited.begin(), visited.end());
  std::sort(ground.begin(), ground.end());
  if (visited != ground) throw std::invalid_argument("path is not on the representative set");
  if (p.sequence.front() != reps.front() || p.sequence.back() != reps.back())
    throw std::invalid_argument("path endpoints must be the V_1 and V_s representatives");
  EdgeSpace space(spec.n);
  SpanningTree t{hp_edges(p, space)};
  std::vector<int> fixed = dc_fixed_edges(spec, space);
  t.edges.insert(t.edges.end(), fixed.begin(), fixed.end());
  std::sort(t.edges.begin(), t.edges.end());
  check_spanning_tree(t, space);
  return t;
}

/// Project a family tree back to its spine path: remove the fixed edges and
/// walk the remaining path over the representatives. Inputs outside the
/// family violate the precondition and raise contract_error.
inline HamiltonianPath dc_project(const SpanningTree& t, const DegreeFamilySpec& spec) {
  validate_degree_spec(spec);
  EdgeSpace space(spec.n);
  std::vector<int> rest = t.edges;
  std::sort(rest.begin(), rest.end());
  for (int e : dc_fixed_edges(spec, space)) {
    auto it = std::lower_bound(rest.begin(), rest.end(), e);
    if (it == rest.end() || *it != e)
      throw contract_error("tree is missing a fixed group edge; not a family member");
    rest.erase(it);
  }
  std::vector<int> reps = dc_reps(spec);
  std::vector<int> ground = reps;
  std::sort(ground.begin(), ground.end());
  if (rest.size() + 1 != ground.size())
    throw contract_error("tree has the wrong number of spine edges; not a family member");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(spec.n));
  for (int e : rest) {
    auto [a, b] = space.endpoints(e);
    if (!std::binary_search(ground.begin(), ground.end(), a) ||
        !std::binary_search(ground.begin(), ground.end(), b))
      throw contract_error("spine edge leaves the representative set; not a family member");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  HamiltonianPath p;
  p.sequence.reserve(ground.size());
  int prev = -1, cur = reps.front();
  p.sequence.push_back(cur);
  for (std::size_t step = 1; step < ground.size(); ++step) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    int next = -1;
    for (int v : nb)
      if (v != prev) {
        if (next != -1) throw contract_error("spine walk is ambiguous; not a family member");
        next = v;
      }
    if (next == -1) throw contract_error("spine walk ends early; not a family member");
    prev = cur;
    cur = next;
    p.sequence.push_back(cur);
  }
  if (cur != reps.back() || adj[static_cast<std::size_t>(reps.back())].size() != 1)
    throw contract_error("spine walk does not end at V_s's representative; not a family member");
  std::vector<int> visited = p.sequence;
  std::sort(visited.begin(), visited.end());
  if (visited != ground)
    throw contract_error("spine walk does not cover the representatives; not a family member");
  return p;
}

/// The family T_k: one tree per spine ordering with the endpoint roles fixed,
/// i.e. (s-2)! trees, each with maximum degree <= k.
inline VertexSet dc_family(const DegreeFamilySpec& spec) {
  validate_degree_spec(spec);
  std::vector<int> reps = dc_reps(spec);
  std::vector<SpanningTree> trees;
  for (const auto& p : enumerate_hamiltonian_paths(reps, reps.front(), reps.back()))
    trees.push_back(dc_lift(p, spec));
  return make_vertex_set(spec.n, std::move(trees));
}

namespace detail {

/// Ordered partitions of `pool` into `count` groups of size `group_size`,
/// each with every possible representative listed first and the rest sorted.
inline void enumerate_groupings(const std::vector<int>& pool, int count, int group_size,
                                std::vector<std::vector<int>>& current,
                                const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (count == 0) {
    if (pool.empty()) emit(current);
    return;
  }
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + group_size, true);
  do {
    std::vector<int> chosen, rest;
    for (std::size_t i = 0; i < pool.size(); ++i) (pick[i] ? chosen : rest).push_back(pool[i]);
    for (std::size_t rep = 0; rep < chosen.size(); ++rep) {
      std::vector<int> group{chosen[rep]};
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (i != rep) group.push_back(chosen[i]);
      current.push_back(std::move(group));
      enumerate_groupings(rest, count - 1, group_size, current, emit);
      current.pop_back();
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace detail

/// Every valid DegreeFamilySpec on n vertices with degree bound k: all splits
/// of the r leftover vertices into nonempty (V_0, V_{s+1}) with every hub
/// choice, and all ordered spine groupings with every representative choice.
/// Deterministic order.
inline std::vector<DegreeFamilySpec> all_degree_specs(int n, int k) {
  if (k < 2) return {};
  int s = dc_spine_count(n, k);
  if (s < 2) return {};
  int r = n - s * (k - 1);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  std::vector<DegreeFamilySpec> specs;
  for (int a = 1; a <= r - 1; ++a) {
    std::vector<bool> pick_a(all.size(), false);
    std::fill(pick_a.begin(), pick_a.begin() + a, true);
    do {
      std::vector<int> set_a, rest_a;
      for (std::size_t i = 0; i < all.size(); ++i) (pick_a[i] ? set_a : rest_a).push_back(all[i]);
      std::vector<bool> pick_b(rest_a.size(), false);
      std::fill(pick_b.begin(), pick_b.begin() + (r - a), true);
      do {
        std::vector<int> set_b, pool;
        for (std::size_t i = 0; i < rest_a.size(); ++i)
          (pick_b[i] ? set_b : pool).push_back(rest_a[i]);
        for (std::size_t hub_a = 0; hub_a < set_a.size(); ++hub_a)
          for (std::size_t hub_b = 0; hub_b < set_b.size(); ++hub_b) {
            std::vector<int> v0{set_a[hub_a]}, vs1{set_b[hub_b]};
            for (std::size_t i = 0; i < set_a.size(); ++i)
              if (i != hub_a) v0.push_back(set_a[i]);
            for (std::size_t i = 0; i < set_b.size(); ++i)
              if (i != hub_b) vs1.push_back(set_b[i]);
            std::vector<std::vector<int>> groups;
            detail::enumerate_groupings(pool, s, k - 1, groups,
                                        [&](const std::vector<std::vector<int>>& spine) {
                                          DegreeFamilySpec spec;
                                          spec.n = n;
                                          spec.k = k;
                                          spec.spine_groups = spine;
                                          spec.v0_group = v0;
                                          spec.vs1_group = vs1;
                                          specs.push_back(std::move(spec));
                                        });
          }
      } while (std::prev_permutation(pick_b.begin(), pick_b.end()));
    } while (std::prev_permutation(pick_a.begin(), pick_a.end()));
  }
  return specs;
}

}  // namespace treeskel
