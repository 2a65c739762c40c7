#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "treeskel/adjacency.hpp"
#include "treeskel/enumeration.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/families.hpp"

namespace treeskel {

/// Undirected graph on polytope vertices, adjacency stored as bitset rows.
struct SkeletonGraph {
  int nv = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  explicit SkeletonGraph(int vertices = 0)
      : nv(vertices),
        rows(static_cast<std::size_t>(vertices),
             std::vector<std::uint64_t>((static_cast<std::size_t>(vertices) + 63) / 64, 0)) {}

  void add_edge(int i, int j) {
    rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] |= 1ULL << (j % 64);
    rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) / 64] |= 1ULL << (i % 64);
  }
  bool adjacent(int i, int j) const {
    return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] >> (j % 64) & 1;
  }
  int degree(int i) const {
    int d = 0;
    for (std::uint64_t w : rows[static_cast<std::size_t>(i)]) d += std::popcount(w);
    return d;
  }
  long num_edges() const {
    long total = 0;
    for (int i = 0; i < nv; ++i) total += degree(i);
    return total / 2;
  }
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }
};

struct SkeletonOptions {
  AdjacencyMethod method = AdjacencyMethod::Auto;
  std::uint64_t pair_budget = 2'000'000;  // vertex pairs, not skeleton edges
  int threads = 1;
  SimplexOptions simplex;
};

struct SkeletonBuildInfo {
  AdjacencyMethod method_used = AdjacencyMethod::Lp;
  std::uint64_t pairs_checked = 0;
  long wall_time_ms = 0;
};

inline const char* method_name(AdjacencyMethod m) {
  switch (m) {
    case AdjacencyMethod::Lp: return "lp";
    case AdjacencyMethod::Swap: return "swap";
    default: return "auto";
  }
}

/// Builds the 1-skeleton of conv(vs) by testing every vertex pair with the
/// requested adjacency procedure. Auto resolves to the edge-exchange rule
/// exactly when vs is the complete spanning-tree family of K_n (checked
/// against the closed-form tree count), and to the exact LP test otherwise.
/// Deterministic for any thread count.
inline SkeletonGraph build_skeleton(const VertexSet& vs, const SkeletonOptions& opt = {},
                                    SkeletonBuildInfo* info = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  const int m = vs.size();
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m > 0 ? m - 1 : 0) / 2;
  if (pairs > opt.pair_budget)
    throw resource_limit_error("skeleton needs " + std::to_string(pairs) +
                               " pair checks, budget is " + std::to_string(opt.pair_budget));

  const bool full_family =
      Integer(m) == count_spanning_trees(vs.n);
  const AdjacencyMethod method = resolve_method(opt.method, full_family);
  if (method == AdjacencyMethod::Swap && !full_family)
    throw std::invalid_argument(
        "edge-exchange adjacency requested for a constrained family; it is only valid for "
        "the full spanning-tree polytope");

  std::vector<std::pair<int, int>> pair_list;
  pair_list.reserve(static_cast<std::size_t>(pairs));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pair_list.emplace_back(i, j);
  std::vector<std::uint8_t> adj(pair_list.size(), 0);

  const int threads = std::max(1, opt.threads);
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p)
      adj[p] = vertices_adjacent(vs, pair_list[p].first, pair_list[p].second, method,
                                 opt.simplex)
                   ? 1
                   : 0;
  };
  if (threads == 1 || pair_list.size() < 2) {
    worker(0, pair_list.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pair_list.size() + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      const std::size_t b = static_cast<std::size_t>(t) * chunk;
      const std::size_t e = std::min(pair_list.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }

  SkeletonGraph g(m);
  for (std::size_t p = 0; p < pair_list.size(); ++p)
    if (adj[p]) g.add_edge(pair_list[p].first, pair_list[p].second);

  if (info) {
    info->method_used = method;
    info->pairs_checked = pairs;
    info->wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  }
  return g;
}

/// Graphviz rendering; vertices are labelled by their trees' edge labels.
inline std::string skeleton_to_dot(const SkeletonGraph& g, const VertexSet& vs) {
  EdgeSpace space(vs.n);
  std::string out = "graph skeleton {\n";
  for (int i = 0; i < g.nv; ++i)
    out += "  \"" + tree_label(vs.trees[static_cast<std::size_t>(i)], space) + "\";\n";
  for (auto [i, j] : g.edge_list())
    out += "  \"" + tree_label(vs.trees[static_cast<std::size_t>(i)], space) + "\" -- \"" +
           tree_label(vs.trees[static_cast<std::size_t>(j)], space) + "\";\n";
  out += "}\n";
  return out;
}

inline nlohmann::json skeleton_to_json(const SkeletonGraph& g, const VertexSet& vs,
                                       const FamilySpec& fam, const SkeletonBuildInfo& info) {
  EdgeSpace space(vs.n);
  nlohmann::json j;
  j["family"] = fam.family;
  j["n"] = fam.n;
  if (fam.family == "lcmst" || fam.family == "rlsmst" || fam.family == "dcmst") j["k"] = fam.k;
  if (fam.u) j["subset"] = *fam.u;
  j["oracle"] = method_name(info.method_used);
  j["pairs_checked"] = info.pairs_checked;
  j["wall_time_ms"] = info.wall_time_ms;
  j["num_vertices"] = g.nv;
  j["num_edges"] = g.num_edges();
  auto& labels = j["labels"] = nlohmann::json::array();
  for (const auto& t : vs.trees) labels.push_back(tree_label(t, space));
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edge_list()) edges.push_back({a, b});
  return j;
}

}  // namespace treeskel
