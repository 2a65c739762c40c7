#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "treeskel/edge_space.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/rational.hpp"
#include "treeskel/spanning_tree.hpp"

namespace treeskel {

/// A complete edge-weighted graph K_n with exact rational weights and an
/// optional distinguished vertex subset U. Weights are indexed by EdgeSpace.
struct GraphInstance {
  int n = 0;
  RationalVec weights;                       // exactly n*(n-1)/2 entries
  std::optional<std::set<int>> subset_u;

  EdgeSpace space() const { return EdgeSpace(n); }

  Rational tree_weight(const SpanningTree& t) const {
    Rational w = 0;
    for (int e : t.edges) w += weights[static_cast<std::size_t>(e)];
    return w;
  }
};

inline GraphInstance make_unit_instance(int n, std::optional<std::set<int>> u = std::nullopt) {
  EdgeSpace space(n);
  GraphInstance g;
  g.n = n;
  g.weights.assign(static_cast<std::size_t>(space.dim()), Rational(1));
  g.subset_u = std::move(u);
  return g;
}

// Deterministic generator used by the CLI and the verification suites:
// weights p/q with p in [1,100], q in [1,10], drawn from a splitmix-style
// stream so results do not depend on the standard library's distributions.
inline GraphInstance make_random_instance(int n, std::uint64_t seed,
                                          std::optional<std::set<int>> u = std::nullopt) {
  EdgeSpace space(n);
  GraphInstance g;
  g.n = n;
  g.subset_u = std::move(u);
  std::uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  g.weights.reserve(static_cast<std::size_t>(space.dim()));
  for (int e = 0; e < space.dim(); ++e) {
    long p = 1 + static_cast<long>(next() % 100);
    long q = 1 + static_cast<long>(next() % 10);
    Rational w(p, q);
    w.canonicalize();
    g.weights.push_back(w);
  }
  return g;
}

/// Parses the instance JSON format:
///   {"n": 4, "weights": [[0,1,"3/2"], [0,2,1], ...], "subset": [0,1]}
/// All d edges must appear exactly once; duplicates, out-of-range vertices
/// and malformed weights are rejected.
inline GraphInstance graph_from_json(const nlohmann::json& j) try {
  if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
    throw io_error("instance JSON requires fields 'n' and 'weights'");
  GraphInstance g;
  g.n = j.at("n").get<int>();
  if (g.n < 2) throw io_error("instance requires n >= 2");
  EdgeSpace space(g.n);
  g.weights.assign(static_cast<std::size_t>(space.dim()), Rational(0));
  std::vector<bool> seen(static_cast<std::size_t>(space.dim()), false);
  for (const auto& entry : j.at("weights")) {
    if (!entry.is_array() || entry.size() != 3) throw io_error("weight entry must be [i, j, w]");
    int i = entry.at(0).get<int>();
    int k = entry.at(1).get<int>();
    if (i < 0 || k < 0 || i >= g.n || k >= g.n || i == k)
      throw io_error("weight entry has out-of-range endpoints");
    int idx = space.index(i, k);
    if (seen[static_cast<std::size_t>(idx)]) throw io_error("duplicate weight for edge");
    seen[static_cast<std::size_t>(idx)] = true;
    const auto& w = entry.at(2);
    if (w.is_number_integer())
      g.weights[static_cast<std::size_t>(idx)] = Rational(w.get<long>());
    else if (w.is_string())
      g.weights[static_cast<std::size_t>(idx)] = parse_rational(w.get<std::string>());
    else
      throw io_error("weight must be an integer or a rational string \"p/q\"");
  }
  for (bool s : seen)
    if (!s) throw io_error("instance must list all edges of the complete graph");
  if (j.contains("subset")) {
    std::set<int> u;
    for (const auto& v : j.at("subset")) {
      int x = v.get<int>();
      if (x < 0 || x >= g.n) throw io_error("subset vertex out of range");
      u.insert(x);
    }
    g.subset_u = std::move(u);
  }
  return g;
} catch (const nlohmann::json::exception& e) {
  throw io_error(std::string("malformed instance JSON: ") + e.what());
} catch (const std::invalid_argument& e) {
  throw io_error(std::string("malformed instance JSON: ") + e.what());
}

inline nlohmann::json graph_to_json(const GraphInstance& g) {
  EdgeSpace space(g.n);
  nlohmann::json j;
  j["n"] = g.n;
  auto& w = j["weights"] = nlohmann::json::array();
  for (int e = 0; e < space.dim(); ++e) {
    auto [i, k] = space.endpoints(e);
    w.push_back({i, k, to_string(g.weights[static_cast<std::size_t>(e)])});
  }
  if (g.subset_u) j["subset"] = *g.subset_u;
  return j;
}

}  // namespace treeskel
