// Independent test oracles. Each one recomputes a quantity by a method
// unrelated to the implementation under test (brute force, textbook
// algorithm, or closed form) so the suite can cross-check results.
#pragma once

#include <algorithm>
#include <bitset>
#include <optional>
#include <vector>

#include "treeskel/edge_space.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/lp.hpp"
#include "treeskel/rational.hpp"
#include "treeskel/spanning_tree.hpp"

namespace oracle {

using treeskel::LinearProgram;
using treeskel::Rational;
using treeskel::RationalVec;

// Solves the square rational system A x = b by Gaussian elimination.
// Returns nullopt when A is singular.
inline std::optional<RationalVec> solve_square(std::vector<RationalVec> a, RationalVec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational p = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] /= p;
    b[col] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Brute-force LP optimum by vertex enumeration: every choice of num_vars
// constraints taken tight whose system is nonsingular yields a candidate
// point; the optimum is the best feasible candidate. Only valid for LPs
// whose optimum is attained at a vertex (bounded, pointed), which all test
// problems satisfy. Returns nullopt when no feasible vertex exists.
inline std::optional<Rational> brute_force_min(const LinearProgram& lp) {
  const std::size_t n = static_cast<std::size_t>(lp.num_vars);
  struct Con {
    RationalVec a;
    Rational b;
    bool eq;
  };
  std::vector<Con> cons;
  auto pad = [&](RationalVec v) {
    v.resize(n, Rational(0));
    return v;
  };
  for (const auto& r : lp.equalities) cons.push_back({pad(r.coeffs), r.rhs, true});
  for (const auto& r : lp.inequalities) cons.push_back({pad(r.coeffs), r.rhs, false});
  for (std::size_t j = 0; j < n; ++j) {
    if (j < lp.lower.size() && lp.lower[j]) {
      RationalVec a(n, Rational(0));
      a[j] = -1;
      cons.push_back({a, -*lp.lower[j], false});
    }
    if (j < lp.upper.size() && lp.upper[j]) {
      RationalVec a(n, Rational(0));
      a[j] = 1;
      cons.push_back({a, *lp.upper[j], false});
    }
  }

  auto violates = [&](const RationalVec& x) {
    for (const auto& c : cons) {
      const Rational lhs = treeskel::dot(c.a, x);
      if (c.eq ? lhs != c.b : lhs > c.b) return true;
    }
    return false;
  };

  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  auto consider = [&]() {
    std::vector<RationalVec> a;
    RationalVec b;
    for (std::size_t i : pick) {
      a.push_back(cons[i].a);
      b.push_back(cons[i].b);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x || violates(*x)) return;
    const Rational val = lp.objective ? treeskel::dot(pad(*lp.objective), *x) : Rational(0);
    if (!best || val < *best) best = val;
  };
  // Enumerate all size-n subsets of constraints.
  std::vector<std::size_t> idx(cons.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (cons.size() < n) return std::nullopt;
  std::vector<bool> mask(cons.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < cons.size(); ++i)
      if (mask[i]) pick[k++] = i;
    consider();
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

// Checks that a point satisfies every constraint of the LP exactly.
inline bool satisfies_all(const LinearProgram& lp, const RationalVec& x) {
  if (x.size() != static_cast<std::size_t>(lp.num_vars)) return false;
  auto pad = [&](RationalVec v) {
    v.resize(x.size(), Rational(0));
    return v;
  };
  for (const auto& r : lp.equalities)
    if (treeskel::dot(pad(r.coeffs), x) != r.rhs) return false;
  for (const auto& r : lp.inequalities)
    if (treeskel::dot(pad(r.coeffs), x) > r.rhs) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j < lp.lower.size() && lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (j < lp.upper.size() && lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  return true;
}

// Textbook Kruskal on K_n: sorts edges by (weight, index) and greedily adds
// acyclic edges. Unique optimum weight; deterministic tree.
inline treeskel::SpanningTree kruskal(const treeskel::GraphInstance& g) {
  const treeskel::EdgeSpace space(g.n);
  std::vector<int> order(static_cast<std::size_t>(space.dim()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.weights[static_cast<std::size_t>(a)] < g.weights[static_cast<std::size_t>(b)];
  });
  treeskel::detail::DisjointSet dsu(g.n);
  treeskel::SpanningTree t;
  for (int e : order) {
    auto [i, j] = space.endpoints(e);
    if (dsu.unite(i, j)) t.edges.push_back(e);
    if (static_cast<int>(t.edges.size()) == g.n - 1) break;
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

// Lexicographically smallest clique of the given size, by scanning all
// size-k vertex subsets in lexicographic order. Small graphs only.
inline std::optional<std::vector<int>> lex_min_clique(const std::vector<std::vector<bool>>& adj,
                                                      int k) {
  const int n = static_cast<int>(adj.size());
  if (k == 0) return std::vector<int>{};
  if (k > n) return std::nullopt;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  for (;;) {
    bool ok = true;
    for (std::size_t a = 0; a < comb.size() && ok; ++a)
      for (std::size_t b = a + 1; b < comb.size() && ok; ++b)
        if (!adj[static_cast<std::size_t>(comb[a])][static_cast<std::size_t>(comb[b])]) ok = false;
    if (ok) return comb;
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Maximum clique by scanning all vertex subsets (graphs up to 20 vertices).
// adjacency[i] is a bitset row. Returns the clique size.
inline int clique_subset_scan(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) verts.push_back(v);
    if (static_cast<int>(verts.size()) <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < verts.size() && ok; ++a)
      for (std::size_t b = a + 1; b < verts.size() && ok; ++b)
        if (!adj[static_cast<std::size_t>(verts[a])][static_cast<std::size_t>(verts[b])]) ok = false;
    if (ok) best = static_cast<int>(verts.size());
  }
  return best;
}

}  // namespace oracle
