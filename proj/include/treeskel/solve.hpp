#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeskel/char_vector.hpp"
#include "treeskel/enumeration.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/ip_model.hpp"

namespace treeskel {

struct Solution {
  SpanningTree tree;
  Rational weight;
  long long node_count = 0;  // LP relaxations solved; 0 for the enumeration oracle
  std::string method;
};

/// Ground-truth oracle: minimum weight over the filtered spanning-tree family,
/// ties broken by lexicographically smallest edge set (the enumeration is
/// lex-sorted, so the first minimum wins). Empty family -> nullopt.
inline std::optional<Solution> solve_enumerate(const GraphInstance& g,
                                               const std::optional<TreeConstraint>& constraint,
                                               int cap = kDefaultEnumerationCap) {
  std::vector<SpanningTree> trees = enumerate_spanning_trees(g, cap);
  if (constraint) trees = filter_family(trees, *constraint, g.n);
  if (trees.empty()) return std::nullopt;
  const SpanningTree* best = nullptr;
  Rational best_weight;
  for (const auto& t : trees) {
    Rational wt = g.tree_weight(t);
    if (!best || wt < best_weight) {
      best = &t;
      best_weight = wt;
    }
  }
  return Solution{*best, best_weight, 0, "enumerate"};
}

namespace detail {

struct BnbState {
  const GraphInstance* g = nullptr;
  const std::optional<TreeConstraint>* constraint = nullptr;
  IPModel model;
  SimplexOptions sopt;
  std::optional<Rational> incumbent_weight;
  SpanningTree incumbent_tree;
  long long nodes = 0;
};

inline void bnb_expand(BnbState& st, const OptResult& node) {
  if (st.incumbent_weight && node.value >= *st.incumbent_weight) return;

  // Most-fractional branching variable: x_e closest to 1/2, ties by lowest
  // edge index.
  const Rational half = make_rational(1, 2);
  int branch = -1;
  Rational best_dist;
  for (int e = 0; e < st.model.d; ++e) {
    const Rational& x = node.point[static_cast<std::size_t>(e)];
    if (x == 0 || x == 1) continue;
    Rational dist = abs(Rational(x - half));
    if (branch == -1 || dist < best_dist) {
      branch = e;
      best_dist = dist;
    }
  }

  if (branch == -1) {
    // Integral x: the tree-cardinality and subtour rows make it a spanning
    // tree, and LP feasibility of the y rows certifies the variant constraint (leaves
    // force y_v = 1 under the repair rows). Both are re-checked defensively.
    SpanningTree t;
    for (int e = 0; e < st.model.d; ++e)
      if (node.point[static_cast<std::size_t>(e)] == 1) t.edges.push_back(e);
    const EdgeSpace& space = st.g->space();
    check_spanning_tree(t, space);
    if (*st.constraint && !satisfies(t, space, **st.constraint))
      throw contract_error("branch-and-bound incumbent violates the variant constraint (expected "
                           "only when the repair rows were disabled)");
    if (!st.incumbent_weight || node.value < *st.incumbent_weight) {
      st.incumbent_weight = node.value;
      st.incumbent_tree = std::move(t);
    }
    return;
  }

  struct Child {
    Rational fix;
    OptResult res;
  };
  std::vector<Child> children;
  auto& lo = st.model.lp.lower[static_cast<std::size_t>(branch)];
  auto& hi = st.model.lp.upper[static_cast<std::size_t>(branch)];
  const auto saved_lo = lo, saved_hi = hi;
  for (int val = 0; val <= 1; ++val) {
    lo = Rational(val);
    hi = Rational(val);
    OptResult r = optimize(st.model.lp, st.sopt);
    ++st.nodes;
    if (r.status == OptStatus::Optimal) children.push_back({Rational(val), std::move(r)});
  }
  // Depth-first with the better LP bound first; equal bounds explore the
  // x_e = 0 child first (the children are generated in that order, and the
  // sort is stable).
  std::stable_sort(children.begin(), children.end(),
                   [](const Child& a, const Child& b) { return a.res.value < b.res.value; });
  for (const auto& child : children) {
    lo = child.fix;
    hi = child.fix;
    bnb_expand(st, child.res);
  }
  lo = saved_lo;
  hi = saved_hi;
}

}  // namespace detail

/// Exact branch and bound over the IP model: depth-first, bounding by the
/// exact LP relaxation with the full subset-row set, branching on the most
/// fractional edge variable. Matches solve_enumerate in optimal weight;
/// nullopt when the model is integer-infeasible.
inline std::optional<Solution> solve_bnb(const GraphInstance& g,
                                         const std::optional<TreeConstraint>& constraint,
                                         bool repair_rows = true, const SimplexOptions& sopt = {}) {
  detail::BnbState st;
  st.g = &g;
  st.constraint = &constraint;
  st.model = build_model(g, constraint, repair_rows);
  st.sopt = sopt;
  OptResult root = optimize(st.model.lp, st.sopt);
  ++st.nodes;
  if (root.status == OptStatus::Optimal) detail::bnb_expand(st, root);
  if (!st.incumbent_weight) return std::nullopt;
  return Solution{std::move(st.incumbent_tree), *st.incumbent_weight, st.nodes, "bnb"};
}

/// Result of exhaustively comparing the model's 0/1 x-projection with the
/// variant's combinatorial tree family.
struct FeasibleSetReport {
  std::string variant;
  int n = 0;
  bool repair = false;
  long long assignments_scanned = 0;  // (x, y) pairs whose rows were evaluated
  std::vector<std::uint64_t> model_x;   // feasible x projections, ascending masks
  std::vector<std::uint64_t> family_x;  // tree family masks, ascending
  std::vector<std::uint64_t> extra_x;   // model \ family
  std::vector<std::uint64_t> missing_x; // family \ model
  bool exact_match = false;
};

/// Enumerate all 0/1 assignments to (x, y), keep those satisfying every model
/// row, project to x, and compare with the char vectors of the trees that
/// satisfy the variant's constraint. x masks violating the tree-cardinality
/// row are rejected by popcount, which is that row's exact 0/1 evaluation.
inline FeasibleSetReport model_feasible_set_check(const GraphInstance& g,
                                                  const std::optional<TreeConstraint>& constraint,
                                                  bool repair_rows = true) {
  if (g.n > 6)
    throw resource_limit_error("model_feasible_set_check scans 2^(d+n) assignments; refusing n > 6");
  IPModel m = build_model(g, constraint, repair_rows);
  const int d = m.d, ny = m.num_y;

  // Rows with integer coefficients, split into pure-x rows (all coefficients
  // 0/1 by construction: evaluated as popcount of a mask) and rows touching y.
  struct IntRow {
    std::vector<long long> coeffs;
    long long rhs = 0;
    bool eq = false;
  };
  std::vector<std::uint64_t> x_masks;   // pure-x <= rows
  std::vector<long long> x_rhs;
  std::vector<IntRow> mixed;
  auto to_ll = [](const Rational& r) {
    if (!is_integer(r)) throw contract_error("model row coefficient is not integral");
    return static_cast<long long>(mpz_get_si(r.get_num_mpz_t()));
  };
  auto classify = [&](const LinearProgram::Row& row, bool eq) {
    bool pure_x = !eq;
    for (int v = d; pure_x && v < d + ny; ++v)
      if (row.coeffs[static_cast<std::size_t>(v)] != 0) pure_x = false;
    if (pure_x) {
      std::uint64_t mask = 0;
      for (int e = 0; e < d; ++e) {
        const Rational& c = row.coeffs[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        if (c != 1) {
          pure_x = false;
          break;
        }
        mask |= 1ULL << e;
      }
      if (pure_x) {
        x_masks.push_back(mask);
        x_rhs.push_back(to_ll(row.rhs));
        return;
      }
    }
    IntRow ir;
    ir.eq = eq;
    ir.rhs = to_ll(row.rhs);
    for (int v = 0; v < d + ny; ++v) ir.coeffs.push_back(to_ll(row.coeffs[static_cast<std::size_t>(v)]));
    mixed.push_back(std::move(ir));
  };
  for (const auto& row : m.lp.inequalities) classify(row, false);
  // The tree-cardinality row is handled by the popcount filter below; other equalities
  // (the svmst y_v = 0 rows) go through the generic path.
  for (std::size_t i = 1; i < m.lp.equalities.size(); ++i) classify(m.lp.equalities[i], true);

  FeasibleSetReport rep;
  rep.variant = m.variant;
  rep.n = g.n;
  rep.repair = m.repair;

  for (std::uint64_t x = 0; x < (1ULL << d); ++x) {
    if (__builtin_popcountll(x) != g.n - 1) continue;  // tree-cardinality row
    bool ok = true;
    for (std::size_t i = 0; ok && i < x_masks.size(); ++i)
      if (__builtin_popcountll(x_masks[i] & x) > x_rhs[i]) ok = false;
    if (!ok) {
      ++rep.assignments_scanned;
      continue;
    }
    bool exists_y = false;
    for (std::uint64_t y = 0; !exists_y && y < (1ULL << ny); ++y) {
      ++rep.assignments_scanned;
      bool feas = true;
      for (const auto& row : mixed) {
        long long lhs = 0;
        for (int v = 0; v < d; ++v)
          if (x >> v & 1) lhs += row.coeffs[static_cast<std::size_t>(v)];
        for (int v = 0; v < ny; ++v)
          if (y >> v & 1) lhs += row.coeffs[static_cast<std::size_t>(d + v)];
        if (row.eq ? lhs != row.rhs : lhs > row.rhs) {
          feas = false;
          break;
        }
      }
      if (feas) exists_y = true;
    }
    if (exists_y) rep.model_x.push_back(x);
  }

  std::vector<SpanningTree> trees = enumerate_spanning_trees(g);
  if (constraint) trees = filter_family(trees, *constraint, g.n);
  const EdgeSpace& space = g.space();
  for (const auto& t : trees) rep.family_x.push_back(edge_mask(t, space));
  std::sort(rep.family_x.begin(), rep.family_x.end());
  std::sort(rep.model_x.begin(), rep.model_x.end());
  std::set_difference(rep.model_x.begin(), rep.model_x.end(), rep.family_x.begin(),
                      rep.family_x.end(), std::back_inserter(rep.extra_x));
  std::set_difference(rep.family_x.begin(), rep.family_x.end(), rep.model_x.begin(),
                      rep.model_x.end(), std::back_inserter(rep.missing_x));
  rep.exact_match = rep.extra_x.empty() && rep.missing_x.empty();
  return rep;
}

}  // namespace treeskel
