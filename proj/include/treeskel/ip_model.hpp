#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "treeskel/enumeration.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/lp.hpp"

namespace treeskel {

/// The variant tag for an optional tree constraint.
inline std::string variant_name(const std::optional<TreeConstraint>& c) {
  if (!c) return "mst";
  if (std::holds_alternative<LeafMax>(*c)) return "lcmst";
  if (std::holds_alternative<LeafMaxInSubset>(*c)) return "rlsmst";
  if (std::holds_alternative<LeavesOnlyIn>(*c)) return "svmst";
  return "dcmst";
}

/// IP formulation over K_n: x-variables indicate edges, and for the
/// leaf-constrained variants y-variables indicate leaves. Rows are the tree
/// cardinality equality sum x_e = n-1, a subtour row sum_{e in E(S)} x_e <=
/// |S|-1 for every subset S with 2 <= |S| <= n-1, then per variant either
/// the leaf rows sum_{e in delta_v} x_e + (n-2) y_v <= n-1 with their
/// cardinality/membership row(s), or the degree rows; every variable is 0/1
/// integral. The repair rows sum_{e in delta_v} x_e >= 2 - y_v make y_v
/// equivalent to "v is a leaf" (the leaf row alone only gives the
/// implication y_v = 1 => deg(v) <= 1), so the cardinality rows actually
/// bound the number of leaves; build without them to study the gap.
struct IPModel {
  int n = 0;
  int d = 0;      // number of x (edge) variables
  int num_y = 0;  // number of y (leaf) variables; 0 unless a leaf variant
  std::string variant;
  std::optional<int> k;
  std::optional<std::set<int>> subset_u;
  bool repair = false;
  int rows_tree = 0, rows_subset = 0, rows_leaf = 0, rows_repair = 0, rows_variant = 0;
  LinearProgram lp{0};

  int num_vars() const { return d + num_y; }
};

inline IPModel build_model(const GraphInstance& g, const std::optional<TreeConstraint>& constraint,
                           bool repair_rows = true) {
  const int n = g.n;
  if (n > 12)
    throw resource_limit_error("IP models carry 2^n - n - 2 subset rows; refusing n > 12");
  if (constraint) validate_constraint(*constraint, n);
  const EdgeSpace& space = g.space();
  const int d = space.dim();

  IPModel m;
  m.n = n;
  m.d = d;
  m.variant = variant_name(constraint);
  const bool leaf_variant = m.variant == "lcmst" || m.variant == "rlsmst" || m.variant == "svmst";
  m.num_y = leaf_variant ? n : 0;
  m.repair = leaf_variant && repair_rows;
  if (constraint) {
    if (const auto* c = std::get_if<LeafMax>(&*constraint)) m.k = c->k;
    if (const auto* c = std::get_if<LeafMaxInSubset>(&*constraint)) {
      m.k = c->k;
      m.subset_u = c->u;
    }
    if (const auto* c = std::get_if<LeavesOnlyIn>(&*constraint)) m.subset_u = c->u;
    if (const auto* c = std::get_if<DegreeMax>(&*constraint)) m.k = c->k;
  }

  const int nv = d + m.num_y;
  LinearProgram lp(nv);
  for (int v = 0; v < nv; ++v) {
    lp.lower[v] = Rational(0);
    lp.upper[v] = Rational(1);
  }

  // Tree cardinality: the points carry exactly n-1 edges.
  {
    RationalVec row(static_cast<std::size_t>(nv), Rational(0));
    for (int e = 0; e < d; ++e) row[static_cast<std::size_t>(e)] = 1;
    lp.add_equality(row, Rational(n - 1));
    m.rows_tree = 1;
  }

  // Subtour rows: no subset S with 2 <= |S| <= n-1 carries |S| edges, in
  // ascending order of the subset bitmask.
  for (unsigned s = 0; s < (1u << n); ++s) {
    int pc = __builtin_popcount(s);
    if (pc < 2 || pc > n - 1) continue;
    RationalVec row(static_cast<std::size_t>(nv), Rational(0));
    for (int e = 0; e < d; ++e) {
      auto [a, b] = space.endpoints(e);
      if ((s >> a & 1) && (s >> b & 1)) row[static_cast<std::size_t>(e)] = 1;
    }
    lp.add_inequality(row, Rational(pc - 1));
    ++m.rows_subset;
  }

  auto incident_row = [&](int v) {
    RationalVec row(static_cast<std::size_t>(nv), Rational(0));
    for (int e = 0; e < d; ++e) {
      auto [a, b] = space.endpoints(e);
      if (a == v || b == v) row[static_cast<std::size_t>(e)] = 1;
    }
    return row;
  };

  if (leaf_variant) {
    // Leaf rows: sum_{e in delta_v} x_e + (|delta_v| - 1) y_v <= |delta_v|
    // with |delta_v| = n-1 in K_n, plus the repair rows when requested.
    for (int v = 0; v < n; ++v) {
      RationalVec row = incident_row(v);
      row[static_cast<std::size_t>(d + v)] = n - 2;
      lp.add_inequality(row, Rational(n - 1));
      ++m.rows_leaf;
    }
    if (m.repair) {
      for (int v = 0; v < n; ++v) {
        RationalVec row = incident_row(v);
        row[static_cast<std::size_t>(d + v)] = 1;
        lp.add_ge_inequality(row, Rational(2));
        ++m.rows_repair;
      }
    }
    if (m.variant == "lcmst") {
      RationalVec row(static_cast<std::size_t>(nv), Rational(0));
      for (int v = 0; v < n; ++v) row[static_cast<std::size_t>(d + v)] = 1;
      lp.add_inequality(row, Rational(*m.k));
      ++m.rows_variant;
    } else if (m.variant == "rlsmst") {
      RationalVec row(static_cast<std::size_t>(nv), Rational(0));
      for (int v : *m.subset_u) row[static_cast<std::size_t>(d + v)] = 1;
      lp.add_inequality(row, Rational(*m.k));
      ++m.rows_variant;
    } else {  // svmst: y_v = 0 outside U
      for (int v = 0; v < n; ++v) {
        if (m.subset_u->count(v)) continue;
        RationalVec row(static_cast<std::size_t>(nv), Rational(0));
        row[static_cast<std::size_t>(d + v)] = 1;
        lp.add_equality(row, Rational(0));
        ++m.rows_variant;
      }
    }
  } else if (m.variant == "dcmst") {
    for (int v = 0; v < n; ++v) {
      lp.add_inequality(incident_row(v), Rational(*m.k));
      ++m.rows_variant;
    }
  }

  lp.objective = RationalVec(static_cast<std::size_t>(nv), Rational(0));
  for (int e = 0; e < d; ++e) (*lp.objective)[static_cast<std::size_t>(e)] = g.weights[static_cast<std::size_t>(e)];
  m.lp = std::move(lp);
  return m;
}

}  // namespace treeskel
