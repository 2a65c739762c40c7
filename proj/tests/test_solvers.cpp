#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "treeskel/enumeration.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/ip_model.hpp"
#include "treeskel/solve.hpp"

using namespace treeskel;

namespace {

// Weight of the optimum over the enumerated family, or nullopt if empty.
std::optional<Rational> brute_optimum(const GraphInstance& g,
                                      const std::optional<TreeConstraint>& c) {
  std::vector<SpanningTree> trees = enumerate_spanning_trees(g.n);
  if (c) trees = filter_family(trees, *c, g.n);
  std::optional<Rational> best;
  for (const auto& t : trees) {
    Rational w = g.tree_weight(t);
    if (!best || w < *best) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("ip model shapes", "[solvers]") {
  GraphInstance g = make_unit_instance(4);

  IPModel mst = build_model(g, std::nullopt);
  CHECK(mst.variant == "mst");
  CHECK(mst.num_vars() == 6);
  CHECK(mst.num_y == 0);
  CHECK(mst.lp.equalities.size() == 1);     // cardinality row
  CHECK(mst.lp.inequalities.size() == 10);  // all proper subsets of size 2 or 3
  CHECK(mst.rows_subset == 10);

  IPModel lc = build_model(g, TreeConstraint{LeafMax{2}});
  CHECK(lc.variant == "lcmst");
  CHECK(lc.num_vars() == 10);  // 6 edge + 4 leaf indicators
  CHECK(lc.rows_leaf == 4);
  CHECK(lc.rows_repair == 4);
  CHECK(lc.rows_variant == 1);
  CHECK(lc.lp.inequalities.size() == 19);

  IPModel lc_bare = build_model(g, TreeConstraint{LeafMax{2}}, false);
  CHECK(lc_bare.rows_repair == 0);
  CHECK(lc_bare.lp.inequalities.size() == 15);

  g.subset_u = std::set<int>{0, 1, 2};
  IPModel rl = build_model(g, TreeConstraint{LeafMaxInSubset{{0, 1, 2}, 2}});
  CHECK(rl.variant == "rlsmst");
  CHECK(rl.lp.inequalities.size() == 19);

  IPModel sv = build_model(g, TreeConstraint{LeavesOnlyIn{{0, 1, 2}}});
  CHECK(sv.variant == "svmst");
  CHECK(sv.lp.equalities.size() == 2);  // cardinality plus y_3 = 0
  CHECK(sv.rows_variant == 1);

  IPModel dc = build_model(g, TreeConstraint{DegreeMax{2}});
  CHECK(dc.variant == "dcmst");
  CHECK(dc.num_y == 0);
  CHECK(dc.rows_variant == 4);  // one degree row per vertex
  CHECK(dc.lp.inequalities.size() == 14);

  CHECK_THROWS_AS(build_model(make_unit_instance(13), std::nullopt), resource_limit_error);
}

TEST_CASE("enumeration solver on worked instances", "[solvers]") {
  GraphInstance unit = make_unit_instance(4);

  // Unit weights, degree bound 2: every hamiltonian path weighs 3; ties are
  // broken toward the lexicographically smallest edge-index set, here the
  // path 2-0-1-3.
  auto dc = solve_enumerate(unit, TreeConstraint{DegreeMax{2}});
  REQUIRE(dc.has_value());
  CHECK(dc->weight == 3);
  CHECK(dc->tree.edges == std::vector<int>{0, 1, 4});
  CHECK(dc->method == "enumerate");

  // Cheap path edges force the unique optimum 0-1-2-3.
  GraphInstance g = unit;
  for (auto& w : g.weights) w = 10;
  g.weights[0] = g.weights[3] = g.weights[5] = 1;  // (0,1), (1,2), (2,3)
  auto lc = solve_enumerate(g, TreeConstraint{LeafMax{2}});
  REQUIRE(lc.has_value());
  CHECK(lc->weight == 3);
  CHECK(lc->tree.edges == std::vector<int>{0, 3, 5});

  // Unconstrained: the star at vertex 0 is the lexicographic minimum.
  auto mst = solve_enumerate(unit, std::nullopt);
  REQUIRE(mst.has_value());
  CHECK(mst->weight == 3);
  CHECK(mst->tree.edges == std::vector<int>{0, 1, 2});

  // Every tree on 4 vertices has at least two leaves, and they cannot all
  // live in {0}: infeasible.
  CHECK_FALSE(solve_enumerate(unit, TreeConstraint{LeavesOnlyIn{{0}}}).has_value());
}

TEST_CASE("branch and bound matches enumeration on worked instances", "[solvers]") {
  GraphInstance unit = make_unit_instance(4);
  GraphInstance g = unit;
  for (auto& w : g.weights) w = 10;
  g.weights[0] = g.weights[3] = g.weights[5] = 1;

  std::vector<std::optional<TreeConstraint>> cs;
  cs.push_back(std::nullopt);
  cs.push_back(TreeConstraint{LeafMax{2}});
  cs.push_back(TreeConstraint{DegreeMax{2}});
  for (const auto& c : cs) {
    auto e = solve_enumerate(g, c);
    auto b = solve_bnb(g, c);
    REQUIRE(e.has_value());
    REQUIRE(b.has_value());
    CHECK(e->weight == b->weight);
    CHECK(b->method == "bnb");
    CHECK(b->node_count >= 1);
  }

  auto b = solve_bnb(unit, TreeConstraint{LeavesOnlyIn{{0}}});
  CHECK_FALSE(b.has_value());
}

TEST_CASE("branch and bound explores a fractional root", "[solvers]") {
  // A frozen instance whose root relaxation is fractional, so the solver has
  // to branch: two child relaxations plus the root.
  GraphInstance g = make_random_instance(6, 10);
  auto b = solve_bnb(g, TreeConstraint{LeafMax{2}});
  REQUIRE(b.has_value());
  CHECK(b->weight == make_rational(8867, 280));
  CHECK(b->node_count == 3);
  auto e = solve_enumerate(g, TreeConstraint{LeafMax{2}});
  CHECK(e->weight == b->weight);
  // Determinism: the run is a pure function of the instance.
  auto b2 = solve_bnb(g, TreeConstraint{LeafMax{2}});
  CHECK(b2->node_count == 3);
  CHECK(b2->tree == b->tree);
}

TEST_CASE("unconstrained solver agrees with the greedy oracle", "[solvers]") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    for (int n : {4, 5, 6}) {
      GraphInstance g = make_random_instance(n, seed);
      SpanningTree greedy = oracle::kruskal(g);
      auto e = solve_enumerate(g, std::nullopt);
      auto b = solve_bnb(g, std::nullopt);
      REQUIRE(e.has_value());
      REQUIRE(b.has_value());
      CHECK(e->weight == g.tree_weight(greedy));
      CHECK(b->weight == g.tree_weight(greedy));
    }
}

TEST_CASE("solver equivalence on seeded instances of every variant", "[solvers]") {
  // A scaled-down version of the acceptance sweep: both solvers must agree
  // on value and feasibility across all five variants.
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (int n : {4, 5, 6}) {
      GraphInstance g = make_random_instance(n, seed);
      std::vector<std::optional<TreeConstraint>> cs;
      cs.push_back(std::nullopt);
      cs.push_back(TreeConstraint{LeafMax{2}});
      cs.push_back(TreeConstraint{LeafMaxInSubset{{0, 1, 2}, 2}});
      cs.push_back(TreeConstraint{LeavesOnlyIn{{0, 1, 2}}});
      cs.push_back(TreeConstraint{DegreeMax{2}});
      for (const auto& c : cs) {
        auto e = solve_enumerate(g, c);
        auto b = solve_bnb(g, c);
        REQUIRE(e.has_value() == b.has_value());
        if (e) {
          CHECK(e->weight == b->weight);
          CHECK((!c || satisfies(b->tree, g.space(), *c)));
        }
        CHECK(brute_optimum(g, c) == (e ? std::optional<Rational>(e->weight) : std::nullopt));
      }
    }
}

TEST_CASE("tightening the constraint never improves the optimum", "[solvers]") {
  for (std::uint64_t seed = 30; seed <= 34; ++seed) {
    GraphInstance g = make_random_instance(6, seed);
    auto mst = solve_bnb(g, std::nullopt);
    REQUIRE(mst.has_value());
    Rational prev = mst->weight;
    // DCMST: k = 5 equals the unconstrained optimum; smaller k only grows.
    for (int k = 5; k >= 2; --k) {
      auto s = solve_bnb(g, TreeConstraint{DegreeMax{k}});
      REQUIRE(s.has_value());
      CHECK(s->weight >= prev);
      if (k == 5) CHECK(s->weight == mst->weight);
      prev = s->weight;
    }
    // LCMST: more allowed leaves can only help.
    prev = mst->weight;
    for (int k = 5; k >= 2; --k) {
      auto s = solve_bnb(g, TreeConstraint{LeafMax{k}});
      REQUIRE(s.has_value());
      CHECK(s->weight >= prev);
      prev = s->weight;
    }
  }
}

TEST_CASE("feasible set scan: models carve out exactly the right trees", "[solvers]") {
  GraphInstance g4 = make_unit_instance(4);

  FeasibleSetReport lc = model_feasible_set_check(g4, TreeConstraint{LeafMax{2}}, true);
  CHECK(lc.variant == "lcmst");
  CHECK(lc.family_x.size() == 12);  // the hamiltonian paths of K_4
  CHECK(lc.model_x.size() == 12);
  CHECK(lc.exact_match);

  // Without the repair rows the relaxed leaf indicators admit the 4 stars:
  // the center's indicator is forced off, but a leaf's indicator may be off
  // as well, so three leaves slip past the cardinality row.
  FeasibleSetReport bare = model_feasible_set_check(g4, TreeConstraint{LeafMax{2}}, false);
  CHECK_FALSE(bare.exact_match);
  CHECK(bare.model_x.size() == 16);
  CHECK(bare.missing_x.empty());
  REQUIRE(bare.extra_x.size() == 4);
  EdgeSpace space(4);
  for (std::uint64_t mask : bare.extra_x) {
    // Each stray point is a star: some vertex meets all three edges.
    std::vector<int> deg(4, 0);
    for (int e = 0; e < space.dim(); ++e)
      if (mask >> e & 1) {
        auto [i, j] = space.endpoints(e);
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
      }
    CHECK(*std::max_element(deg.begin(), deg.end()) == 3);
  }

  for (int n : {4, 5}) {
    GraphInstance g = make_unit_instance(n, std::set<int>{0, 1, 2});
    std::vector<std::optional<TreeConstraint>> cs;
    cs.push_back(std::nullopt);
    cs.push_back(TreeConstraint{LeafMax{2}});
    cs.push_back(TreeConstraint{LeafMaxInSubset{{0, 1, 2}, 2}});
    cs.push_back(TreeConstraint{LeavesOnlyIn{{0, 1, 2}}});
    cs.push_back(TreeConstraint{DegreeMax{2}});
    for (const auto& c : cs) {
      FeasibleSetReport r = model_feasible_set_check(g, c, true);
      INFO(r.variant << " n=" << n);
      CHECK(r.exact_match);
    }
  }

  FeasibleSetReport dc = model_feasible_set_check(make_unit_instance(6),
                                                  TreeConstraint{DegreeMax{3}}, true);
  CHECK(dc.family_x.size() == 1170);
  CHECK(dc.exact_match);

  CHECK_THROWS_AS(model_feasible_set_check(make_unit_instance(7), std::nullopt, true),
                  resource_limit_error);
}
