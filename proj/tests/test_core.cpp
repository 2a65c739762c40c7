#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "treeskel/edge_space.hpp"
#include "treeskel/enumeration.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/rational.hpp"
#include "treeskel/spanning_tree.hpp"

using namespace treeskel;

TEST_CASE("rational parsing and printing", "[core]") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("4/6") == Rational(2, 3));  // canonicalized
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(make_rational(14, 2)) == "7");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("+3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);

  CHECK(is_integer(make_rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
  CHECK(is_zero_one(Rational(0)));
  CHECK(is_zero_one(Rational(1)));
  CHECK_FALSE(is_zero_one(Rational(1, 2)));
}

TEST_CASE("edge space indexing is the lexicographic bijection", "[core]") {
  EdgeSpace s4(4);
  CHECK(s4.dim() == 6);
  CHECK(s4.index(0, 1) == 0);
  CHECK(s4.index(0, 2) == 1);
  CHECK(s4.index(0, 3) == 2);
  CHECK(s4.index(1, 2) == 3);
  CHECK(s4.index(1, 3) == 4);
  CHECK(s4.index(2, 3) == 5);
  CHECK(s4.index(3, 2) == 5);  // order-insensitive

  for (int n = 2; n <= 10; ++n) {
    EdgeSpace s(n);
    int expect = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CHECK(s.index(i, j) == expect);
        CHECK(s.endpoints(expect) == std::pair<int, int>(i, j));
        ++expect;
      }
    }
    CHECK(expect == s.dim());
  }

  CHECK(s4.edge_label(0) == "01");
  CHECK(s4.edge_label(5) == "23");
  EdgeSpace s11(11);
  CHECK(s11.edge_label(s11.index(0, 10)) == "0-10");

  CHECK_THROWS_AS(EdgeSpace(1), std::invalid_argument);
  CHECK_THROWS_AS(s4.index(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(s4.index(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(s4.endpoints(6), std::invalid_argument);
}

TEST_CASE("spanning tree predicates", "[core]") {
  EdgeSpace s(4);
  SpanningTree path = make_tree(s, {{0, 1}, {1, 2}, {2, 3}});
  SpanningTree star = make_tree(s, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(is_spanning_tree(path, s));
  CHECK(is_spanning_tree(star, s));
  CHECK(degrees(path, s) == std::vector<int>{1, 2, 2, 1});
  CHECK(degrees(star, s) == std::vector<int>{3, 1, 1, 1});
  CHECK(leaf_count(path, s) == 2);
  CHECK(leaf_count(star, s) == 3);

  SpanningTree cycle = make_tree(s, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(is_spanning_tree(cycle, s));
  SpanningTree short_tree = make_tree(s, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_spanning_tree(short_tree, s));
  SpanningTree dup{{0, 0, 5}};
  CHECK_FALSE(is_spanning_tree(dup, s));
  CHECK_THROWS_AS(check_spanning_tree(cycle, s), contract_error);
  CHECK_NOTHROW(check_spanning_tree(path, s));
}

TEST_CASE("spanning tree enumeration matches the closed form", "[core]") {
  // Number of labelled trees on n vertices is n^(n-2); the determinant
  // counter recomputes it independently of the enumerator.
  for (int n = 2; n <= 7; ++n) {
    auto trees = enumerate_spanning_trees(n);
    Integer expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n - 2));
    CHECK(Integer(static_cast<long>(trees.size())) == expect);
    CHECK(count_spanning_trees(n) == expect);

    EdgeSpace space(n);
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
    for (const auto& t : trees) REQUIRE(is_spanning_tree(t, space));
  }
  CHECK(count_spanning_trees(8) == 262144);
  CHECK(count_spanning_trees(12) == Integer("61917364224"));
}

TEST_CASE("enumeration respects the resource cap", "[core]") {
  CHECK_THROWS_AS(enumerate_spanning_trees(9), resource_limit_error);
  CHECK_NOTHROW(enumerate_spanning_trees(4, 4));
  CHECK_THROWS_AS(enumerate_spanning_trees(5, 4), resource_limit_error);
  CHECK_THROWS_AS(enumerate_spanning_trees(1), std::invalid_argument);
}

TEST_CASE("constraint filtering", "[core]") {
  const int n = 4;
  auto trees = enumerate_spanning_trees(n);
  REQUIRE(trees.size() == 16);

  // K_4 has 12 Hamiltonian paths (leaf count 2) and 4 stars (leaf count 3).
  auto paths = filter_family(trees, LeafMax{2}, n);
  CHECK(paths.size() == 12);
  auto all = filter_family(trees, LeafMax{3}, n);
  CHECK(all.size() == 16);
  auto deg2 = filter_family(trees, DegreeMax{2}, n);
  CHECK(deg2 == paths);
  CHECK(filter_family(trees, DegreeMax{3}, n).size() == 16);

  // Trees whose leaves all lie in {0,1}: exactly the two Hamiltonian paths
  // with both endpoints in {0,1}.
  auto inner = filter_family(trees, LeavesOnlyIn{{0, 1}}, n);
  REQUIRE(inner.size() == 2);
  CHECK(inner[0].edges == std::vector<int>{1, 4, 5});  // 0-2,1-3,2-3
  CHECK(inner[1].edges == std::vector<int>{2, 3, 5});  // 0-3,1-2,2-3
  for (const auto& t : inner) {
    EdgeSpace space(n);
    auto deg = degrees(t, space);
    CHECK(deg[0] == 1);
    CHECK(deg[1] == 1);
  }

  // At most one leaf inside U = {0,1}: Hamiltonian paths with at most one
  // endpoint in U, plus stars centered in U.
  auto lsub = filter_family(trees, LeafMaxInSubset{{0, 1}, 1}, n);
  for (const auto& t : lsub) {
    EdgeSpace space(n);
    auto deg = degrees(t, space);
    CHECK((deg[0] == 1) + (deg[1] == 1) <= 1);
  }

  CHECK_THROWS_AS(filter_family(trees, LeafMax{0}, n), std::invalid_argument);
  CHECK_THROWS_AS(filter_family(trees, LeafMax{4}, n), std::invalid_argument);
  CHECK_THROWS_AS(filter_family(trees, LeafMaxInSubset{{0, 1}, 2}, n), std::invalid_argument);
  CHECK_THROWS_AS(filter_family(trees, LeafMaxInSubset{{0, 9}, 1}, n), std::invalid_argument);
  CHECK_THROWS_AS(filter_family(trees, DegreeMax{0}, n), std::invalid_argument);
}

TEST_CASE("instance json round trip", "[core]") {
  GraphInstance g = make_random_instance(5, 42, std::set<int>{0, 2});
  nlohmann::json j = graph_to_json(g);
  GraphInstance back = graph_from_json(j);
  CHECK(back.n == g.n);
  CHECK(back.weights == g.weights);
  CHECK(back.subset_u == g.subset_u);

  nlohmann::json doc = nlohmann::json::parse(R"({
    "n": 4,
    "weights": [[0,1,"3/2"],[0,2,1],[0,3,2],[1,2,"1/3"],[1,3,4],[2,3,1]],
    "subset": [0,1]
  })");
  GraphInstance h = graph_from_json(doc);
  CHECK(h.n == 4);
  CHECK(h.weights[0] == Rational(3, 2));
  CHECK(h.weights[3] == Rational(1, 3));
  CHECK(h.subset_u == std::set<int>{0, 1});

  auto broken = doc;
  broken["weights"][0] = {0, 1, "1/0"};
  CHECK_THROWS_AS(graph_from_json(broken), io_error);
  auto dup = doc;
  dup["weights"][1] = {0, 1, 5};  // duplicate edge, missing (0,2)
  CHECK_THROWS_AS(graph_from_json(dup), io_error);
  auto missing = doc;
  missing.erase("weights");
  CHECK_THROWS_AS(graph_from_json(missing), io_error);
  auto out_of_range = doc;
  out_of_range["weights"][5] = {2, 4, 1};
  CHECK_THROWS_AS(graph_from_json(out_of_range), io_error);
}

TEST_CASE("deterministic instance generator", "[core]") {
  GraphInstance a = make_random_instance(6, 7);
  GraphInstance b = make_random_instance(6, 7);
  GraphInstance c = make_random_instance(6, 8);
  CHECK(a.weights == b.weights);
  CHECK(a.weights != c.weights);
  for (const auto& w : a.weights) {
    CHECK(w >= Rational(1, 10));
    CHECK(w <= Rational(100));
  }

  GraphInstance unit = make_unit_instance(4);
  SpanningTree t = make_tree(unit.space(), {{0, 1}, {1, 2}, {2, 3}});
  CHECK(unit.tree_weight(t) == Rational(3));
}

TEST_CASE("kruskal oracle agrees with exhaustive minimum", "[core]") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    GraphInstance g = make_random_instance(6, seed);
    auto trees = enumerate_spanning_trees(g.n);
    Rational best = g.tree_weight(trees.front());
    for (const auto& t : trees) best = std::min(best, g.tree_weight(t));
    SpanningTree mst = oracle::kruskal(g);
    CHECK(g.tree_weight(mst) == best);
    CHECK(is_spanning_tree(mst, g.space()));
  }
}
