// Acceptance gate: one self-contained check per shipped claim, each printing
// a single [PASS]/[FAIL] line (with supporting detail above it).  Run all
// checks or a single one with --criterion N; LP-heavy checks honor --threads.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "treeskel/treeskel.hpp"

using namespace treeskel;

namespace {

int g_threads = 1;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. omega(skeleton(MST_n)) for n = 3..6: exhaustive clique numbers match
//    floor(n^2/4) on the formula's domain n >= 4; the n = 3 polytope is a
//    triangle whose skeleton is K_3, so its clique number is 3.
bool criterion1() {
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    VertexSet vs = build_family_vertex_set(FamilySpec{"mst", n, 0, std::nullopt});
    SkeletonOptions opt;
    // First-principles LP certification through n = 5; the exchange rule,
    // itself validated pair-for-pair against the LP in criterion 2, covers
    // the 839160 pairs of n = 6.
    opt.method = n <= 5 ? AdjacencyMethod::Lp : AdjacencyMethod::Swap;
    opt.threads = g_threads;
    opt.pair_budget = 1'000'000'000ULL;
    SkeletonGraph g = build_skeleton(vs, opt);
    CliqueResult c = max_clique(g);
    const int expected = n >= 4 ? n * n / 4 : 3;
    std::printf("  n=%d: %d vertices, %ld skeleton edges, omega=%d, expected=%d (%s oracle, %.1fs)\n",
                n, g.nv, g.num_edges(), c.omega, expected, n <= 5 ? "lp" : "swap",
                seconds_since(t0));
    if (c.omega != expected) ok = false;
  }
  std::printf("  note: floor(n^2/4) applies for n >= 4; at n = 3 the polytope is the\n"
              "  triangle conv{110,101,011} and its exhaustive clique number is 3.\n");
  return ok;
}

// ---------------------------------------------------------------------------
// 2. The LP adjacency oracle and the single-edge-swap rule agree on every one
//    of the C(125,2) = 7750 vertex pairs of the n = 5 polytope.
bool criterion2() {
  VertexSet vs = build_family_vertex_set(FamilySpec{"mst", 5, 0, std::nullopt});
  SkeletonOptions lp, sw;
  lp.method = AdjacencyMethod::Lp;
  lp.threads = g_threads;
  sw.method = AdjacencyMethod::Swap;
  SkeletonGraph glp = build_skeleton(vs, lp);
  SkeletonGraph gsw = build_skeleton(vs, sw);
  long long pairs = 0, agree = 0;
  for (int i = 0; i < vs.size(); ++i)
    for (int j = i + 1; j < vs.size(); ++j) {
      ++pairs;
      if (glp.adjacent(i, j) == gsw.adjacent(i, j)) ++agree;
    }
  std::printf("  %lld pairs compared, %lld agree; lp edges=%ld swap edges=%ld\n", pairs, agree,
              glp.num_edges(), gsw.num_edges());
  return pairs == 7750 && agree == pairs;
}

// ---------------------------------------------------------------------------
// 3. The H-representation admits exactly the tree vectors among all 0/1
//    points with n-1 ones, for n = 3, 4, 5.
bool criterion3() {
  bool ok = true;
  const std::uint64_t expect_trees[] = {3, 16, 125};
  for (int n = 3; n <= 5; ++n) {
    IntegralHullReport r = integral_hull_check(n);
    std::printf("  n=%d: %llu candidates, %llu accepted, %llu trees, exact=%s\n", n,
                (unsigned long long)r.candidates, (unsigned long long)r.accepted,
                (unsigned long long)r.trees, r.exact_match ? "yes" : "no");
    if (!r.exact_match || r.trees != expect_trees[n - 3] || r.accepted != r.trees) ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Projection/lift bijections, exhaustively over every admissible family
//    specification with n <= 8: each member projects to a hamiltonian path
//    with the designated endpoints, lift then project is the identity, and
//    so is project then lift.
bool criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  long long lc_specs = 0, lc_checked = 0, lc_failures = 0;
  for (int n = 4; n <= 8; ++n)
    for (int k = 2; k <= n - 2; ++k)
      for (const auto& s : all_leaf_specs(n, k)) {
        ProjectionReport r = verify_lc_projection(s);
        ++lc_specs;
        lc_checked += r.members_checked;
        if (!r.pass()) ++lc_failures;
      }
  std::printf("  leaf families:   %lld specs, %lld round-trips, %lld failures (%.1fs)\n",
              lc_specs, lc_checked, lc_failures, seconds_since(t0));

  auto t1 = std::chrono::steady_clock::now();
  long long dc_specs = 0, dc_checked = 0, dc_failures = 0;
  for (int n = 4; n <= 8; ++n)
    for (int k = 2; k < n; ++k) {
      if ((n - 2) / (k - 1) < 2) continue;  // need at least two spine groups
      for (const auto& s : all_degree_specs(n, k)) {
        ProjectionReport r = verify_dc_projection(s);
        ++dc_specs;
        dc_checked += r.members_checked;
        if (!r.pass()) ++dc_failures;
      }
    }
  std::printf("  degree families: %lld specs, %lld round-trips, %lld failures (%.1fs)\n",
              dc_specs, dc_checked, dc_failures, seconds_since(t1));
  return lc_failures == 0 && dc_failures == 0 && lc_specs > 0 && dc_specs > 0;
}

// ---------------------------------------------------------------------------
// 5. Adjacency transfer: family pairs are adjacent in the full constrained
//    polytope exactly when their projections are adjacent among the
//    hamiltonian paths.  Ambient vertex sets are the complete constrained
//    polytopes, built by enumeration.
bool criterion5() {
  bool ok = true;
  long long total_pairs = 0, total_cx = 0;
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}, std::pair{7, 2},
                      std::pair{5, 3}, std::pair{6, 3}, std::pair{7, 3}}) {
    auto t0 = std::chrono::steady_clock::now();
    TransferReport r = verify_lc_adjacency_transfer(lc_default_spec(n, k), g_threads);
    std::printf("  lcmst n=%d k=%d: family=%d ambient=%d pairs=%lld counterexamples=%zu (%.1fs)\n",
                n, k, r.family_size, r.ambient_size, r.pairs_checked, r.counterexamples.size(),
                seconds_since(t0));
    total_pairs += r.pairs_checked;
    total_cx += static_cast<long long>(r.counterexamples.size());
    if (!r.pass()) ok = false;
  }
  for (int n : {6, 7, 8}) {
    auto t0 = std::chrono::steady_clock::now();
    TransferReport r = verify_dc_adjacency_transfer(dc_default_spec(n, 3), g_threads);
    std::printf("  dcmst n=%d k=3: family=%d ambient=%d pairs=%lld counterexamples=%zu (%.1fs)%s\n",
                n, r.family_size, r.ambient_size, r.pairs_checked, r.counterexamples.size(),
                seconds_since(t0),
                r.pairs_checked == 0 ? " [single-member family at this scale]" : "");
    total_pairs += r.pairs_checked;
    total_cx += static_cast<long long>(r.counterexamples.size());
    if (!r.pass()) ok = false;
  }
  // k = 2 degree families have multi-member families at these sizes, so the
  // transfer is also exercised on real pairs rather than vacuously.
  for (int n : {6, 7, 8}) {
    auto t0 = std::chrono::steady_clock::now();
    TransferReport r = verify_dc_adjacency_transfer(dc_default_spec(n, 2), g_threads);
    std::printf("  dcmst n=%d k=2: family=%d ambient=%d pairs=%lld counterexamples=%zu (%.1fs)\n",
                n, r.family_size, r.ambient_size, r.pairs_checked, r.counterexamples.size(),
                seconds_since(t0));
    total_pairs += r.pairs_checked;
    total_cx += static_cast<long long>(r.counterexamples.size());
    if (!r.pass()) ok = false;
  }
  std::printf("  total: %lld pairs checked, %lld counterexamples\n", total_pairs, total_cx);
  return ok && total_pairs > 0 && total_cx == 0;
}

// ---------------------------------------------------------------------------
// 6. Clique lifting: the maximum clique of the hamiltonian-path skeleton
//    lifts to an equal-size clique of the constrained skeleton, certified
//    pairwise by the LP, and every computed clique meets the corresponding
//    numeric lower bound (vacuous at this scale, checked nonetheless).
bool criterion6() {
  bool ok = true;
  auto report = [&ok](const std::string& tag, const LiftedCliqueReport& r, long long f) {
    bool bound_ok = clique_meets_bound(r.lifted_clique_size, f);
    std::printf("  %s: hp omega=%d lifted=%d certified_pairs=%lld ambient=%d bound=%.4f%s "
                "bound_met=%s\n",
                tag.c_str(), r.hp_clique_size, r.lifted_clique_size, r.pairs_certified,
                r.ambient_vertices, r.bound_approx, r.bound_vacuous ? " (vacuous)" : "",
                bound_ok ? "yes" : "no");
    if (!r.pass() || !bound_ok) ok = false;
  };
  for (auto [n, k] : {std::pair{6, 2}, std::pair{7, 2}, std::pair{7, 3}}) {
    LiftedCliqueReport r = lc_lifted_clique_check(lc_default_spec(n, k), g_threads);
    report("lcmst n=" + std::to_string(n) + " k=" + std::to_string(k), r,
           clique_bound("lcmst", n, k).f);
  }
  {
    LiftedCliqueReport r = dc_lifted_clique_check(dc_default_spec(8, 3), g_threads);
    report("dcmst n=8 k=3", r, clique_bound("dcmst", 8, 3).f);
  }
  {
    LiftedCliqueReport r = dc_lifted_clique_check(dc_default_spec(8, 2), g_threads);
    report("dcmst n=8 k=2", r, clique_bound("dcmst", 8, 2).f);
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Branch-and-bound equals exhaustive enumeration in exact weight on 200
//    seeded instances per variant (50 seeds, n in 4..7); the unconstrained
//    problem additionally matches the greedy oracle.
bool criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  struct Variant {
    const char* name;
    std::function<std::optional<TreeConstraint>(int)> constraint;
  };
  const std::vector<Variant> variants = {
      {"mst", [](int) { return std::optional<TreeConstraint>{}; }},
      {"lcmst", [](int) { return std::optional<TreeConstraint>(LeafMax{2}); }},
      {"rlsmst",
       [](int) { return std::optional<TreeConstraint>(LeafMaxInSubset{{0, 1, 2}, 2}); }},
      {"svmst", [](int) { return std::optional<TreeConstraint>(LeavesOnlyIn{{0, 1, 2}}); }},
      {"dcmst", [](int) { return std::optional<TreeConstraint>(DegreeMax{3}); }},
  };
  bool ok = true;
  for (const auto& v : variants) {
    int instances = 0, mismatches = 0, infeasible = 0;
    long long bnb_nodes = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
      for (int n = 4; n <= 7; ++n) {
        GraphInstance g = make_random_instance(n, seed);
        std::optional<TreeConstraint> c = v.constraint(n);
        std::optional<Solution> e = solve_enumerate(g, c);
        std::optional<Solution> b = solve_bnb(g, c);
        ++instances;
        if (b) bnb_nodes += b->node_count;
        if (e.has_value() != b.has_value() || (e && e->weight != b->weight)) {
          ++mismatches;
          std::printf("  MISMATCH %s seed=%llu n=%d\n", v.name, (unsigned long long)seed, n);
        }
        if (!e) ++infeasible;
        if (std::string(v.name) == "mst" && e) {
          SpanningTree greedy = oracle::kruskal(g);
          if (g.tree_weight(greedy) != e->weight) {
            ++mismatches;
            std::printf("  GREEDY MISMATCH seed=%llu n=%d\n", (unsigned long long)seed, n);
          }
        }
      }
    std::printf("  %-6s: %d instances, %d mismatches, %d infeasible (agreed), %lld bnb nodes\n",
                v.name, instances, mismatches, infeasible, bnb_nodes);
    if (mismatches != 0 || instances != 200) ok = false;
  }
  std::printf("  elapsed %.1fs\n", seconds_since(t0));
  return ok;
}

// ---------------------------------------------------------------------------
// 8. The IP models project onto exactly the right tree sets for n = 4, 5 on
//    every variant with the repair rows, and the leaf-constrained model
//    demonstrably over-admits without them.
bool criterion8() {
  bool ok = true;
  for (int n : {4, 5}) {
    std::vector<std::pair<std::string, std::optional<TreeConstraint>>> cases;
    cases.emplace_back("mst", std::nullopt);
    cases.emplace_back("lcmst k=2", TreeConstraint(LeafMax{2}));
    cases.emplace_back("rlsmst U={0,1,2} k=2", TreeConstraint(LeafMaxInSubset{{0, 1, 2}, 2}));
    cases.emplace_back("svmst U={0,1,2}", TreeConstraint(LeavesOnlyIn{{0, 1, 2}}));
    cases.emplace_back("dcmst k=2", TreeConstraint(DegreeMax{2}));
    for (const auto& [name, c] : cases) {
      FeasibleSetReport r = model_feasible_set_check(make_unit_instance(n), c, true);
      std::printf("  n=%d %-20s: model=%zu family=%zu exact=%s\n", n, name.c_str(),
                  r.model_x.size(), r.family_x.size(), r.exact_match ? "yes" : "no");
      if (!r.exact_match) ok = false;
    }
    FeasibleSetReport bare =
        model_feasible_set_check(make_unit_instance(n), TreeConstraint(LeafMax{2}), false);
    std::printf("  n=%d lcmst k=2 WITHOUT repair rows: model=%zu family=%zu extra=%zu -> gap %s\n",
                n, bare.model_x.size(), bare.family_x.size(), bare.extra_x.size(),
                !bare.exact_match ? "demonstrated" : "NOT demonstrated");
    if (bare.exact_match || bare.extra_x.empty()) ok = false;
  }
  return ok;
}

struct Criterion {
  int id;
  const char* summary;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "clique number of the spanning-tree skeleton matches the closed form for n=3..6",
     criterion1},
    {2, "LP adjacency equals the edge-swap rule on all 7750 pairs at n=5", criterion2},
    {3, "H-representation admits exactly the tree vectors for n=3,4,5", criterion3},
    {4, "projection/lift round-trips hold for every family spec with n<=8", criterion4},
    {5, "family adjacency transfers to path adjacency with zero counterexamples", criterion5},
    {6, "path-skeleton max cliques lift to certified constrained-skeleton cliques", criterion6},
    {7, "branch-and-bound equals enumeration on 200 instances per variant", criterion7},
    {8, "IP models carve out exactly the right trees; repair-row gap demonstrated", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  CLI::App app{"acceptance checks"};
  app.add_option("--criterion", criterion, "run a single criterion (1-8); default all")
      ->check(CLI::Range(1, 8));
  app.add_option("--threads", g_threads, "worker threads for LP-heavy checks")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (criterion != 0 && c.id != criterion) continue;
    std::printf("criterion %d: %s\n", c.id, c.summary);
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("  exception: %s\n", e.what());
    }
    std::printf("[%s] criterion %d\n", ok ? "PASS" : "FAIL", c.id);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
