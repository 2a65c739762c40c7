// Command-line front end: family skeletons, clique numbers, exact solvers,
// verification runners, and clique-bound evaluation.
//
// Exit codes: 0 success/pass, 1 verification counterexample or infeasible
// instance, 2 argument error, 3 resource limit, 4 I/O failure.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeskel/treeskel.hpp"

namespace {

constexpr const char* kTool = "treeskel 0.1.0";

// The full invocation, replayed into every output for reproducibility.
std::string g_command_line;

std::string join_command_line(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void stamp(nlohmann::json& j, std::optional<std::uint64_t> seed = std::nullopt) {
  j["tool"] = kTool;
  j["command"] = g_command_line;
  if (seed) j["seed"] = *seed;
}

std::string comment_header(const std::string& prefix, std::optional<std::uint64_t> seed) {
  std::string out = prefix + " " + kTool + "\n" + prefix + " command: " + g_command_line + "\n";
  if (seed) out += prefix + " seed: " + std::to_string(*seed) + "\n";
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw treeskel::io_error("cannot open output file: " + path);
  f << text;
  if (!f.good()) throw treeskel::io_error("failed writing output file: " + path);
}

// Flags shared by the family-based commands.
struct FamilyArgs {
  std::string family = "mst";
  int n = 0;
  int k = 0;
  std::vector<int> u;

  treeskel::FamilySpec spec() const {
    treeskel::FamilySpec f;
    f.family = family;
    f.n = n;
    f.k = k;
    if (!u.empty()) f.u = std::set<int>(u.begin(), u.end());
    return f;
  }
};

void add_family_flags(CLI::App* cmd, FamilyArgs& fa, bool variant_alias = false) {
  cmd->add_option(variant_alias ? "--variant,--family" : "--family", fa.family,
                  "mst|lcmst|rlsmst|svmst|dcmst")
      ->check(CLI::IsMember({"mst", "lcmst", "rlsmst", "svmst", "dcmst"}));
  cmd->add_option("--n", fa.n, "number of vertices of the complete graph")->required();
  cmd->add_option("--k", fa.k, "leaf / degree parameter");
  cmd->add_option("--u", fa.u, "comma-separated vertex subset U")->delimiter(',');
}

treeskel::AdjacencyMethod parse_method(const std::string& s) {
  if (s == "lp") return treeskel::AdjacencyMethod::Lp;
  if (s == "swap") return treeskel::AdjacencyMethod::Swap;
  return treeskel::AdjacencyMethod::Auto;
}

// ---------------------------------------------------------------- skeleton

struct SkeletonArgs {
  FamilyArgs fam;
  std::string method = "auto";
  std::string format = "json";
  std::string output;
  int threads = 1;
  int cap = treeskel::kDefaultEnumerationCap;
  std::uint64_t pair_budget = 2'000'000;
};

int cmd_skeleton(const SkeletonArgs& a) {
  using namespace treeskel;
  FamilySpec fam = a.fam.spec();
  VertexSet vs = build_family_vertex_set(fam, a.cap);
  SkeletonOptions opt;
  opt.method = parse_method(a.method);
  opt.threads = a.threads;
  opt.pair_budget = a.pair_budget;
  SkeletonBuildInfo info;
  SkeletonGraph g = build_skeleton(vs, opt, &info);

  int min_deg = 0, max_deg = 0;
  for (int i = 0; i < g.nv; ++i) {
    int d = g.degree(i);
    if (i == 0 || d < min_deg) min_deg = d;
    if (d > max_deg) max_deg = d;
  }
  std::cerr << "vertices=" << g.nv << " edges=" << g.num_edges() << " min_degree=" << min_deg
            << " max_degree=" << max_deg << " oracle=" << method_name(info.method_used)
            << " wall_time_ms=" << info.wall_time_ms << "\n";

  if (a.format == "json") {
    nlohmann::json j = skeleton_to_json(g, vs, fam, info);
    stamp(j);
    write_output(a.output, j.dump(2) + "\n");
  } else if (a.format == "dot") {
    write_output(a.output, comment_header("//", std::nullopt) + skeleton_to_dot(g, vs));
  } else {  // csv edge list
    EdgeSpace space(vs.n);
    std::string out = comment_header("#", std::nullopt) + "i,j,label_i,label_j\n";
    for (auto [i, j] : g.edge_list())
      out += std::to_string(i) + "," + std::to_string(j) + ",\"" +
             tree_label(vs.trees[static_cast<std::size_t>(i)], space) + "\",\"" +
             tree_label(vs.trees[static_cast<std::size_t>(j)], space) + "\"\n";
    write_output(a.output, out);
  }
  return 0;
}

// ------------------------------------------------------------------ clique

int cmd_clique(const SkeletonArgs& a) {
  using namespace treeskel;
  FamilySpec fam = a.fam.spec();
  VertexSet vs = build_family_vertex_set(fam, a.cap);
  SkeletonOptions opt;
  opt.method = parse_method(a.method);
  opt.threads = a.threads;
  opt.pair_budget = a.pair_budget;
  SkeletonBuildInfo info;
  SkeletonGraph g = build_skeleton(vs, opt, &info);
  CliqueResult c = max_clique(g);

  EdgeSpace space(vs.n);
  std::vector<std::string> labels;
  for (int v : c.witness)
    labels.push_back(tree_label(vs.trees[static_cast<std::size_t>(v)], space));

  const bool has_k = fam.family == "lcmst" || fam.family == "rlsmst" || fam.family == "dcmst";
  if (a.format == "csv") {
    std::string witness;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) witness += ';';
      witness += labels[i];
    }
    std::string out = comment_header("#", std::nullopt);
    out += "family,n,k,num_vertices,num_edges,clique_number,witness\n";
    out += fam.family + "," + std::to_string(fam.n) + "," +
           (has_k ? std::to_string(fam.k) : std::string()) + "," + std::to_string(g.nv) + "," +
           std::to_string(g.num_edges()) + "," + std::to_string(c.omega) + ",\"" + witness +
           "\"\n";
    write_output(a.output, out);
  } else if (a.format == "json") {
    nlohmann::json j;
    j["family"] = fam.family;
    j["n"] = fam.n;
    if (has_k) j["k"] = fam.k;
    if (fam.u) j["subset"] = *fam.u;
    j["num_vertices"] = g.nv;
    j["num_edges"] = g.num_edges();
    j["clique_number"] = c.omega;
    j["witness"] = labels;
    j["oracle"] = method_name(info.method_used);
    stamp(j);
    write_output(a.output, j.dump(2) + "\n");
  } else {
    throw std::invalid_argument("clique supports --format csv or json");
  }
  return 0;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
  FamilyArgs fam;
  std::string method = "both";
  std::string instance;
  std::optional<std::uint64_t> seed;
  std::string output;
  int cap = treeskel::kDefaultEnumerationCap;
};

treeskel::GraphInstance resolve_instance(const SolveArgs& a) {
  using namespace treeskel;
  std::optional<std::set<int>> u;
  if (!a.fam.u.empty()) u = std::set<int>(a.fam.u.begin(), a.fam.u.end());
  if (!a.instance.empty()) {
    std::ifstream f(a.instance);
    if (!f) throw io_error("cannot open instance file: " + a.instance);
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      throw io_error(std::string("malformed instance JSON: ") + e.what());
    }
    GraphInstance g = graph_from_json(j);
    if (a.fam.n != 0 && a.fam.n != g.n)
      throw std::invalid_argument("--n disagrees with the instance file");
    if (u) g.subset_u = u;  // the flag overrides the file's subset
    return g;
  }
  if (a.fam.n < 2) throw std::invalid_argument("--n is required without an instance file");
  if (a.seed) return make_random_instance(a.fam.n, *a.seed, u);
  return make_unit_instance(a.fam.n, u);
}

int cmd_solve(const SolveArgs& a) {
  using namespace treeskel;
  GraphInstance g = resolve_instance(a);
  FamilyArgs fa = a.fam;
  fa.n = g.n;
  if (fa.u.empty() && g.subset_u) fa.u.assign(g.subset_u->begin(), g.subset_u->end());
  std::optional<TreeConstraint> c = family_constraint(fa.spec());

  std::optional<Solution> sol;
  std::string method = a.method;
  long long nodes = 0;
  if (a.method == "enumerate") {
    sol = solve_enumerate(g, c, a.cap);
  } else if (a.method == "bnb") {
    sol = solve_bnb(g, c);
    if (sol) nodes = sol->node_count;
  } else {  // both: solve twice and insist on exact agreement
    std::optional<Solution> e = solve_enumerate(g, c, a.cap);
    std::optional<Solution> b = solve_bnb(g, c);
    if (e.has_value() != b.has_value() || (e && e->weight != b->weight)) {
      std::cerr << "solver disagreement: enumerate="
                << (e ? to_string(e->weight) : std::string("infeasible"))
                << " bnb=" << (b ? to_string(b->weight) : std::string("infeasible")) << "\n";
      return 1;
    }
    sol = e;
    if (b) nodes = b->node_count;
  }

  const std::string variant = variant_name(c);
  nlohmann::json j;
  if (!sol) {
    j["status"] = "infeasible";
    j["variant"] = variant;
    j["n"] = g.n;
    stamp(j, a.seed);
    write_output(a.output, j.dump(2) + "\n");
    return 1;
  }
  j["variant"] = variant;
  j["n"] = g.n;
  if (variant == "lcmst" || variant == "rlsmst" || variant == "dcmst") j["k"] = fa.k;
  if (g.subset_u) j["subset"] = *g.subset_u;
  j["weight"] = to_string(sol->weight);
  auto& edges = j["edges"] = nlohmann::json::array();
  EdgeSpace space(g.n);
  for (int e : sol->tree.edges) {
    auto [x, y] = space.endpoints(e);
    edges.push_back({x, y});
  }
  j["method"] = method;
  j["nodes_explored"] = nodes;
  stamp(j, a.seed);
  write_output(a.output, j.dump(2) + "\n");
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string check;
  FamilyArgs fam;
  std::vector<int> ground;
  std::vector<int> endpoints;
  std::string method = "auto";
  std::string output;
  int threads = 1;
  int cap = treeskel::kDefaultEnumerationCap;
  bool no_repair = false;
};

int finish_verify(const VerifyArgs& a, nlohmann::json j, bool pass) {
  j["check"] = a.check;
  stamp(j);
  write_output(a.output, j.dump(2) + "\n");
  return pass ? 0 : 1;
}

int cmd_verify(const VerifyArgs& a) {
  using namespace treeskel;
  if (a.check == "hrep") {
    IntegralHullReport r = integral_hull_check(a.fam.n, std::max(a.fam.n, 5));
    nlohmann::json j;
    j["n"] = a.fam.n;
    j["candidates"] = r.candidates;
    j["accepted"] = r.accepted;
    j["trees"] = r.trees;
    j["pass"] = r.exact_match;
    return finish_verify(a, j, r.exact_match);
  }
  if (a.check == "mst-clique") {
    FamilySpec fam{"mst", a.fam.n, 0, std::nullopt};
    VertexSet vs = build_family_vertex_set(fam, a.cap);
    SkeletonOptions opt;
    // The LP oracle certifies small cases from first principles; the swap
    // rule, itself validated against the LP at n <= 5, covers n = 6.
    opt.method = a.method == "auto"
                     ? (a.fam.n <= 5 ? AdjacencyMethod::Lp : AdjacencyMethod::Swap)
                     : parse_method(a.method);
    opt.threads = a.threads;
    opt.pair_budget = std::max<std::uint64_t>(2'000'000, 1'000'000'000);
    SkeletonBuildInfo info;
    SkeletonGraph g = build_skeleton(vs, opt, &info);
    CliqueResult c = max_clique(g);
    // floor(n^2/4) holds from n = 4 upward; the 3-vertex polytope is a
    // triangle, hence a 3-clique.
    const int expected = a.fam.n >= 4 ? a.fam.n * a.fam.n / 4 : 3;
    nlohmann::json j;
    j["n"] = a.fam.n;
    j["num_vertices"] = g.nv;
    j["num_edges"] = g.num_edges();
    j["oracle"] = method_name(info.method_used);
    j["clique_number"] = c.omega;
    j["expected"] = expected;
    j["pass"] = c.omega == expected;
    return finish_verify(a, j, c.omega == expected);
  }
  if (a.check == "lc-projection" || a.check == "lc-adjacency") {
    LeafFamilySpec spec = lc_default_spec(a.fam.n, a.fam.k);
    if (a.check == "lc-projection") {
      ProjectionReport r = verify_lc_projection(spec);
      return finish_verify(a, to_json(r), r.pass());
    }
    TransferReport r = verify_lc_adjacency_transfer(spec, a.threads, {}, a.cap);
    return finish_verify(a, to_json(r), r.pass());
  }
  if (a.check == "dc-projection" || a.check == "dc-adjacency") {
    DegreeFamilySpec spec = dc_default_spec(a.fam.n, a.fam.k);
    if (a.check == "dc-projection") {
      ProjectionReport r = verify_dc_projection(spec);
      return finish_verify(a, to_json(r), r.pass());
    }
    TransferReport r = verify_dc_adjacency_transfer(spec, a.threads, {}, a.cap);
    return finish_verify(a, to_json(r), r.pass());
  }
  if (a.check == "hp-tsp-merge") {
    std::vector<int> ground = a.ground;
    if (ground.empty()) {
      for (int v = 0; v < a.fam.n; ++v) ground.push_back(v);
    }
    int u = ground.front(), w = ground.back();
    if (!a.endpoints.empty()) {
      if (a.endpoints.size() != 2) throw std::invalid_argument("--endpoints takes exactly u,w");
      u = a.endpoints[0];
      w = a.endpoints[1];
    }
    MergeReport r = verify_hp_tsp_merge(a.fam.n, ground, u, w, a.threads);
    return finish_verify(a, to_json(r), r.pass());
  }
  if (a.check == "ip-feasible-set") {
    GraphInstance g = make_unit_instance(
        a.fam.n, a.fam.u.empty()
                     ? std::optional<std::set<int>>{}
                     : std::optional<std::set<int>>(std::set<int>(a.fam.u.begin(), a.fam.u.end())));
    std::optional<TreeConstraint> c = family_constraint(a.fam.spec());
    FeasibleSetReport r = model_feasible_set_check(g, c, !a.no_repair);
    nlohmann::json j;
    j["variant"] = r.variant;
    j["n"] = r.n;
    j["repair_rows"] = r.repair;
    j["assignments_scanned"] = r.assignments_scanned;
    j["model_points"] = r.model_x.size();
    j["family_points"] = r.family_x.size();
    j["extra_points"] = r.extra_x.size();
    j["missing_points"] = r.missing_x.size();
    j["pass"] = r.exact_match;
    return finish_verify(a, j, r.exact_match);
  }
  throw std::invalid_argument("unknown --check: " + a.check);
}

// ------------------------------------------------------------------- bound

struct BoundArgs {
  std::string theorem;
  int n = 0;
  std::optional<int> k;
  std::optional<int> u_size;
  std::string format = "text";
  std::string output;
};

int cmd_bound(const BoundArgs& a) {
  using namespace treeskel;
  CliqueBound b = clique_bound(a.theorem, a.n, a.k, a.u_size);
  char approx[64];
  std::snprintf(approx, sizeof approx, "%.6f", b.approx);
  if (a.format == "json") {
    nlohmann::json j;
    j["theorem"] = b.theorem;
    j["m"] = b.m;
    j["f"] = b.f;
    j["expression"] = b.expression;
    if (b.exponent_is_rational) j["exponent"] = to_string(b.exponent);
    j["approx"] = b.approx;
    j["vacuous"] = b.vacuous;
    stamp(j);
    write_output(a.output, j.dump(2) + "\n");
  } else {
    std::string out = comment_header("#", std::nullopt);
    out += "theorem " + b.theorem + " n=" + std::to_string(a.n);
    if (a.k) out += " k=" + std::to_string(*a.k);
    if (a.u_size) out += " |U|=" + std::to_string(*a.u_size);
    out += ": m=" + std::to_string(b.m) + " f=" + std::to_string(b.f) + "\n";
    out += "bound = " + b.expression + "\n";
    out += "approx = " + std::string(approx) + "\n";
    if (b.vacuous) out += "note: bound < 1, vacuous at this scale\n";
    write_output(a.output, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_command_line = join_command_line(argc, argv);

  CLI::App app{"spanning-tree polytope toolkit"};
  app.set_version_flag("--version", kTool);
  app.require_subcommand(1);

  SkeletonArgs sk;
  CLI::App* skeleton = app.add_subcommand("skeleton", "build a family's polytope 1-skeleton");
  add_family_flags(skeleton, sk.fam);
  skeleton->add_option("--method", sk.method, "adjacency oracle")
      ->check(CLI::IsMember({"lp", "swap", "auto"}));
  skeleton->add_option("--format", sk.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "csv"}));
  skeleton->add_option("--output", sk.output, "output file (default stdout)");
  skeleton->add_option("--threads", sk.threads, "worker threads")->check(CLI::PositiveNumber);
  skeleton->add_option("--cap", sk.cap, "enumeration cap on n");
  skeleton->add_option("--pair-budget", sk.pair_budget, "max vertex pairs tested");

  SkeletonArgs cl;
  cl.format = "csv";
  CLI::App* clique = app.add_subcommand("clique", "clique number of a family skeleton");
  add_family_flags(clique, cl.fam);
  clique->add_option("--method", cl.method, "adjacency oracle")
      ->check(CLI::IsMember({"lp", "swap", "auto"}));
  clique->add_option("--format", cl.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  clique->add_option("--output", cl.output, "output file (default stdout)");
  clique->add_option("--threads", cl.threads, "worker threads")->check(CLI::PositiveNumber);
  clique->add_option("--cap", cl.cap, "enumeration cap on n");
  clique->add_option("--pair-budget", cl.pair_budget, "max vertex pairs tested");

  SolveArgs so;
  CLI::App* solve = app.add_subcommand("solve", "exact constrained minimum spanning tree");
  add_family_flags(solve, so.fam, /*variant_alias=*/true);
  solve->get_option("--n")->required(false);
  solve->add_option("--method", so.method, "enumerate|bnb|both")
      ->check(CLI::IsMember({"enumerate", "bnb", "both"}));
  solve->add_option("--instance", so.instance, "instance JSON file");
  solve->add_option("--seed", so.seed, "seed for random rational weights");
  solve->add_option("--output", so.output, "output file (default stdout)");
  solve->add_option("--cap", so.cap, "enumeration cap on n");

  VerifyArgs ve;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify
      ->add_option("--check", ve.check,
                   "hrep|mst-clique|lc-projection|dc-projection|lc-adjacency|dc-adjacency|"
                   "hp-tsp-merge|ip-feasible-set")
      ->required()
      ->check(CLI::IsMember({"hrep", "mst-clique", "lc-projection", "dc-projection",
                             "lc-adjacency", "dc-adjacency", "hp-tsp-merge", "ip-feasible-set"}));
  add_family_flags(verify, ve.fam);
  verify->add_option("--ground", ve.ground, "ground set for hp-tsp-merge")->delimiter(',');
  verify->add_option("--endpoints", ve.endpoints, "path endpoints u,w")->delimiter(',');
  verify->add_option("--method", ve.method, "adjacency oracle override")
      ->check(CLI::IsMember({"lp", "swap", "auto"}));
  verify->add_option("--output", ve.output, "output file (default stdout)");
  verify->add_option("--threads", ve.threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--cap", ve.cap, "enumeration cap on n");
  verify->add_flag("--no-repair", ve.no_repair, "drop the leaf-indicator repair rows");

  BoundArgs bo;
  CLI::App* bound = app.add_subcommand("bound", "evaluate a clique lower bound");
  bound->add_option("--theorem", bo.theorem, "lcmst|rlsmst|svmst|dcmst|tsp")
      ->required()
      ->check(CLI::IsMember({"lcmst", "rlsmst", "svmst", "dcmst", "tsp"}));
  bound->add_option("--n", bo.n, "number of vertices")->required();
  bound->add_option("--k", bo.k, "leaf / degree parameter");
  bound->add_option("--u-size", bo.u_size, "size of the subset U");
  bound->add_option("--format", bo.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  bound->add_option("--output", bo.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (skeleton->parsed()) return cmd_skeleton(sk);
    if (clique->parsed()) return cmd_clique(cl);
    if (solve->parsed()) return cmd_solve(so);
    if (verify->parsed()) return cmd_verify(ve);
    if (bound->parsed()) return cmd_bound(bo);
  } catch (const treeskel::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const treeskel::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const treeskel::contract_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
