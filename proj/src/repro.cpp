#include "mcg/repro.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "mcg/chromatic.hpp"
#include "mcg/constructive.hpp"
#include "mcg/genset.hpp"
#include "mcg/graph.hpp"
#include "mcg/group.hpp"
#include "mcg/popular.hpp"

namespace mcg {

namespace {

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Timer {
  double t0 = now_s();
  double elapsed() const { return now_s() - t0; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  return buf;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = {
      {"cyclic:2", "1", true},
      {"cyclic:9", "1", true},
      {"cyclic:12", "3,4", true},
      {"prod:(cyclic:2)x(cyclic:2)", "(1,0),(0,1)", true},
      {"prod:(cyclic:2)x(cyclic:8)", "(1,0),(0,1)", true},
      {"sym:3", "(1 2),(1 2 3)", true},
      {"sym:4", "(1 2),(1 3),(1 4)", true},
      {"gdih:(cyclic:5)", "(1,0),(0,1)", true},
      {"dicyclic:8", "1,4", true},
      {"dicyclic:32", "1,16", true},
      {"sdp:7,3,2", "(1,0),(0,1)", true},
      {"cyclic:4", "2,1", false},
      {"cyclic:8", "4,2,1", false},
      {"dicyclic:32", "8,4,21,19,22", false},
  };
  return c;
}

const std::vector<std::string>& abelian_catalogue() {
  static const std::vector<std::string> c = {
      "cyclic:2",
      "cyclic:3",
      "cyclic:4",
      "cyclic:5",
      "cyclic:6",
      "cyclic:7",
      "cyclic:8",
      "cyclic:9",
      "cyclic:10",
      "cyclic:11",
      "cyclic:12",
      "cyclic:13",
      "cyclic:14",
      "cyclic:15",
      "cyclic:16",
      "cyclic:18",
      "cyclic:20",
      "cyclic:24",
      "cyclic:25",
      "cyclic:27",
      "cyclic:32",
      "prod:(cyclic:2)x(cyclic:2)",
      "prod:(cyclic:2)x(cyclic:4)",
      "prod:(cyclic:2)x(prod:(cyclic:2)x(cyclic:2))",
      "prod:(cyclic:3)x(cyclic:3)",
      "prod:(cyclic:2)x(cyclic:6)",
      "prod:(cyclic:2)x(cyclic:8)",
      "prod:(cyclic:4)x(cyclic:4)",
      "prod:(cyclic:2)x(prod:(cyclic:2)x(cyclic:4))",
      "prod:(cyclic:2)x(prod:(cyclic:2)x(prod:(cyclic:2)x(cyclic:2)))",
      "prod:(cyclic:2)x(cyclic:10)",
      "prod:(cyclic:2)x(cyclic:12)",
      "prod:(cyclic:3)x(cyclic:9)",
      "prod:(cyclic:3)x(prod:(cyclic:3)x(cyclic:3))",
      "prod:(cyclic:5)x(cyclic:5)",
      "prod:(cyclic:2)x(cyclic:16)",
      "prod:(cyclic:4)x(cyclic:8)",
      "prod:(cyclic:2)x(prod:(cyclic:2)x(cyclic:8))",
      "prod:(cyclic:2)x(prod:(cyclic:4)x(cyclic:4))",
  };
  return c;
}

const std::vector<std::string>& chi_min_catalogue() {
  static const std::vector<std::string> c = {
      "cyclic:1",
      "cyclic:2",
      "cyclic:3",
      "cyclic:4",
      "cyclic:5",
      "cyclic:6",
      "cyclic:7",
      "cyclic:8",
      "cyclic:9",
      "cyclic:10",
      "cyclic:11",
      "cyclic:12",
      "cyclic:13",
      "cyclic:14",
      "cyclic:15",
      "cyclic:16",
      "prod:(cyclic:2)x(cyclic:2)",
      "prod:(cyclic:2)x(cyclic:4)",
      "prod:(cyclic:2)x(prod:(cyclic:2)x(cyclic:2))",
      "prod:(cyclic:3)x(cyclic:3)",
      "sym:3",
      "gdih:(cyclic:4)",
      "gdih:(cyclic:5)",
      "dicyclic:8",
      "dicyclic:12",
  };
  return c;
}

namespace {

using Crit = CriterionResult;

Crit criterion_1(const ReproOptions& opts) {
  Crit r{1, "chromatic number of the order-21 pair graph is 4", false, 0, ""};
  Timer t;
  auto g = make_group("sdp:7,3,2");
  auto gens = parse_generators(g, "(1,0),(0,1)");
  auto graph = cayley_graph(g, gens);
  auto res = chromatic_number(graph, SolveBudget{opts.time_limit_s, -1});
  bool proper = res.exact && verify_vertex_coloring(graph, res.coloring).ok;
  r.seconds = t.elapsed();
  r.passed = proper && res.chi == 4 && r.seconds < 10.0;
  r.detail = "chi=" + std::to_string(res.chi) + (res.exact ? " exact" : " inexact");
  return r;
}

Crit criterion_2(const ReproOptions& opts) {
  Crit r{2, "chromatic number of the dicyclic-32 5-generator graph is 7", false, 0, ""};
  Timer t;
  auto g = make_group("dicyclic:32");
  std::vector<int> gens{8, 4, 21, 19, 22};
  auto graph = cayley_graph(g, gens);
  SolveBudget budget{opts.time_limit_s, -1};
  auto res = chromatic_number(graph, budget);
  auto six = is_k_colorable(graph, 6, budget);
  bool proper = res.exact && verify_vertex_coloring(graph, res.coloring).ok;
  r.seconds = t.elapsed();
  r.passed = proper && res.chi == 7 && six.status == SolveStatus::unsatisfiable &&
             r.seconds < 300.0;
  r.detail = "chi=" + std::to_string(res.chi) + ", 6-colorable=" +
             (six.status == SolveStatus::unsatisfiable ? "no (definitive)" : "undecided");
  return r;
}

Crit criterion_3(const ReproOptions&) {
  Crit r{3, "generating-set reports match the documented classifications", false, 0, ""};
  Timer t;
  auto g21 = make_group("sdp:7,3,2");
  auto r21 = analyze_genset({&g21, parse_generators(g21, "(1,0),(0,1)")});
  bool a = r21.generates && r21.minimal;

  auto q32 = make_group("dicyclic:32");
  auto rq = analyze_genset({&q32, {8, 4, 21, 19, 22}});
  bool b = rq.generates && !rq.minimal && rq.semiminimal_in_given_order;

  auto z4 = make_group("cyclic:4");
  auto rz = analyze_genset({&z4, {2, 1}});
  bool c = rz.generates && !rz.minimal && rz.semiminimal_in_given_order;

  r.seconds = t.elapsed();
  r.passed = a && b && c;
  r.detail = std::string("order-21 minimal=") + (a ? "yes" : "NO") +
             ", dicyclic-32 semiminimal-not-minimal=" + (b ? "yes" : "NO") +
             ", Z4 (2,1) semiminimal-not-minimal=" + (c ? "yes" : "NO");
  return r;
}

Crit criterion_4(const ReproOptions&) {
  Crit r{4, "Dedekind 3-coloring on all minimal generating sets, abelian order <= 32",
         false, 0, ""};
  Timer t;
  long sets = 0;
  bool ok = true;
  std::string failure;
  for (const auto& spec : abelian_catalogue()) {
    auto g = make_group(spec);
    int cap = static_cast<int>(std::floor(std::log2(static_cast<double>(g.order()))));
    for (const auto& gens : enumerate_minimal_generating_sets(g, cap)) {
      ++sets;
      auto col = dedekind_three_coloring(g, gens);
      auto graph = cayley_graph(g, gens);
      if (!verify_vertex_coloring(graph, col).ok || col.num_colors > 3) {
        ok = false;
        failure = spec;
        break;
      }
    }
    if (!ok) break;
  }
  r.seconds = t.elapsed();
  r.passed = ok && r.seconds < 60.0;
  r.detail = ok ? std::to_string(sets) + " generating sets, all proper with <= 3 colors"
               : "failed on " + failure;
  return r;
}

Crit criterion_5(const ReproOptions&) {
  Crit r{5, "dihedral 3-coloring on all minimal generating sets of Dih(Z_n), n = 3..12",
         false, 0, ""};
  Timer t;
  long sets = 0;
  bool ok = true;
  std::string failure;
  for (int n = 3; n <= 12 && ok; ++n) {
    auto base = make_group("cyclic:" + std::to_string(n));
    auto dih = make_group("gdih:(cyclic:" + std::to_string(n) + ")");
    int cap = std::min(4, static_cast<int>(std::floor(std::log2(2.0 * n))));
    for (const auto& gens : enumerate_minimal_generating_sets(dih, cap)) {
      ++sets;
      auto ctx = make_dihedral_context(base, dih, gens);
      auto col = generalized_dihedral_three_coloring(ctx);
      auto graph = cayley_graph(dih, gens);
      if (!verify_vertex_coloring(graph, col).ok || col.num_colors > 3) {
        ok = false;
        failure = "n=" + std::to_string(n);
        break;
      }
    }
  }
  r.seconds = t.elapsed();
  r.passed = ok && r.seconds < 60.0;
  r.detail = ok ? std::to_string(sets) + " generating sets, all proper with <= 3 colors"
               : "failed at " + failure;
  return r;
}

Crit criterion_6(const ReproOptions&) {
  Crit r{6, "index-two classification matches brute force on the order <= 16 catalogue",
         false, 0, ""};
  Timer t;
  bool ok = true;
  std::string failure;
  int groups = 0;
  for (const auto& spec : chi_min_catalogue()) {
    auto g = make_group(spec);
    ++groups;
    int cls = chi_min_classify(g);
    int brute = chi_min_bruteforce(g);
    if (cls != brute) {
      ok = false;
      failure = spec + ": classify=" + std::to_string(cls) + " brute=" + std::to_string(brute);
      break;
    }
  }
  r.seconds = t.elapsed();
  r.passed = ok;
  r.detail = ok ? std::to_string(groups) + " groups agree" : failure;
  return r;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool is_two_pentagon_decomposition(const Graph& g, const EdgeColoring& ec) {
  if (ec.num_colors() != 2) return false;
  for (int c = 0; c < 2; ++c) {
    Graph sub(g.n);
    for (const auto& [e, col] : ec.color)
      if (col == c) sub.add_edge(e.first, e.second);
    if (sub.edge_count() != g.n) return false;
    for (int v = 0; v < sub.n; ++v)
      if (sub.degree(v) != 2) return false;
    if (!sub.is_connected()) return false;  // a single spanning cycle
  }
  return true;
}

Crit criterion_7(const ReproOptions& opts) {
  Crit r{7, "small complete graphs: search verdicts and the K5 enumeration", false, 0, ""};
  Timer t;
  SolveBudget budget{opts.time_limit_s, -1};

  Timer t1;
  Graph k4e = complete_graph(4);
  // drop one edge
  Graph k4m(4);
  for (auto [u, v] : k4e.edge_list())
    if (!(u == 2 && v == 3)) k4m.add_edge(u, v);
  auto s1 = search_edge_coloring(k4m, EdgeProperty::no_lonely, CycleScope::all,
                                 static_cast<int>(k4m.edge_count()), budget);
  double k4e_s = t1.elapsed();
  bool a = s1.status == SolveStatus::unsatisfiable && k4e_s < 1.0;

  Timer t2;
  auto s2 = search_edge_coloring(complete_graph(6), EdgeProperty::one_popular,
                                 CycleScope::triangles, 15, budget);
  double k6_s = t2.elapsed();
  bool b = s2.status == SolveStatus::unsatisfiable && k6_s < 300.0;

  Graph k5 = complete_graph(5);
  long found = 0;
  bool all_decompositions = true;
  auto s3 = search_edge_coloring(
      k5, EdgeProperty::one_popular, CycleScope::all, 10, budget,
      [&](const EdgeColoring& ec) {
        ++found;
        if (!is_two_pentagon_decomposition(k5, ec)) all_decompositions = false;
        return true;
      });
  bool c = s3.status == SolveStatus::satisfiable && found > 0 && all_decompositions;

  r.seconds = t.elapsed();
  r.passed = a && b && c;
  r.detail = std::string("K4-e no-lonely UNSAT=") + (a ? "yes" : "NO") + " (" + fmt(k4e_s) +
             "s), K6 one-popular triangle UNSAT=" + (b ? "yes" : "NO") + " (" + fmt(k6_s) +
             "s), K5 solutions=" + std::to_string(found) +
             (all_decompositions ? " all two-pentagon" : " NOT all two-pentagon");
  return r;
}

Crit criterion_8(const ReproOptions& opts) {
  Crit r{8, "level-3 construction: size, certificate, and chromatic number", false, 0, ""};
  Timer t;
  auto dg = descartes_graph(3);
  bool size_ok = dg.graph.n == 147 && dg.graph.edge_count() == 280 &&
                 dg.coloring.num_colors() == 37;
  auto rep = verify_descartes(dg, 12);
  auto chi = chromatic_number(dg.graph, SolveBudget{opts.time_limit_s, -1});
  r.seconds = t.elapsed();
  r.passed = size_ok && rep.passed() && chi.exact && chi.chi >= 3 && r.seconds < 600.0;
  r.detail = std::to_string(dg.graph.n) + " vertices, " +
             std::to_string(dg.graph.edge_count()) + " edges, " +
             std::to_string(dg.coloring.num_colors()) + " colors, certificate=" +
             (rep.passed() ? "pass" : "FAIL") + ", chi=" + std::to_string(chi.chi);
  return r;
}

Crit criterion_9(const ReproOptions& opts) {
  Crit r{9, "chromatic bounds across the corpus and the W_b inequality", false, 0, ""};
  Timer t;
  bool ok = true;
  std::string failure;
  for (const auto& e : corpus()) {
    auto g = make_group(e.spec);
    auto gens = parse_generators(g, e.gens);
    auto res = chromatic_number(cayley_graph(g, gens), SolveBudget{opts.time_limit_s, -1});
    double n = g.order();
    double bound = e.minimal ? 2.0 * binary_lambert_w(n) : 2.0 * std::log2(n);
    if (!res.exact || res.chi > bound + 1e-9) {
      ok = false;
      failure = e.spec + " chi=" + std::to_string(res.chi) + " bound=" + fmt(bound);
      break;
    }
  }
  for (double n = 8; ok && n <= 4096; n *= 2) {
    double w = binary_lambert_w(n);
    double rhs = std::log2(n) - std::log2(std::log2(n / std::log2(n)));
    if (!(w < rhs)) {
      ok = false;
      failure = "W_b inequality fails at n=" + std::to_string(static_cast<int>(n));
    }
  }
  r.seconds = t.elapsed();
  r.passed = ok;
  r.detail = ok ? std::to_string(corpus().size()) + " corpus graphs within bound; inequality holds"
               : failure;
  return r;
}

Crit criterion_10(const ReproOptions&) {
  Crit r{10, "strong-product decomposition of the dicyclic-32 graph", false, 0, ""};
  Timer t;
  auto g = make_group("dicyclic:32");
  std::vector<int> gens{8, 4, 21, 19, 22};
  auto graph = cayley_graph(g, gens);
  // contract each pair {x, x*b^2}; b^2 = a^8 has id 8
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < g.order(); ++x) {
    int y = g.mul(x, 8);
    if (x < y) blocks.push_back({x, y});
  }
  Graph h = contract(graph, blocks);
  Graph product = graph_product(h, complete_graph(2), ProductKind::strong);
  auto iso = are_isomorphic(product, graph);
  r.seconds = t.elapsed();
  r.passed = iso.has_value() && r.seconds < 30.0;
  r.detail = iso ? "H (strong) K2 isomorphic to the Cayley graph" : "no isomorphism found";
  return r;
}

Crit criterion_11(const ReproOptions&) {
  Crit r{11, "star transposition graph is bipartite with complete Schreier factors",
         false, 0, ""};
  Timer t;
  auto g = make_group("sym:4");
  auto gens = parse_generators(g, "(1 2),(1 3),(1 4)");
  auto graph = cayley_graph(g, gens);
  bool bip = graph.is_bipartite();
  bool factors_complete = true;
  Graph k4 = complete_graph(4);
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    auto h = subgroup_closure(g, rest);
    auto sg = schreier_graph(g, h, gens[i]);
    if (!are_isomorphic(sg.graph, k4)) factors_complete = false;
  }
  r.seconds = t.elapsed();
  r.passed = bip && factors_complete;
  r.detail = std::string("bipartite=") + (bip ? "yes" : "NO") + ", factors=K4: " +
             (factors_complete ? "yes" : "NO");
  return r;
}

Crit criterion_12(const ReproOptions&) {
  Crit r{12, "clique ceilings across the corpus with the Z4 tight case", false, 0, ""};
  Timer t;
  bool ok = true;
  std::string failure;
  for (const auto& e : corpus()) {
    auto g = make_group(e.spec);
    auto gens = parse_generators(g, e.gens);
    int omega = static_cast<int>(max_clique(cayley_graph(g, gens)).size());
    int ceil = e.minimal ? 3 : 4;
    if (omega > ceil) {
      ok = false;
      failure = e.spec + " omega=" + std::to_string(omega);
      break;
    }
  }
  auto z4 = make_group("cyclic:4");
  int tight = static_cast<int>(max_clique(cayley_graph(z4, {2, 1})).size());
  r.seconds = t.elapsed();
  r.passed = ok && tight == 4;
  r.detail = ok ? "ceilings hold; omega(Cay(Z4,{2,1}))=" + std::to_string(tight) : failure;
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const ReproOptions& opts) {
  return {
      criterion_1(opts), criterion_2(opts),  criterion_3(opts),  criterion_4(opts),
      criterion_5(opts), criterion_6(opts),  criterion_7(opts),  criterion_8(opts),
      criterion_9(opts), criterion_10(opts), criterion_11(opts), criterion_12(opts),
  };
}

}  // namespace mcg
