#include <vector>

#include "doctest.h"
#include "mcg/chromatic.hpp"
#include "mcg/graph.hpp"
#include "mcg/group.hpp"
#include "mcg/repro.hpp"

using namespace mcg;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("max_clique examples") {
  CHECK(max_clique(complete(4)).size() == 4);
  CHECK(max_clique(cycle(5)).size() == 2);
  auto z4 = make_group("cyclic:4");
  CHECK(max_clique(cayley_graph(z4, {2, 1})).size() == 4);
  CHECK(max_clique(Graph(3)).size() == 1);  // edgeless: a single vertex
  CHECK(max_clique(Graph(0)).empty());
}

TEST_CASE("max_clique returns an actual clique") {
  auto q32 = make_group("dicyclic:32");
  auto g = cayley_graph(q32, {8, 4, 21, 19, 22});
  auto q = max_clique(g);
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = i + 1; j < q.size(); ++j) CHECK(g.adjacent(q[i], q[j]));
}

TEST_CASE("is_k_colorable examples") {
  auto r2 = is_k_colorable(cycle(5), 2);
  CHECK(r2.status == SolveStatus::unsatisfiable);
  auto r3 = is_k_colorable(cycle(5), 3);
  REQUIRE(r3.status == SolveStatus::satisfiable);
  CHECK(verify_vertex_coloring(cycle(5), *r3.coloring).ok);
}

TEST_CASE("budget exhaustion is a distinct outcome") {
  auto r = is_k_colorable(cycle(5), 2, SolveBudget{300.0, 0});
  CHECK(r.status == SolveStatus::budget_exhausted);
}

TEST_CASE("chromatic_number examples") {
  CHECK(chromatic_number(complete(4)).chi == 4);

  auto sdp = make_group("sdp:7,3,2");
  auto g21 = cayley_graph(sdp, parse_generators(sdp, "(1,0),(0,1)"));
  auto r = chromatic_number(g21);
  REQUIRE(r.exact);
  CHECK(r.chi == 4);
  CHECK(verify_vertex_coloring(g21, r.coloring).ok);

  auto q32 = make_group("dicyclic:32");
  auto gq = cayley_graph(q32, {8, 4, 21, 19, 22});
  auto rq = chromatic_number(gq);
  REQUIRE(rq.exact);
  CHECK(rq.chi == 7);
  CHECK(is_k_colorable(gq, 6).status == SolveStatus::unsatisfiable);
}

TEST_CASE("chromatic_number handles empty and disconnected graphs") {
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(Graph(5)).chi == 1);
  Graph two(7);  // K3 plus C4, disjoint
  two.add_edge(0, 1);
  two.add_edge(1, 2);
  two.add_edge(0, 2);
  two.add_edge(3, 4);
  two.add_edge(4, 5);
  two.add_edge(5, 6);
  two.add_edge(3, 6);
  auto r = chromatic_number(two);
  CHECK(r.chi == 3);
  CHECK(verify_vertex_coloring(two, r.coloring).ok);
}

TEST_CASE("verify_vertex_coloring examples") {
  VertexColoring alt{{0, 1, 0, 1}, 2};
  CHECK(verify_vertex_coloring(cycle(4), alt).ok);

  VertexColoring bad{{0, 0, 1}, 2};
  auto check = verify_vertex_coloring(complete(3), bad);
  CHECK_FALSE(check.ok);
  CHECK(check.bad_edge == std::pair<int, int>{0, 1});

  CHECK_THROWS_AS(verify_vertex_coloring(cycle(4), VertexColoring{{0, 1}, 2}), error);
}

TEST_CASE("solver results are self-consistent on the corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.spec);
    auto g = make_group(e.spec);
    auto graph = cayley_graph(g, parse_generators(g, e.gens));
    auto r = chromatic_number(graph);
    REQUIRE(r.exact);
    CHECK(verify_vertex_coloring(graph, r.coloring).ok);
    CHECK(static_cast<int>(max_clique(graph).size()) <= r.chi);
    CHECK(r.chi <= dsatur_upper_bound(graph));
  }
}

TEST_CASE("solver is deterministic") {
  auto q32 = make_group("dicyclic:32");
  auto g = cayley_graph(q32, {8, 4, 21, 19, 22});
  auto a = chromatic_number(g);
  auto b = chromatic_number(g);
  CHECK(a.coloring.color == b.coloring.color);
}

TEST_CASE("chi_min_classify examples") {
  CHECK(chi_min_classify(make_group("cyclic:1")) == 1);
  CHECK(chi_min_classify(make_group("sym:3")) == 2);
  CHECK(chi_min_classify(make_group("cyclic:5")) == 3);
}

TEST_CASE("chi_min_bruteforce examples") {
  CHECK(chi_min_bruteforce(make_group("cyclic:5")) == 3);
  CHECK(chi_min_bruteforce(make_group("cyclic:4")) == 2);
  CHECK(chi_min_bruteforce(make_group("prod:(cyclic:2)x(cyclic:2)")) == 2);
  CHECK_THROWS_AS(chi_min_bruteforce(make_group("sdp:7,3,2")), guard_error);
}

TEST_CASE("classification agrees with brute force on the catalogue") {
  for (const auto& spec : chi_min_catalogue()) {
    CAPTURE(spec);
    auto g = make_group(spec);
    CHECK(chi_min_classify(g) == chi_min_bruteforce(g));
  }
}
