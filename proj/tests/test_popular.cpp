#include <set>
#include <vector>

#include "doctest.h"
#include "mcg/chromatic.hpp"
#include "mcg/graph.hpp"
#include "mcg/group.hpp"
#include "mcg/popular.hpp"
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

TEST_CASE("verify_edge_coloring examples") {
  SUBCASE("alternating C4 is one-popular") {
    auto c4 = cycle(4);
    EdgeColoring ec;
    ec.set(0, 1, 0);
    ec.set(1, 2, 1);
    ec.set(2, 3, 0);
    ec.set(0, 3, 1);
    auto rep = verify_edge_coloring(c4, ec, EdgeProperty::one_popular,
                                    VerifyMode::Exhaustive());
    CHECK(rep.passed);
    CHECK(rep.conclusive);
    CHECK(rep.cycles_checked == 1);
  }

  SUBCASE("K5 split into two 5-cycle classes is one-popular") {
    auto k5 = complete(5);
    EdgeColoring ec;
    for (int v = 0; v < 5; ++v) ec.set(std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5), 0);
    for (int v = 0; v < 5; ++v) ec.set(std::min(v, (v + 2) % 5), std::max(v, (v + 2) % 5), 1);
    auto rep = verify_edge_coloring(k5, ec, EdgeProperty::one_popular,
                                    VerifyMode::Exhaustive());
    CHECK(rep.passed);
    CHECK(rep.conclusive);
  }

  SUBCASE("rainbow triangle fails with the triangle as witness") {
    auto k3 = complete(3);
    EdgeColoring ec;
    ec.set(0, 1, 0);
    ec.set(1, 2, 1);
    ec.set(0, 2, 2);
    auto rep = verify_edge_coloring(k3, ec, EdgeProperty::one_popular,
                                    VerifyMode::Exhaustive());
    CHECK_FALSE(rep.passed);
    CHECK(rep.conclusive);
    REQUIRE(rep.violating_cycle.has_value());
    CHECK(rep.violating_cycle->size() == 3);
  }

  SUBCASE("condition (1): more than two same-colored edges at a vertex") {
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    EdgeColoring ec;
    ec.set(0, 1, 0);
    ec.set(0, 2, 0);
    ec.set(0, 3, 0);
    auto rep = verify_edge_coloring(star, ec, EdgeProperty::no_lonely,
                                    VerifyMode::Exhaustive());
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.degree_violation.has_value());
    CHECK(rep.degree_violation->first == 0);
    CHECK(rep.degree_violation->second == 0);
  }

  SUBCASE("bounded and triangle passes are inconclusive") {
    auto c5 = cycle(5);
    EdgeColoring ec;
    for (auto [u, v] : c5.edge_list()) ec.set(u, v, 0);
    auto rep = verify_edge_coloring(c5, ec, EdgeProperty::no_lonely, VerifyMode::Bounded(4));
    CHECK(rep.passed);
    CHECK_FALSE(rep.conclusive);  // the 5-cycle itself was never inspected
  }
}

TEST_CASE("natural_coloring_check examples") {
  auto z4 = make_group("cyclic:4");
  auto rep1 = natural_coloring_check(z4, {2, 1}, EdgeProperty::one_popular,
                                     VerifyMode::Exhaustive());
  CHECK(rep1.passed);
  CHECK(rep1.conclusive);

  auto sdp = make_group("sdp:7,3,2");
  auto rep2 = natural_coloring_check(sdp, parse_generators(sdp, "(1,0),(0,1)"),
                                     EdgeProperty::no_lonely, VerifyMode::Bounded(10));
  CHECK(rep2.passed);

  auto q32 = make_group("dicyclic:32");
  // the 9-regular graph has far more than 10^6 cycles of length <= 10; the
  // ceiling truncates enumeration, which the report flags as inconclusive
  auto rep3 = natural_coloring_check(q32, {8, 4, 21, 19, 22}, EdgeProperty::one_popular,
                                     VerifyMode::Bounded(10), 1'000'000);
  CHECK(rep3.passed);
  CHECK(rep3.cycles_checked >= 1'000'000);
  CHECK_FALSE(rep3.conclusive);
}

TEST_CASE("corpus natural colorings satisfy their edge property at L=10") {
  for (const auto& e : corpus()) {
    CAPTURE(e.spec);
    auto g = make_group(e.spec);
    auto gens = parse_generators(g, e.gens);
    auto prop = e.minimal ? EdgeProperty::no_lonely : EdgeProperty::one_popular;
    CHECK(natural_coloring_check(g, gens, prop, VerifyMode::Bounded(10), 500'000).passed);
  }
}

TEST_CASE("descartes_graph examples") {
  auto g1 = descartes_graph(1);
  CHECK(g1.graph.n == 1);
  CHECK(g1.graph.edge_count() == 0);

  auto g2 = descartes_graph(2);
  CHECK(g2.graph.n == 4);
  CHECK(g2.graph.edge_count() == 4);
  CHECK(g2.coloring.num_colors() == 2);
  CHECK(chromatic_number(g2.graph).chi == 2);
  CHECK(verify_edge_coloring(g2.graph, g2.coloring, EdgeProperty::one_popular,
                             VerifyMode::Exhaustive())
            .passed);

  auto g3 = descartes_graph(3);
  CHECK(g3.graph.n == 147);
  CHECK(g3.graph.edge_count() == 280);
  CHECK(g3.coloring.num_colors() == 37);
  CHECK(g3.x_set.size() == 7);
  CHECK(g3.copies.size() == 35);

  CHECK_THROWS_AS(descartes_graph(4), guard_error);
  CHECK_THROWS_AS(descartes_graph(0), error);
}

TEST_CASE("verify_descartes certificate") {
  auto g3 = descartes_graph(3);
  auto rep = verify_descartes(g3);
  CHECK(rep.x_independent);
  CHECK(rep.degree_condition);
  CHECK(rep.matchings_private);
  CHECK(rep.copies_pass_exhaustive);
  CHECK(rep.bounded_cycles_pass);
  CHECK(rep.passed());
}

TEST_CASE("seeded matchings keep the certificate valid") {
  for (unsigned seed : {1u, 7u, 20260823u}) {
    CAPTURE(seed);
    auto g3 = descartes_graph(3, seed);
    CHECK(g3.graph.n == 147);
    CHECK(g3.graph.edge_count() == 280);
    CHECK(verify_descartes(g3, 8).passed());  // shorter bound keeps the fuzz loop quick
  }
}

TEST_CASE("search_edge_coloring examples") {
  SUBCASE("K4 minus an edge has no no-lonely coloring") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    auto r = search_edge_coloring(g, EdgeProperty::no_lonely, CycleScope::all, 5);
    CHECK(r.status == SolveStatus::unsatisfiable);
  }

  SUBCASE("K6 has no one-popular coloring even on triangles alone") {
    auto r = search_edge_coloring(complete(6), EdgeProperty::one_popular,
                                  CycleScope::triangles, 15);
    CHECK(r.status == SolveStatus::unsatisfiable);
  }

  SUBCASE("K5 one-popular colorings are exactly the two-pentagon decompositions") {
    auto k5 = complete(5);
    long found = 0;
    bool all_two_pentagons = true;
    auto r = search_edge_coloring(
        k5, EdgeProperty::one_popular, CycleScope::all, 2, SolveBudget{},
        [&](const EdgeColoring& ec) {
          ++found;
          if (ec.num_colors() != 2) all_two_pentagons = false;
          for (int c = 0; c < 2; ++c) {
            Graph sub(5);
            for (const auto& [e, col] : ec.color)
              if (col == c) sub.add_edge(e.first, e.second);
            if (sub.edge_count() != 5 || !sub.is_connected()) all_two_pentagons = false;
            for (int v = 0; v < 5; ++v)
              if (sub.degree(v) != 2) all_two_pentagons = false;
          }
          return true;
        });
    CHECK(r.status == SolveStatus::satisfiable);
    CHECK(found > 0);
    CHECK(all_two_pentagons);
  }

  SUBCASE("found colorings verify") {
    auto r = search_edge_coloring(cycle(5), EdgeProperty::one_popular, CycleScope::all, 5);
    REQUIRE(r.status == SolveStatus::satisfiable);
    CHECK(verify_edge_coloring(cycle(5), *r.coloring, EdgeProperty::one_popular,
                               VerifyMode::Exhaustive())
              .passed);
  }
}
