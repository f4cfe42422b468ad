#include <algorithm>
#include <set>
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

// number of simple cycles of K_n: sum over k of C(n,k) * (k-1)! / 2
long kn_cycle_count(int n) {
  long total = 0;
  for (int k = 3; k <= n; ++k) {
    long choose = 1;
    for (int i = 0; i < k; ++i) choose = choose * (n - i) / (i + 1);
    long fact = 1;
    for (int i = 2; i <= k - 1; ++i) fact *= i;
    total += choose * fact / 2;
  }
  return total;
}

}  // namespace

TEST_CASE("cayley_graph examples") {
  auto z4 = make_group("cyclic:4");
  auto c4 = cayley_graph(z4, {1});
  CHECK(c4.n == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(are_isomorphic(c4, cycle(4)).has_value());

  auto k4 = cayley_graph(z4, {2, 1});
  CHECK(k4.edge_count() == 6);
  CHECK(are_isomorphic(k4, complete(4)).has_value());

  auto sdp = make_group("sdp:7,3,2");
  auto g21 = cayley_graph(sdp, parse_generators(sdp, "(1,0),(0,1)"));
  CHECK(g21.n == 21);
  CHECK(g21.is_connected());
  for (int v = 0; v < 21; ++v) CHECK(g21.degree(v) == 4);
}

TEST_CASE("cayley_graph rejects the identity and duplicates") {
  auto z4 = make_group("cyclic:4");
  CHECK_THROWS_AS(cayley_graph(z4, {0, 1}), error);
  CHECK_THROWS_AS(cayley_graph(z4, {1, 1}), error);
}

TEST_CASE("cayley graphs are regular") {
  for (const auto& e : corpus()) {
    CAPTURE(e.spec);
    auto g = make_group(e.spec);
    auto graph = cayley_graph(g, parse_generators(g, e.gens));
    for (int v = 1; v < graph.n; ++v) CHECK(graph.degree(v) == graph.degree(0));
  }
}

TEST_CASE("schreier_graph examples") {
  auto z6 = make_group("cyclic:6");
  auto sg = schreier_graph(z6, subgroup_closure(z6, {3}), 1);
  CHECK(sg.graph.n == 3);
  CHECK(are_isomorphic(sg.graph, complete(3)).has_value());

  auto s4 = make_group("sym:4");
  auto h = subgroup_closure(s4, {sym_cycle_id(4, {1, 2}), sym_cycle_id(4, {1, 3})});
  auto sg2 = schreier_graph(s4, h, sym_cycle_id(4, {1, 4}));
  CHECK(are_isomorphic(sg2.graph, complete(4)).has_value());
}

TEST_CASE("schreier over the trivial subgroup equals the Cayley graph") {
  for (const auto* spec : {"cyclic:4", "sym:3", "dicyclic:8"}) {
    auto g = make_group(spec);
    auto triv = subgroup_closure(g, {});
    for (int c = 1; c < g.order(); ++c) {
      auto sg = schreier_graph(g, triv, c);
      auto cg = cayley_graph(g, {c});
      CHECK(sg.graph.edge_list() == cg.edge_list());
    }
  }
}

TEST_CASE("graph products") {
  CHECK(are_isomorphic(graph_product(complete(2), complete(2), ProductKind::strong),
                       complete(4))
            .has_value());

  auto prism = graph_product(cycle(3), complete(2), ProductKind::cartesian);
  CHECK(prism.n == 6);
  CHECK(prism.edge_count() == 9);

  auto c5k3 = graph_product(cycle(5), complete(3), ProductKind::cartesian);
  auto chi = chromatic_number(c5k3);
  REQUIRE(chi.exact);
  CHECK(chi.chi == 3);  // max of the factor chromatic numbers
}

TEST_CASE("cartesian product chromatic number is the max of the factors") {
  std::vector<Graph> family{cycle(4), cycle(5), complete(3), complete(4)};
  std::vector<int> chis;
  for (const auto& g : family) chis.push_back(chromatic_number(g).chi);
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = 0; j < family.size(); ++j) {
      auto p = graph_product(family[i], family[j], ProductKind::cartesian);
      CHECK(chromatic_number(p).chi == std::max(chis[i], chis[j]));
    }
}

TEST_CASE("natural_edge_coloring: involution class is a perfect matching") {
  auto q32 = make_group("dicyclic:32");
  std::vector<int> gens{8, 4, 21, 19, 22};
  auto ec = natural_edge_coloring(q32, gens);
  CHECK(ec.num_colors() == 5);
  std::vector<int> hits(32, 0);
  long class0 = 0;
  for (const auto& [e, c] : ec.color)
    if (c == 0) {  // the b^2 class
      ++class0;
      ++hits[e.first];
      ++hits[e.second];
    }
  CHECK(class0 == 16);
  for (int v = 0; v < 32; ++v) CHECK(hits[v] == 1);
}

TEST_CASE("minimal connection sets hold at most one of each non-involutory inverse pair") {
  for (const auto& e : corpus()) {
    if (!e.minimal) continue;
    CAPTURE(e.spec);
    auto g = make_group(e.spec);
    auto gens = parse_generators(g, e.gens);
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j)
        if (gens[i] != g.inv(gens[i])) CHECK(gens[j] != g.inv(gens[i]));
  }
}

TEST_CASE("enumerate_cycles counts") {
  CHECK(all_cycles(cycle(4)).size() == 1);
  CHECK(all_cycles(complete(4)).size() == 7);
  CHECK(all_cycles(complete(5)).size() == 37);
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(all_cycles(complete(n)).size()) == kn_cycle_count(n));
  }
  // length breakdown on K5
  int tri = 0, quad = 0, penta = 0;
  for (const auto& c : all_cycles(complete(5))) {
    if (c.size() == 3) ++tri;
    if (c.size() == 4) ++quad;
    if (c.size() == 5) ++penta;
  }
  CHECK(tri == 10);
  CHECK(quad == 15);
  CHECK(penta == 12);
}

TEST_CASE("enumerate_cycles: canonical form, bounds, and the ceiling guard") {
  auto cycles = all_cycles(complete(5), 4);
  CHECK(cycles.size() == 25);  // triangles + four-cycles only
  for (const auto& c : cycles) {
    CHECK(*std::min_element(c.begin(), c.end()) == c.front());
    CHECK(c[1] < c.back());
  }
  CHECK_THROWS_AS(all_cycles(complete(7), -1, 100), guard_error);
}

TEST_CASE("are_isomorphic examples") {
  Graph relabeled(4);
  relabeled.add_edge(2, 0);
  relabeled.add_edge(0, 3);
  relabeled.add_edge(3, 1);
  relabeled.add_edge(1, 2);
  auto iso = are_isomorphic(cycle(4), relabeled);
  REQUIRE(iso.has_value());
  // the bijection preserves adjacency
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      CHECK(cycle(4).adjacent(u, v) == relabeled.adjacent((*iso)[u], (*iso)[v]));

  Graph k3_pendant(4);  // triangle plus a pendant edge: same edge count as C4
  k3_pendant.add_edge(0, 1);
  k3_pendant.add_edge(1, 2);
  k3_pendant.add_edge(0, 2);
  k3_pendant.add_edge(2, 3);
  CHECK_FALSE(are_isomorphic(cycle(4), k3_pendant).has_value());

  auto dih3 = make_group("gdih:(cyclic:3)");
  auto g = cayley_graph(dih3, parse_generators(dih3, "(1,0),(0,1)"));
  auto prism = graph_product(cycle(3), complete(2), ProductKind::cartesian);
  CHECK(are_isomorphic(g, prism).has_value());
}

TEST_CASE("json round trip") {
  auto c4 = cycle(4);
  auto text = graph_to_json(c4);
  CHECK(text.find("\"n\":4") != std::string::npos);
  auto back = graph_from_json(text);
  CHECK(back.edge_list() == c4.edge_list());

  auto k5 = complete(5);
  CHECK(graph_from_json(graph_to_json(k5)).edge_list() == k5.edge_list());

  EdgeColoring ec;
  ec.set(0, 1, 0);
  ec.set(1, 2, 1);
  ec.set(2, 3, 0);
  ec.set(0, 3, 1);
  EdgeColoring ec_back;
  auto g2 = graph_from_json(graph_to_json(c4, &ec), &ec_back);
  CHECK(g2.edge_list() == c4.edge_list());
  CHECK(ec_back.color == ec.color);

  CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[1,0]]}"), error);  // u < v required
  CHECK_THROWS_AS(graph_from_json("not json"), error);
}

TEST_CASE("contract merges blocks") {
  // contracting opposite pairs of C4 yields a single edge
  auto g = contract(cycle(4), {{0, 2}, {1, 3}});
  CHECK(g.n == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("dot export mentions every edge") {
  auto c4 = cycle(4);
  auto dot = graph_to_dot(c4);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}
