#include <algorithm>
#include <vector>

#include "doctest.h"
#include "mcg/group.hpp"
#include "mcg/repro.hpp"

using namespace mcg;

TEST_CASE("make_group: cyclic arithmetic") {
  auto g = make_group("cyclic:4");
  CHECK(g.order() == 4);
  CHECK(g.mul(1, 3) == 0);
  CHECK(g.inv(1) == 3);
  CHECK(g.element_order(1) == 4);
  CHECK(g.element_order(2) == 2);
}

TEST_CASE("make_group: the order-21 semidirect product is nonabelian") {
  auto g = make_group("sdp:7,3,2");
  CHECK(g.order() == 21);
  bool noncommuting = false;
  for (int a = 0; a < 21 && !noncommuting; ++a)
    for (int b = 0; b < 21; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        noncommuting = true;
        break;
      }
  CHECK(noncommuting);
  CHECK_FALSE(is_abelian(g));
}

TEST_CASE("make_group: dicyclic:32 has a unique central involution a^8") {
  auto g = make_group("dicyclic:32");
  CHECK(g.order() == 32);
  std::vector<int> involutions;
  for (int x = 1; x < 32; ++x)
    if (g.mul(x, x) == 0) involutions.push_back(x);
  REQUIRE(involutions.size() == 1);
  CHECK(involutions[0] == 8);  // a^8 in the id = i + 16*j layout
  for (int y = 0; y < 32; ++y) CHECK(g.mul(8, y) == g.mul(y, 8));
}

TEST_CASE("make_group: rejects malformed specs") {
  CHECK_THROWS_AS(make_group("cyclic:"), parse_error);
  CHECK_THROWS_AS(make_group("nonsense:5"), parse_error);
  CHECK_THROWS_AS(make_group("sym:9"), guard_error);
  CHECK_THROWS_AS(make_group("sdp:7,3,3"), error);  // 3^3 != 1 mod 7
}

TEST_CASE("subgroup_closure examples") {
  auto z4 = make_group("cyclic:4");
  CHECK(subgroup_closure(z4, {}).elements == std::vector<int>{0});
  CHECK(subgroup_closure(z4, {2}).elements == std::vector<int>{0, 2});

  auto q32 = make_group("dicyclic:32");
  // a^4 (id 4) and a^5 b (id 21)
  CHECK(subgroup_closure(q32, {4, 21}).size() == 8);
}

TEST_CASE("left_cosets examples") {
  auto z6 = make_group("cyclic:6");
  auto h = subgroup_closure(z6, {3});
  std::vector<std::vector<int>> expect{{0, 3}, {1, 4}, {2, 5}};
  CHECK(left_cosets(z6, h) == expect);

  auto z4 = make_group("cyclic:4");
  CHECK(left_cosets(z4, subgroup_closure(z4, {1})).size() == 1);

  auto s4 = make_group("sym:4");
  auto h2 = subgroup_closure(s4, {sym_cycle_id(4, {1, 2}), sym_cycle_id(4, {1, 3})});
  auto blocks = left_cosets(s4, h2);
  CHECK(blocks.size() == 4);
  for (const auto& b : blocks) CHECK(b.size() == 6);
}

TEST_CASE("is_normal examples") {
  auto z6 = make_group("cyclic:6");
  CHECK(is_normal(z6, subgroup_closure(z6, {2})));

  auto s3 = make_group("sym:3");
  CHECK_FALSE(is_normal(s3, subgroup_closure(s3, {sym_cycle_id(3, {1, 2})})));
  CHECK(is_normal(s3, subgroup_closure(s3, {sym_cycle_id(3, {1, 2, 3})})));
}

TEST_CASE("quotient examples and the homomorphism property") {
  auto z4 = make_group("cyclic:4");
  auto q = quotient(z4, subgroup_closure(z4, {2}));
  CHECK(q.group.order() == 2);

  auto q32 = make_group("dicyclic:32");
  auto qq = quotient(q32, subgroup_closure(q32, {8}));
  CHECK(qq.group.order() == 16);

  auto triv = quotient(q32, subgroup_closure(q32, {}));
  CHECK(triv.group.order() == 32);
  for (int x = 0; x < 32; ++x) CHECK(triv.projection[x] == x);

  for (const auto* g : {&q32}) {
    auto n = subgroup_closure(*g, {8});
    auto qt = quotient(*g, n);
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b)
        CHECK(qt.projection[g->mul(a, b)] ==
              qt.group.mul(qt.projection[a], qt.projection[b]));
  }
}

TEST_CASE("commutator_subgroup examples") {
  auto z6 = make_group("cyclic:6");
  CHECK(commutator_subgroup(z6).elements == std::vector<int>{0});

  auto s3 = make_group("sym:3");
  auto a3 = commutator_subgroup(s3);
  CHECK(a3.size() == 3);
  CHECK(a3.elements == subgroup_closure(s3, {sym_cycle_id(3, {1, 2, 3})}).elements);

  auto q32 = make_group("dicyclic:32");
  auto c = commutator_subgroup(q32);
  CHECK(c.size() == 8);
  // cyclic: some element of the subgroup has order 8
  bool cyclic = false;
  for (int e : c.elements)
    if (q32.element_order(e) == 8) cyclic = true;
  CHECK(cyclic);
}

TEST_CASE("all_subgroups counts") {
  CHECK(all_subgroups(make_group("cyclic:4")).size() == 3);
  CHECK(all_subgroups(make_group("sym:3")).size() == 6);
  CHECK(all_subgroups(make_group("prod:(cyclic:2)x(cyclic:2)")).size() == 5);
}

TEST_CASE("frattini_subgroup examples") {
  auto v4 = make_group("prod:(cyclic:2)x(cyclic:2)");
  CHECK(frattini_subgroup(v4).elements == std::vector<int>{0});

  auto z4 = make_group("cyclic:4");
  CHECK(frattini_subgroup(z4).elements == std::vector<int>{0, 2});

  auto q32 = make_group("dicyclic:32");
  CHECK(frattini_subgroup(q32).elements == commutator_subgroup(q32).elements);
}

TEST_CASE("classify_group examples") {
  auto z8 = make_group("cyclic:8");
  auto c8 = classify_group(z8);
  CHECK(c8.abelian);
  CHECK(c8.dedekind);
  CHECK(c8.nilpotent);
  CHECK(c8.has_index_two_subgroup);

  auto s3 = make_group("sym:3");
  auto cs3 = classify_group(s3);
  CHECK_FALSE(cs3.abelian);
  CHECK_FALSE(cs3.dedekind);
  CHECK_FALSE(cs3.nilpotent);
  CHECK(cs3.has_index_two_subgroup);

  auto q8 = make_group("dicyclic:8");
  auto cq8 = classify_group(q8);
  CHECK_FALSE(cq8.abelian);
  CHECK(cq8.dedekind);
  CHECK(cq8.nilpotent);
}

TEST_CASE("catalogue invariants: cosets, Frattini normality, nilpotency oracle") {
  for (const auto& spec : chi_min_catalogue()) {
    CAPTURE(spec);
    auto g = make_group(spec);
    for (const auto& h : all_subgroups(g))
      CHECK(static_cast<int>(left_cosets(g, h).size()) * h.size() == g.order());
    CHECK(is_normal(g, frattini_subgroup(g)));
    CHECK(classify_group(g).nilpotent == nilpotent_by_lower_central_series(g));
  }
}

TEST_CASE("parse_generators: tuples, cycles, raw ids") {
  auto sdp = make_group("sdp:7,3,2");
  CHECK(parse_generators(sdp, "(1,0),(0,1)") == std::vector<int>{1, 7});

  auto s4 = make_group("sym:4");
  auto ids = parse_generators(s4, "(1 2),(1 3),(1 4)");
  CHECK(ids.size() == 3);
  for (int e : ids) CHECK(s4.element_order(e) == 2);

  auto z6 = make_group("cyclic:6");
  CHECK(parse_generators(z6, "2,3") == std::vector<int>{2, 3});
  CHECK_THROWS_AS(parse_generators(z6, "6"), error);
}

TEST_CASE("sym element numbering") {
  CHECK(sym_element_id(3, {0, 1, 2}) == 0);  // identity is first lexicographically
  auto s3 = make_group("sym:3");
  int t = sym_cycle_id(3, {1, 2});
  CHECK(s3.element_order(t) == 2);
  int r = sym_cycle_id(3, {1, 2, 3});
  CHECK(s3.element_order(r) == 3);
}
