#include "mcg/constructive.hpp"

#include <algorithm>
#include <set>

namespace mcg {

namespace {

void require_minimal(const FiniteGroup& g, const std::vector<int>& gens,
                     const char* who) {
  if (subgroup_closure(g, gens).size() != g.order())
    throw error(std::string(who) + ": connection set does not generate the group");
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (subgroup_closure(g, rest).size() == g.order())
      throw error(std::string(who) + ": connection set is not minimal");
  }
}

void require_proper(const Graph& graph, const VertexColoring& col, const char* who) {
  auto check = verify_vertex_coloring(graph, col);
  if (!check.ok)
    throw inconsistency_error(std::string(who) + ": produced coloring is improper on edge (" +
                              std::to_string(check.bad_edge.first) + "," +
                              std::to_string(check.bad_edge.second) + ")");
}

// 3-colors the cyclic walk e, q, q^2, ... of the quotient generated by the
// image q of c. Returns per-coset colors in {0,1,2}; the odd-cycle third
// color sits at the largest coset id.
std::vector<int> cycle_factor_colors(const FiniteGroup& quot, int q, const char* who) {
  int m = quot.order();
  std::vector<int> pos(m, -1);
  int v = FiniteGroup::identity;
  for (int i = 0; i < m; ++i) {
    if (pos[v] >= 0)
      throw inconsistency_error(std::string(who) + ": Schreier factor is not a single cycle");
    pos[v] = i;
    v = quot.mul(v, q);
  }
  if (v != FiniteGroup::identity)
    throw inconsistency_error(std::string(who) + ": factor walk does not close");
  std::vector<int> color(m);
  if (m % 2 == 0) {
    for (int x = 0; x < m; ++x) color[x] = pos[x] % 2;
  } else {
    int shift = pos[m - 1];  // rotate the walk so coset m-1 sits last
    for (int x = 0; x < m; ++x) {
      int p = (pos[x] - shift + m - 1 + m) % m;
      color[x] = p == m - 1 ? 2 : p % 2;
    }
  }
  return color;
}

}  // namespace

VertexColoring lift_coloring(const FiniteGroup& g, const SubgroupHandle& n,
                             const std::vector<int>& quot_gens,
                             const VertexColoring& quot_col) {
  auto q = quotient(g, n);
  Graph quot_graph = cayley_graph(q.group, quot_gens);
  auto check = verify_vertex_coloring(quot_graph, quot_col);
  if (!check.ok) throw error("lift_coloring: quotient coloring is improper");
  VertexColoring out;
  out.color.resize(g.order());
  for (int x = 0; x < g.order(); ++x) out.color[x] = quot_col.color[q.projection[x]];
  out.num_colors = quot_col.num_colors;
  return out;
}

VertexColoring schreier_product_coloring(const FiniteGroup& g, const std::vector<int>& gens) {
  require_minimal(g, gens, "schreier_product_coloring");
  std::vector<std::vector<int>> factor_color(gens.size());
  std::vector<std::vector<int>> coset_of(gens.size());
  int k = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    auto h = subgroup_closure(g, rest);
    auto sg = schreier_graph(g, h, gens[i]);
    auto chi = chromatic_number(sg.graph);
    if (!chi.exact) throw error("schreier_product_coloring: factor solver budget exhausted");
    factor_color[i] = chi.coloring.color;
    coset_of[i] = sg.coset_of;
    k = std::max(k, chi.chi);
  }
  VertexColoring out;
  out.color.resize(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int s = 0;
    for (size_t i = 0; i < gens.size(); ++i) s += factor_color[i][coset_of[i][x]];
    out.color[x] = s % k;
  }
  out.num_colors = 0;
  for (int c : out.color) out.num_colors = std::max(out.num_colors, c + 1);
  require_proper(cayley_graph(g, gens), out, "schreier_product_coloring");
  return out;
}

VertexColoring dedekind_three_coloring(const FiniteGroup& g, const std::vector<int>& gens) {
  bool dedekind = is_abelian(g);
  if (!dedekind) {
    dedekind = true;
    for (auto& h : all_subgroups(g))
      if (!is_normal(g, h)) {
        dedekind = false;
        break;
      }
  }
  if (!dedekind) throw error("dedekind_three_coloring: group is not Dedekind");
  require_minimal(g, gens, "dedekind_three_coloring");
  if (gens.empty()) {  // trivial group
    return VertexColoring{{0}, 1};
  }
  std::vector<std::vector<int>> factor_colors(gens.size());
  std::vector<std::vector<int>> proj(gens.size());
  bool any_odd = false;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    auto h = subgroup_closure(g, rest);
    if (!is_normal(g, h))
      throw inconsistency_error("dedekind_three_coloring: <C - {c}> is not normal");
    auto q = quotient(g, h);
    factor_colors[i] = cycle_factor_colors(q.group, q.projection[gens[i]],
                                           "dedekind_three_coloring");
    proj[i] = q.projection;
    if (q.group.order() % 2 != 0) any_odd = true;
  }
  // all factors even: every factor is 2-colored, so mod 2 already works
  int k = any_odd ? 3 : 2;
  VertexColoring out;
  out.color.assign(g.order(), 0);
  for (size_t i = 0; i < gens.size(); ++i)
    for (int x = 0; x < g.order(); ++x)
      out.color[x] = (out.color[x] + factor_colors[i][proj[i][x]]) % k;
  out.num_colors = 0;
  for (int c : out.color) out.num_colors = std::max(out.num_colors, c + 1);
  require_proper(cayley_graph(g, gens), out, "dedekind_three_coloring");
  return out;
}

DihedralContext make_dihedral_context(const FiniteGroup& base, const FiniteGroup& dih,
                                      const std::vector<int>& gens) {
  int m = base.order();
  if (dih.order() != 2 * m)
    throw error("dihedral context: group order must be twice the base order");
  if (!is_abelian(base)) throw error("dihedral context: base group must be abelian");
  // verify the gdih layout (g,t) -> g + m*t against both multiplication rules
  for (int g1 = 0; g1 < m; ++g1)
    for (int g2 = 0; g2 < m; ++g2)
      for (int t2 = 0; t2 < 2; ++t2) {
        if (dih.mul(g1, g2 + m * t2) != base.mul(g1, g2) + m * t2 ||
            dih.mul(g1 + m, g2 + m * t2) != base.mul(g1, base.inv(g2)) + m * (1 ^ t2))
          throw error("dihedral context: group does not follow the gdih layout");
      }
  DihedralContext ctx;
  ctx.base = &base;
  ctx.group = &dih;
  ctx.gens = gens;
  for (int c : gens) (c < m ? ctx.c0 : ctx.c1).push_back(c);
  if (ctx.c1.empty())
    throw error("dihedral context: C must contain an element with second coordinate 1");
  auto gen1 = subgroup_closure(dih, ctx.c1);
  std::vector<int> h_elems;
  std::vector<char> member(dih.order(), 0);
  for (int e : gen1.elements)
    if (e < m) {
      h_elems.push_back(e);
      member[e] = 1;
    }
  ctx.h = SubgroupHandle{&dih, std::move(h_elems), std::move(member)};
  ctx.y = *std::min_element(ctx.c1.begin(), ctx.c1.end()) - m;
  return ctx;
}

VertexColoring generalized_dihedral_three_coloring(const DihedralContext& ctx) {
  const FiniteGroup& dih = *ctx.group;
  const FiniteGroup& base = *ctx.base;
  int m = base.order();
  require_minimal(dih, ctx.gens, "generalized_dihedral_three_coloring");

  // (a) the vertices of H form an independent set
  std::set<int> conn;
  for (int c : ctx.gens) {
    conn.insert(c);
    conn.insert(dih.inv(c));
  }
  for (int h1 : ctx.h.elements)
    for (int h2 : ctx.h.elements)
      if (h1 != h2 && conn.count(dih.mul(dih.inv(h1), h2)))
        throw inconsistency_error(
            "generalized_dihedral_three_coloring: H is not independent, input cannot be minimal");

  // H as a subgroup of the base group
  SubgroupHandle h0{&base, ctx.h.elements, std::vector<char>(m, 0)};
  for (int e : h0.elements) h0.member[e] = 1;
  auto q = quotient(base, h0);

  // (b) the C0 cosets minimally generate the quotient
  std::vector<int> images;
  for (int c : ctx.c0) {
    int img = q.projection[c];
    if (img == FiniteGroup::identity)
      throw inconsistency_error(
          "generalized_dihedral_three_coloring: a C0 element lies in H, input cannot be minimal");
    if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(img);
  }
  if (q.group.order() > 1) {
    try {
      require_minimal(q.group, images, "generalized_dihedral_three_coloring (quotient)");
    } catch (const error& e) {
      throw inconsistency_error(e.what());
    }
  }

  VertexColoring f_tilde =
      q.group.order() > 1 ? dedekind_three_coloring(q.group, images)
                          : VertexColoring{{0}, 1};

  VertexColoring out;
  out.color.resize(dih.order());
  for (int g = 0; g < m; ++g) {
    out.color[g] = f_tilde.color[q.projection[g]];
    int shifted = base.mul(g, base.inv(ctx.y));
    out.color[g + m] = (f_tilde.color[q.projection[shifted]] + 1) % 3;
  }
  out.num_colors = 0;
  for (int c : out.color) out.num_colors = std::max(out.num_colors, c + 1);
  require_proper(cayley_graph(dih, ctx.gens), out, "generalized_dihedral_three_coloring");
  return out;
}

VertexColoring frattini_three_coloring(const FiniteGroup& g, const std::vector<int>& gens) {
  auto comm = commutator_subgroup(g);
  auto phi = frattini_subgroup(g);
  for (int e : comm.elements)
    if (!phi.contains(e))
      throw error("frattini_three_coloring: commutator subgroup not inside Frattini subgroup");
  require_minimal(g, gens, "frattini_three_coloring");
  for (int c : gens)
    if (phi.contains(c))
      throw inconsistency_error("frattini_three_coloring: a generator lies in the Frattini "
                                "subgroup, input cannot be minimal");
  auto q = quotient(g, phi);
  if (!is_abelian(q.group))
    throw inconsistency_error("frattini_three_coloring: Frattini quotient is not abelian");
  std::vector<int> images;
  for (int c : gens) {
    int img = q.projection[c];
    if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(img);
  }
  try {
    require_minimal(q.group, images, "frattini_three_coloring (quotient)");
  } catch (const error& e) {
    throw inconsistency_error(e.what());
  }
  VertexColoring f_tilde = dedekind_three_coloring(q.group, images);
  auto out = lift_coloring(g, phi, images, f_tilde);
  require_proper(cayley_graph(g, gens), out, "frattini_three_coloring");
  return out;
}

}  // namespace mcg
