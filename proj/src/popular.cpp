#include "mcg/popular.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

namespace mcg {

namespace {

// no-lonely: no color appears exactly once on the cycle.
// one-popular: some color appears at least twice.
bool cycle_ok(EdgeProperty property, const std::map<int, int>& counts) {
  if (property == EdgeProperty::no_lonely) {
    for (auto& [c, k] : counts)
      if (k == 1) return false;
    return true;
  }
  for (auto& [c, k] : counts)
    if (k >= 2) return true;
  return false;
}

}  // namespace

PropertyReport verify_edge_coloring(const Graph& g, const EdgeColoring& ec,
                                    EdgeProperty property, VerifyMode mode,
                                    long cycle_ceiling) {
  if (ec.color.size() != static_cast<size_t>(g.edge_count()))
    throw error("edge coloring must be total on the edge set");
  for (auto& [e, c] : ec.color)
    if (!g.adjacent(e.first, e.second)) throw error("colored edge not in graph");
  if (mode.kind == VerifyMode::bounded && mode.max_len < 3)
    throw error("bounded mode requires max_len >= 3");

  PropertyReport rep;
  rep.property = property;
  rep.mode = mode;
  rep.note = "circuit read as simple cycle";

  // condition (1): at most two edges of any color at each vertex
  std::vector<std::map<int, int>> seen(g.n);
  for (auto& [e, c] : ec.color) {
    if (++seen[e.first][c] > 2) {
      rep.passed = false;
      rep.degree_violation = {e.first, c};
      return rep;
    }
    if (++seen[e.second][c] > 2) {
      rep.passed = false;
      rep.degree_violation = {e.second, c};
      return rep;
    }
  }

  int max_len = mode.kind == VerifyMode::exhaustive ? -1 : mode.max_len;
  long checked = 0;
  bool truncated = false;
  auto per_cycle = [&](const std::vector<int>& cyc) {
    ++checked;
    std::map<int, int> counts;
    for (size_t i = 0; i < cyc.size(); ++i)
      ++counts[ec.at(cyc[i], cyc[(i + 1) % cyc.size()])];
    if (!cycle_ok(property, counts)) {
      rep.passed = false;
      rep.violating_cycle = cyc;
      return false;
    }
    return true;
  };
  try {
    enumerate_cycles(g, max_len, per_cycle, cycle_ceiling);
  } catch (const guard_error&) {
    // the ceiling cut off enumeration: the verdict covers only the cycles
    // seen, so a pass can no longer be conclusive
    truncated = true;
  }
  rep.cycles_checked = checked;
  rep.conclusive = !rep.passed || (mode.kind == VerifyMode::exhaustive && !truncated);
  if (truncated && rep.passed) rep.note += "; cycle ceiling reached, verification truncated";
  if (!rep.conclusive)
    rep.note += "; restricted scope pass is necessary but not sufficient";
  return rep;
}

PropertyReport natural_coloring_check(const FiniteGroup& g, const std::vector<int>& gens,
                                      EdgeProperty property, VerifyMode mode,
                                      long cycle_ceiling) {
  Graph graph = cayley_graph(g, gens);
  EdgeColoring ec = natural_edge_coloring(g, gens);
  return verify_edge_coloring(graph, ec, property, mode, cycle_ceiling);
}

// ---------------------------------------------------------------------------
// Descartes construction

DescartesGraph descartes_graph(int k, std::optional<unsigned> matching_seed) {
  if (k < 1) throw error("descartes level must be positive");
  if (k > 3) throw guard_error("descartes construction guarded to k <= 3");
  DescartesGraph dg;
  dg.k = k;
  if (k == 1) {
    dg.graph = Graph(1);
    return dg;
  }
  auto add_c4 = [&](Graph& g, EdgeColoring& ec, int base) {
    // cycle base, base+1, base+2, base+3 with alternating colors 0/1
    g.add_edge(base, base + 1);
    ec.set(base, base + 1, 0);
    g.add_edge(base + 1, base + 2);
    ec.set(base + 1, base + 2, 1);
    g.add_edge(base + 2, base + 3);
    ec.set(base + 2, base + 3, 0);
    g.add_edge(base, base + 3);
    ec.set(base, base + 3, 1);
  };
  if (k == 2) {
    dg.graph = Graph(4);
    add_c4(dg.graph, dg.coloring, 0);
    return dg;
  }
  // k == 3: previous level has n = 4 vertices, X has (k-1)(n-1)+1 = 7
  const int n_prev = 4;
  const int x_count = 7;
  std::vector<std::vector<int>> subsets;
  for (int a = 0; a < x_count; ++a)
    for (int b = a + 1; b < x_count; ++b)
      for (int c = b + 1; c < x_count; ++c)
        for (int d = c + 1; d < x_count; ++d) subsets.push_back({a, b, c, d});
  int copies = static_cast<int>(subsets.size());  // C(7,4) = 35
  dg.graph = Graph(x_count + copies * n_prev);
  for (int x = 0; x < x_count; ++x) dg.x_set.push_back(x);
  std::mt19937 rng(matching_seed.value_or(0));
  for (int i = 0; i < copies; ++i) {
    int base = x_count + i * n_prev;
    add_c4(dg.graph, dg.coloring, base);
    DescartesGraph::Copy copy;
    copy.matching_color = 2 + i;
    for (int j = 0; j < n_prev; ++j) copy.vertices.push_back(base + j);
    std::vector<int> targets = copy.vertices;
    if (matching_seed) std::shuffle(targets.begin(), targets.end(), rng);
    for (int j = 0; j < n_prev; ++j) {
      int xv = subsets[i][j], cv = targets[j];
      dg.graph.add_edge(xv, cv);
      dg.coloring.set(xv, cv, copy.matching_color);
      copy.matching.emplace_back(xv, cv);
    }
    dg.copies.push_back(std::move(copy));
  }
  return dg;
}

DescartesReport verify_descartes(const DescartesGraph& dg, int bounded_len) {
  DescartesReport rep;
  const Graph& g = dg.graph;

  rep.x_independent = true;
  for (size_t i = 0; i < dg.x_set.size() && rep.x_independent; ++i)
    for (size_t j = i + 1; j < dg.x_set.size(); ++j)
      if (g.adjacent(dg.x_set[i], dg.x_set[j])) {
        rep.x_independent = false;
        break;
      }

  // condition (1) on the full colored graph
  std::vector<std::map<int, int>> seen(g.n);
  rep.degree_condition = true;
  for (auto& [e, c] : dg.coloring.color) {
    if (++seen[e.first][c] > 2 || ++seen[e.second][c] > 2) {
      rep.degree_condition = false;
      break;
    }
  }

  // every matching color appears exactly on its own matching, joining X to a
  // single copy with distinct endpoints
  rep.matchings_private = true;
  std::map<int, long> color_use;
  for (auto& [e, c] : dg.coloring.color) ++color_use[c];
  for (auto& copy : dg.copies) {
    if (color_use[copy.matching_color] != static_cast<long>(copy.matching.size()))
      rep.matchings_private = false;
    std::set<int> ends;
    for (auto [xv, cv] : copy.matching) {
      if (dg.coloring.at(xv, cv) != copy.matching_color) rep.matchings_private = false;
      if (std::find(dg.x_set.begin(), dg.x_set.end(), xv) == dg.x_set.end())
        rep.matchings_private = false;
      if (std::find(copy.vertices.begin(), copy.vertices.end(), cv) == copy.vertices.end())
        rep.matchings_private = false;
      if (!ends.insert(xv).second || !ends.insert(cv).second) rep.matchings_private = false;
    }
  }

  // each copy, with its inherited colors, is exhaustively one-popular
  rep.copies_pass_exhaustive = true;
  for (auto& copy : dg.copies) {
    std::vector<int> fwd(g.n, -1);
    for (size_t i = 0; i < copy.vertices.size(); ++i) fwd[copy.vertices[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(copy.vertices.size()));
    EdgeColoring sec;
    for (int u : copy.vertices)
      for (int v : g.adj[u])
        if (u < v && fwd[v] >= 0) {
          sub.add_edge(fwd[u], fwd[v]);
          sec.set(fwd[u], fwd[v], dg.coloring.at(u, v));
        }
    auto r = verify_edge_coloring(sub, sec, EdgeProperty::one_popular,
                                  VerifyMode::Exhaustive());
    if (!r.passed) {
      rep.copies_pass_exhaustive = false;
      break;
    }
  }
  if (dg.copies.empty() && dg.graph.edge_count() > 0) {
    // level 2: the graph itself is the single copy
    auto r = verify_edge_coloring(g, dg.coloring, EdgeProperty::one_popular,
                                  VerifyMode::Exhaustive());
    rep.copies_pass_exhaustive = r.passed;
  }

  if (g.edge_count() == 0) {
    rep.bounded_cycles_pass = true;
    return rep;
  }
  auto r = verify_edge_coloring(g, dg.coloring, EdgeProperty::one_popular,
                                VerifyMode::Bounded(bounded_len));
  rep.bounded_cycles_pass = r.passed;
  rep.cycles_checked = r.cycles_checked;
  return rep;
}

// ---------------------------------------------------------------------------
// Edge-coloring existence search

SearchResult search_edge_coloring(const Graph& g, EdgeProperty property, CycleScope scope,
                                  int max_colors, const SolveBudget& budget,
                                  const std::function<bool(const EdgeColoring&)>& on_solution) {
  if (max_colors < 1) throw error("max_colors must be positive");
  auto edges = g.edge_list();
  // incremental-vertex order closes short cycles as early as possible
  std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  int m = static_cast<int>(edges.size());
  if (scope == CycleScope::all && m > 20)
    throw guard_error("all-cycle search guarded to 20 edges");
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < m; ++i) edge_index[edges[i]] = i;

  // constraint cycles as edge-index lists, bucketed by their last-assigned edge
  int max_len = scope == CycleScope::all ? -1 : (scope == CycleScope::triangles ? 3 : 4);
  std::vector<std::vector<std::vector<int>>> due(m);
  enumerate_cycles(g, max_len, [&](const std::vector<int>& cyc) {
    std::vector<int> idx;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      idx.push_back(edge_index[{std::min(u, v), std::max(u, v)}]);
    }
    int last = *std::max_element(idx.begin(), idx.end());
    due[last].push_back(std::move(idx));
    return true;
  });

  SearchResult res{SolveStatus::unsatisfiable, std::nullopt, 0, 0};
  std::vector<int> assign(m, -1);
  std::vector<std::map<int, int>> at_vertex(g.n);
  auto start = std::chrono::steady_clock::now();
  bool out_of_budget = false;
  auto budget_ok = [&]() {
    if (budget.node_limit >= 0 && res.nodes > budget.node_limit) return false;
    if ((res.nodes & 4095) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (el > budget.time_limit_s) return false;
    }
    return true;
  };

  std::function<bool(int, int)> solve = [&](int i, int introduced) -> bool {
    if (i == m) {
      ++res.solutions;
      EdgeColoring ec;
      for (int e = 0; e < m; ++e) ec.set(edges[e].first, edges[e].second, assign[e]);
      if (!res.coloring) res.coloring = ec;
      if (on_solution) return !on_solution(ec);  // callback false -> stop search
      return true;
    }
    if (!budget_ok()) {
      out_of_budget = true;
      return true;
    }
    auto [u, v] = edges[i];
    int cap = std::min(introduced, max_colors - 1);
    for (int c = 0; c <= cap; ++c) {
      if (at_vertex[u][c] >= 2 || at_vertex[v][c] >= 2) continue;
      ++res.nodes;
      assign[i] = c;
      ++at_vertex[u][c];
      ++at_vertex[v][c];
      bool ok = true;
      for (auto& cyc : due[i]) {
        std::map<int, int> counts;
        for (int e : cyc) ++counts[assign[e]];
        if (!cycle_ok(property, counts)) {
          ok = false;
          break;
        }
      }
      if (ok && solve(i + 1, std::max(introduced, c + 1))) return true;
      assign[i] = -1;
      --at_vertex[u][c];
      --at_vertex[v][c];
      if (out_of_budget) return true;
    }
    return false;
  };

  bool found = solve(0, 0);
  if (out_of_budget) {
    res.status = SolveStatus::budget_exhausted;
  } else if (res.solutions > 0) {
    res.status = SolveStatus::satisfiable;
  } else {
    res.status = SolveStatus::unsatisfiable;
    (void)found;
  }
  return res;
}

}  // namespace mcg
