#include "mcg/chromatic.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

namespace mcg {

namespace {

// Small dynamic bitset sized for <= 256 vertices.
struct Bits {
  std::vector<uint64_t> w;

  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (uint64_t x : w)
      if (x) return true;
    return false;
  }
  int first() const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
    return -1;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& andnot(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    return *this;
  }
};

struct CliqueSolver {
  const Graph& g;
  std::vector<Bits> adj;
  std::vector<int> best, cur;

  explicit CliqueSolver(const Graph& graph) : g(graph), adj(graph.n, Bits(graph.n)) {
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u]) adj[u].set(v);
  }

  void expand(Bits cand) {
    // greedy coloring of candidates: color class c gets an independent set;
    // a vertex with color number c can extend the clique by at most c
    std::vector<int> order, color;
    Bits rest = cand;
    int c = 0;
    while (rest.any()) {
      ++c;
      Bits avail = rest;
      while (avail.any()) {
        int v = avail.first();
        avail.reset(v);
        avail.andnot(adj[v]);
        rest.reset(v);
        order.push_back(v);
        color.push_back(c);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur.size() + color[i] <= best.size()) return;
      int v = order[i];
      cur.push_back(v);
      Bits next = cand;
      next &= adj[v];
      if (next.any())
        expand(next);
      else if (cur.size() > best.size())
        best = cur;
      cur.pop_back();
      cand.reset(v);
    }
  }

  std::vector<int> run() {
    Bits all(g.n);
    for (int v = 0; v < g.n; ++v) all.set(v);
    if (g.n > 0) expand(all);
    std::sort(best.begin(), best.end());
    return best;
  }
};

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  if (g.n > 256) throw guard_error("max_clique guarded to 256 vertices");
  if (g.n == 0) return {};
  CliqueSolver s(g);
  auto r = s.run();
  if (r.empty()) r.push_back(0);  // a single vertex is a clique
  return r;
}

int dsatur_upper_bound(const Graph& g, VertexColoring* out) {
  int n = g.n;
  std::vector<int> color(n, -1);
  std::vector<std::set<int>> sat(n);
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick < 0 || sat[v].size() > sat[pick].size() ||
          (sat[v].size() == sat[pick].size() && degree[v] > degree[pick]))
        pick = v;
    }
    int c = 0;
    while (sat[pick].count(c)) ++c;
    color[pick] = c;
    used = std::max(used, c + 1);
    for (int w : g.adj[pick]) sat[w].insert(c);
  }
  if (out) *out = VertexColoring{std::move(color), used};
  return used;
}

KColorResult is_k_colorable(const Graph& g, int k, const SolveBudget& budget) {
  if (k < 1) throw error("k must be at least 1");
  int n = g.n;
  KColorResult res{SolveStatus::unsatisfiable, std::nullopt, 0};
  if (n == 0) {
    res.status = SolveStatus::satisfiable;
    res.coloring = VertexColoring{{}, 0};
    return res;
  }
  auto clique = max_clique(g);
  if (static_cast<int>(clique.size()) > k) return res;  // unsat

  std::vector<int> color(n, -1);
  // forbidden[v][c] counts colored neighbors of v with color c
  std::vector<std::vector<int>> forbidden(n, std::vector<int>(k, 0));
  std::vector<int> saturation(n, 0);
  int max_used = -1;
  auto assign = [&](int v, int c) {
    color[v] = c;
    for (int w : g.adj[v])
      if (color[w] < 0 && forbidden[w][c]++ == 0) ++saturation[w];
  };
  auto unassign = [&](int v, int c) {
    color[v] = -1;
    for (int w : g.adj[v])
      if (color[w] < 0 && --forbidden[w][c] == 0) --saturation[w];
  };
  // symmetry breaking: pin a maximum clique to the first colors
  for (size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
  max_used = static_cast<int>(clique.size()) - 1;
  int uncolored = n - static_cast<int>(clique.size());

  auto start = std::chrono::steady_clock::now();
  long nodes = 0;
  bool out_of_budget = false;
  auto budget_ok = [&]() {
    if (budget.node_limit >= 0 && nodes > budget.node_limit) return false;
    if ((nodes & 1023) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (el > budget.time_limit_s) return false;
    }
    return true;
  };

  std::function<bool(int)> solve = [&](int remaining) -> bool {
    if (remaining == 0) return true;
    if (!budget_ok()) {
      out_of_budget = true;
      return false;
    }
    // DSATUR selection: max saturation, lowest id tie-break
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (color[v] < 0 && (pick < 0 || saturation[v] > saturation[pick])) pick = v;
    int cap = std::min(k - 1, max_used + 1);  // canonical color introduction
    for (int c = 0; c <= cap; ++c) {
      if (forbidden[pick][c]) continue;
      ++nodes;
      int prev_max = max_used;
      max_used = std::max(max_used, c);
      assign(pick, c);
      if (solve(remaining - 1)) return true;
      unassign(pick, c);
      max_used = prev_max;
      if (out_of_budget) return false;
    }
    return false;
  };

  bool ok = solve(uncolored);
  res.nodes = nodes;
  if (ok) {
    res.status = SolveStatus::satisfiable;
    int used = 0;
    for (int c : color) used = std::max(used, c + 1);
    res.coloring = VertexColoring{std::move(color), used};
  } else if (out_of_budget) {
    res.status = SolveStatus::budget_exhausted;
  }
  return res;
}

ColoringCheck verify_vertex_coloring(const Graph& g, const VertexColoring& col) {
  if (static_cast<int>(col.color.size()) != g.n) throw error("coloring is not total");
  for (int v = 0; v < g.n; ++v)
    if (col.color[v] < 0) throw error("coloring is not total");
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v && col.color[u] == col.color[v]) return ColoringCheck{false, {u, v}};
  return ColoringCheck{};
}

namespace {

// Extracts connected components; returns (component vertex lists).
std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int v : g.adj[u])
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Graph induced(const Graph& g, const std::vector<int>& verts, std::vector<int>& back) {
  std::vector<int> fwd(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) fwd[verts[i]] = static_cast<int>(i);
  back = verts;
  Graph out(static_cast<int>(verts.size()));
  for (int u : verts)
    for (int v : g.adj[u])
      if (u < v && fwd[v] >= 0) out.add_edge(fwd[u], fwd[v]);
  return out;
}

ChromaticResult chromatic_connected(const Graph& g, const SolveBudget& budget) {
  ChromaticResult res;
  if (g.edge_count() == 0) {
    res.chi = g.n > 0 ? 1 : 0;
    res.coloring = VertexColoring{std::vector<int>(g.n, 0), g.n > 0 ? 1 : 0};
    res.lower = res.upper = res.chi;
    return res;
  }
  int lower = static_cast<int>(max_clique(g).size());
  VertexColoring best;
  int upper = dsatur_upper_bound(g, &best);
  while (upper > lower) {
    auto r = is_k_colorable(g, upper - 1, budget);
    if (r.status == SolveStatus::satisfiable) {
      best = *r.coloring;
      upper = best.num_colors;  // may skip several k at once
    } else if (r.status == SolveStatus::unsatisfiable) {
      lower = upper;
      break;
    } else {
      res.exact = false;
      break;
    }
  }
  res.chi = upper;
  res.coloring = std::move(best);
  res.lower = res.exact ? upper : lower;
  res.upper = upper;
  return res;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const SolveBudget& budget) {
  auto comps = components(g);
  if (comps.size() <= 1) return chromatic_connected(g, budget);
  ChromaticResult res;
  res.coloring.color.assign(g.n, 0);
  for (auto& verts : comps) {
    std::vector<int> back;
    Graph sub = induced(g, verts, back);
    auto r = chromatic_connected(sub, budget);
    res.exact = res.exact && r.exact;
    res.chi = std::max(res.chi, r.chi);
    res.lower = std::max(res.lower, r.lower);
    res.upper = std::max(res.upper, r.upper);
    for (size_t i = 0; i < back.size(); ++i) res.coloring.color[back[i]] = r.coloring.color[i];
  }
  res.coloring.num_colors = 0;
  for (int c : res.coloring.color) res.coloring.num_colors = std::max(res.coloring.num_colors, c + 1);
  return res;
}

int chi_min_classify(const FiniteGroup& g) {
  if (g.order() == 1) return 1;
  return has_index_two_subgroup(g) ? 2 : 3;
}

int chi_min_bruteforce(const FiniteGroup& g) {
  int n = g.order();
  if (n > 16) throw guard_error("chi_min_bruteforce guarded to order <= 16");
  if (n == 1) return 1;
  int best = n + 1;
  // chromatic number is monotone in the connection set, so only
  // inclusion-minimal generating sets can attain the minimum
  int m = n - 1;  // non-identity elements 1..n-1
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) gens.push_back(i + 1);
    auto cl = subgroup_closure(g, gens);
    if (cl.size() != n) continue;
    bool minimal = true;
    for (size_t i = 0; i < gens.size() && minimal; ++i) {
      std::vector<int> rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      if (subgroup_closure(g, rest).size() == n) minimal = false;
    }
    if (!minimal) continue;
    auto r = chromatic_number(cayley_graph(g, gens));
    if (!r.exact) throw error("chi_min_bruteforce: solver budget exhausted");
    best = std::min(best, r.chi);
    if (best <= 2) break;
  }
  return best;
}

}  // namespace mcg
