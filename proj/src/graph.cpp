#include "mcg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mcg {

void Graph::add_edge(int u, int v) {
  if (u == v) throw error("loops are not allowed");
  if (u < 0 || v < 0 || u >= n || v >= n) throw error("edge endpoint out of range");
  auto it = std::lower_bound(adj[u].begin(), adj[u].end(), v);
  if (it != adj[u].end() && *it == v) return;
  adj[u].insert(it, v);
  adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool Graph::adjacent(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

long Graph::edge_count() const {
  long deg = 0;
  for (auto& a : adj) deg += static_cast<long>(a.size());
  return deg / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        q.push(v);
      }
  }
  return cnt == n;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (side[v] < 0) {
          side[v] = side[u] ^ 1;
          q.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int EdgeColoring::at(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = color.find({u, v});
  if (it == color.end()) throw error("edge has no color");
  return it->second;
}

int EdgeColoring::num_colors() const {
  int m = 0;
  for (auto& [e, c] : color) m = std::max(m, c + 1);
  return m;
}

void EdgeColoring::set(int u, int v, int c) {
  if (u > v) std::swap(u, v);
  color[{u, v}] = c;
}

Graph cayley_graph(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> seen;
  for (int c : gens) {
    if (c == FiniteGroup::identity) throw error("identity is not allowed in a connection set");
    if (c < 0 || c >= g.order()) throw error("generator out of range");
    if (!seen.insert(c).second) throw error("duplicate generator");
  }
  Graph out(g.order());
  out.labels = g.names();
  for (int x = 0; x < g.order(); ++x)
    for (int c : gens) out.add_edge(x, g.mul(x, c));
  return out;
}

SchreierGraph schreier_graph(const FiniteGroup& g, const SubgroupHandle& h, int c) {
  if (h.contains(c)) throw error("schreier generator must lie outside the subgroup");
  auto blocks = left_cosets(g, h);
  int m = static_cast<int>(blocks.size());
  std::vector<int> coset_of(g.order(), -1);
  for (int i = 0; i < m; ++i)
    for (int x : blocks[i]) coset_of[x] = i;
  Graph out(m);
  for (int x = 0; x < g.order(); ++x) {
    int a = coset_of[x], b = coset_of[g.mul(x, c)];
    if (a != b) out.add_edge(a, b);
  }
  return SchreierGraph{std::move(out), std::move(blocks), std::move(coset_of)};
}

Graph graph_product(const Graph& g1, const Graph& g2, ProductKind kind) {
  Graph out(g1.n * g2.n);
  auto id = [&](int u, int v) { return u * g2.n + v; };
  for (int u = 0; u < g1.n; ++u)
    for (int v = 0; v < g2.n; ++v) {
      for (int v2 : g2.adj[v]) out.add_edge(id(u, v), id(u, v2));
      for (int u2 : g1.adj[u]) {
        out.add_edge(id(u, v), id(u2, v));
        if (kind == ProductKind::strong)
          for (int v2 : g2.adj[v]) out.add_edge(id(u, v), id(u2, v2));
      }
    }
  return out;
}

EdgeColoring natural_edge_coloring(const FiniteGroup& g, const std::vector<int>& gens) {
  // color of generator i: smallest index whose element is C[i] or its inverse
  std::vector<int> col(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    col[i] = static_cast<int>(i);
    for (size_t j = 0; j < i; ++j)
      if (gens[j] == gens[i] || gens[j] == g.inv(gens[i])) {
        col[i] = col[j];
        break;
      }
  }
  EdgeColoring ec;
  for (int x = 0; x < g.order(); ++x)
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      int u = std::min(x, y), v = std::max(x, y);
      auto it = ec.color.find({u, v});
      if (it == ec.color.end() || it->second > col[i]) ec.color[{u, v}] = col[i];
    }
  return ec;
}

namespace {

struct CycleEnumerator {
  const Graph& g;
  int max_len;
  const std::function<bool(const std::vector<int>&)>& fn;
  long ceiling;
  long count = 0;
  bool stopped = false;
  std::vector<char> on_path;
  std::vector<int> path;

  CycleEnumerator(const Graph& graph, int ml,
                  const std::function<bool(const std::vector<int>&)>& f, long ceil)
      : g(graph), max_len(ml), fn(f), ceiling(ceil), on_path(graph.n, 0) {}

  void dfs(int root, int v) {
    if (stopped) return;
    for (int w : g.adj[v]) {
      if (stopped) return;
      if (w == root && path.size() >= 3) {
        // canonical direction: second vertex smaller than last
        if (path[1] < path.back()) {
          if (++count > ceiling) throw guard_error("cycle ceiling exceeded");
          if (fn && !fn(path)) {
            stopped = true;
            return;
          }
        }
        continue;
      }
      if (w <= root || on_path[w]) continue;
      if (max_len >= 0 && static_cast<int>(path.size()) >= max_len) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      on_path[w] = 0;
    }
  }

  long run() {
    for (int r = 0; r < g.n && !stopped; ++r) {
      path.assign(1, r);
      on_path.assign(g.n, 0);
      on_path[r] = 1;
      dfs(r, r);
    }
    return count;
  }
};

}  // namespace

long enumerate_cycles(const Graph& g, int max_len,
                      const std::function<bool(const std::vector<int>&)>& fn, long ceiling) {
  if (max_len >= 0 && max_len < 3) return 0;
  CycleEnumerator e(g, max_len, fn, ceiling);
  return e.run();
}

std::vector<std::vector<int>> all_cycles(const Graph& g, int max_len, long ceiling) {
  std::vector<std::vector<int>> out;
  enumerate_cycles(
      g, max_len,
      [&](const std::vector<int>& c) {
        out.push_back(c);
        return true;
      },
      ceiling);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Iterated refinement: a vertex's color is recomputed from its own color and
// the sorted multiset of neighbor colors until stable. Both graphs share one
// color dictionary so classes are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.n, 0), cb(b.n, 0);
  for (int round = 0; round < a.n + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto key_of = [&](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      nb.reserve(g.adj[v].size());
      for (int w : g.adj[v]) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<int> na(a.n), nb(b.n);
    for (int v = 0; v < a.n; ++v) {
      auto k = key_of(a, ca, v);
      auto it = dict.emplace(std::move(k), static_cast<int>(dict.size())).first;
      na[v] = it->second;
    }
    for (int v = 0; v < b.n; ++v) {
      auto k = key_of(b, cb, v);
      auto it = dict.emplace(std::move(k), static_cast<int>(dict.size())).first;
      nb[v] = it->second;
    }
    if (na == ca && nb == cb) break;
    ca = std::move(na);
    cb = std::move(nb);
  }
  return {ca, cb};
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
  std::vector<char> used_b;
  std::vector<int> order;    // a-vertices, most constrained first

  bool extend(size_t idx) {
    if (idx == order.size()) return true;
    int u = order[idx];
    for (int v = 0; v < b.n; ++v) {
      if (used_b[v] || cb[v] != ca[u]) continue;
      bool ok = true;
      for (int w : a.adj[u]) {
        if (map_ab[w] >= 0 && !b.adjacent(v, map_ab[w])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // non-adjacency must be preserved too
        for (size_t j = 0; j < idx && ok; ++j) {
          int w = order[j];
          if (!a.adjacent(u, w) && b.adjacent(v, map_ab[w])) ok = false;
        }
      }
      if (!ok) continue;
      map_ab[u] = v;
      used_b[v] = 1;
      if (extend(idx + 1)) return true;
      map_ab[u] = -1;
      used_b[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n > 128 || b.n > 128) throw guard_error("isomorphism guarded to 128 vertices");
  if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
  auto [ca, cb] = refine(a, b);
  std::map<int, int> ha, hb;
  for (int c : ca) ha[c]++;
  for (int c : cb) hb[c]++;
  if (ha != hb) return std::nullopt;
  IsoSearch s{a, b, ca, cb, std::vector<int>(a.n, -1), std::vector<char>(b.n, 0), {}};
  s.order.resize(a.n);
  for (int i = 0; i < a.n; ++i) s.order[i] = i;
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    if (ha[ca[x]] != ha[ca[y]]) return ha[ca[x]] < ha[ca[y]];
    if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
    return x < y;
  });
  if (s.extend(0)) return s.map_ab;
  return std::nullopt;
}

Graph contract(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(g.n, -1);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int v : blocks[i]) {
      if (v < 0 || v >= g.n || block_of[v] >= 0) throw error("blocks must partition vertices");
      block_of[v] = static_cast<int>(i);
    }
  for (int v = 0; v < g.n; ++v)
    if (block_of[v] < 0) throw error("blocks must cover all vertices");
  Graph out(static_cast<int>(blocks.size()));
  for (auto [u, v] : g.edge_list())
    if (block_of[u] != block_of[v]) out.add_edge(block_of[u], block_of[v]);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

std::string graph_to_json(const Graph& g, const EdgeColoring* ec) {
  nlohmann::json j;
  j["n"] = g.n;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (ec && !ec->color.empty()) {
    auto colors = nlohmann::json::array();
    for (auto& [e, c] : ec->color) colors.push_back({e.first, e.second, c});
    j["edge_colors"] = std::move(colors);
  }
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j.dump();
}

Graph graph_from_json(const std::string& text, EdgeColoring* ec) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("malformed json: ") + e.what(), e.byte);
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw error("json graph: missing integer field 'n'");
  int n = j["n"].get<int>();
  if (n < 0) throw error("json graph: negative vertex count");
  Graph g(n);
  if (j.contains("edges")) {
    for (auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw error("json graph: bad edge entry");
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u >= v) throw error("json graph: edges must satisfy u < v");
      g.add_edge(u, v);
    }
  }
  if (j.contains("labels")) {
    g.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(g.labels.size()) != n) throw error("json graph: labels length mismatch");
  }
  if (ec) {
    ec->color.clear();
    if (j.contains("edge_colors")) {
      for (auto& e : j["edge_colors"]) {
        if (!e.is_array() || e.size() != 3) throw error("json graph: bad edge_colors entry");
        int u = e[0].get<int>(), v = e[1].get<int>(), c = e[2].get<int>();
        if (u >= v) throw error("json graph: edge_colors must satisfy u < v");
        if (!g.adjacent(u, v)) throw error("json graph: colored edge not present");
        if (c < 0) throw error("json graph: negative color id");
        ec->set(u, v, c);
      }
    }
  }
  return g;
}

std::string graph_to_dot(const Graph& g, const EdgeColoring* ec) {
  static const char* palette[12] = {"red",    "blue",   "green",  "orange",
                                    "purple", "brown",  "cyan",   "magenta",
                                    "gold",   "gray",   "olive",  "pink"};
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n; ++v) {
    out << "  v" << v;
    if (!g.labels.empty()) out << " [label=\"" << g.labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edge_list()) {
    out << "  v" << u << " -- v" << v;
    if (ec) {
      int c = ec->at(u, v);
      out << " [color=" << palette[c % 12] << ", label=\"" << c << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mcg
