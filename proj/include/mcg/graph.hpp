#ifndef MCG_GRAPH_HPP_
#define MCG_GRAPH_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/base.hpp"
#include "mcg/group.hpp"

namespace mcg {

// Finite simple undirected graph with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;  // optional, empty or size n

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(vertices) {}

  // Inserts an undirected edge; loops are rejected, duplicates ignored.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  long edge_count() const;
  // Edge list with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edge_list() const;
  bool is_connected() const;
  bool is_bipartite() const;
};

// Total edge -> color map, keyed on (u,v) with u < v.
struct EdgeColoring {
  std::map<std::pair<int, int>, int> color;

  int at(int u, int v) const;
  int num_colors() const;  // 1 + max color id (0 when empty)
  void set(int u, int v, int c);
};

// Cay(G, C): edge {x, x*c} for every x and c in C. Undirected and simple; c
// and its inverse yield the same edge. Identity and duplicates rejected.
Graph cayley_graph(const FiniteGroup& g, const std::vector<int>& gens);

struct SchreierGraph {
  Graph graph;
  std::vector<std::vector<int>> cosets;  // blocks in vertex order
  std::vector<int> coset_of;             // group element -> vertex
};

// Left cosets of H as vertices, an edge {xH, xcH} for every group element x.
// Requires c outside H so that no loops occur.
SchreierGraph schreier_graph(const FiniteGroup& g, const SubgroupHandle& h, int c);

enum class ProductKind { cartesian, strong };

// Vertex (u,v) of the product has id u * g2.n + v.
Graph graph_product(const Graph& g1, const Graph& g2, ProductKind kind);

// Edge {x, x*c} gets the smallest index i with C[i] in {c, c^-1}.
EdgeColoring natural_edge_coloring(const FiniteGroup& g, const std::vector<int>& gens);

// Streams every simple cycle exactly once in canonical form (smallest vertex
// first, smaller neighbor second). max_len < 0 means unbounded. Throws
// guard_error when more than `ceiling` cycles would be produced. Returns the
// number of cycles emitted. The callback may return false to stop early.
long enumerate_cycles(const Graph& g, int max_len,
                      const std::function<bool(const std::vector<int>&)>& fn,
                      long ceiling = 10'000'000);

// Convenience: materializes all cycles (same guards).
std::vector<std::vector<int>> all_cycles(const Graph& g, int max_len = -1,
                                         long ceiling = 10'000'000);

// Adjacency-preserving bijection g1 -> g2, or nullopt. Iterated neighborhood
// refinement plus backtracking; guarded to 128 vertices.
std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2);

// Contracts vertex classes (each block becomes one vertex, in block order);
// an edge between blocks survives if any cross edge exists.
Graph contract(const Graph& g, const std::vector<std::vector<int>>& blocks);

// JSON schema: {"n": int, "edges": [[u,v],...], "edge_colors": [[u,v,c],...]?,
// "labels": [string]?} with u < v.
std::string graph_to_json(const Graph& g, const EdgeColoring* ec = nullptr);
Graph graph_from_json(const std::string& text, EdgeColoring* ec = nullptr);

// DOT export with a 12-color palette cycling by color id.
std::string graph_to_dot(const Graph& g, const EdgeColoring* ec = nullptr);

}  // namespace mcg

#endif  // MCG_GRAPH_HPP_
