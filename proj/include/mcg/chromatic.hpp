#ifndef MCG_CHROMATIC_HPP_
#define MCG_CHROMATIC_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/group.hpp"

namespace mcg {

struct VertexColoring {
  std::vector<int> color;  // total map vertex -> color id
  int num_colors = 0;
};

struct SolveBudget {
  double time_limit_s = 300.0;
  long node_limit = -1;  // < 0: unlimited
};

enum class SolveStatus { satisfiable, unsatisfiable, budget_exhausted };

struct KColorResult {
  SolveStatus status;
  std::optional<VertexColoring> coloring;
  long nodes = 0;
};

// A maximum clique via bitset branch-and-bound with a greedy coloring bound.
// Guarded to 256 vertices.
std::vector<int> max_clique(const Graph& g);

// Backtracking k-coloring with DSATUR vertex selection, a precolored maximum
// clique, and canonical color introduction. Deterministic for fixed inputs;
// budget exhaustion is reported as a third outcome, never as "no".
KColorResult is_k_colorable(const Graph& g, int k, const SolveBudget& budget = {});

struct ChromaticResult {
  int chi = 0;  // meaningful when exact
  VertexColoring coloring;
  bool exact = true;
  int lower = 0, upper = 0;  // best known interval
};

// Exact chromatic number: clique lower bound, DSATUR upper bound, closed by
// k-colorability descent. Components are solved independently.
ChromaticResult chromatic_number(const Graph& g, const SolveBudget& budget = {});

// Greedy DSATUR coloring; returns the number of colors used.
int dsatur_upper_bound(const Graph& g, VertexColoring* out = nullptr);

struct ColoringCheck {
  bool ok = true;
  std::pair<int, int> bad_edge{-1, -1};
};

ColoringCheck verify_vertex_coloring(const Graph& g, const VertexColoring& col);

// 1 for the trivial group, 2 iff an index-2 subgroup exists, else 3.
int chi_min_classify(const FiniteGroup& g);

// Independent oracle: minimum exact chromatic number over all generating
// sets. Guarded to order <= 16.
int chi_min_bruteforce(const FiniteGroup& g);

}  // namespace mcg

#endif  // MCG_CHROMATIC_HPP_
