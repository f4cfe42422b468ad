#ifndef MCG_POPULAR_HPP_
#define MCG_POPULAR_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcg/chromatic.hpp"
#include "mcg/graph.hpp"
#include "mcg/group.hpp"

namespace mcg {

enum class EdgeProperty { no_lonely, one_popular };

struct VerifyMode {
  enum Kind { exhaustive, bounded, triangles } kind = exhaustive;
  int max_len = 0;  // used by bounded

  static VerifyMode Exhaustive() { return {exhaustive, -1}; }
  static VerifyMode Bounded(int len) { return {bounded, len}; }
  static VerifyMode Triangles() { return {triangles, 3}; }
};

struct PropertyReport {
  EdgeProperty property;
  VerifyMode mode;
  bool passed = true;
  // a failed cycle condition carries the witness cycle; a failed per-vertex
  // degree condition carries (vertex, color)
  std::optional<std::vector<int>> violating_cycle;
  std::optional<std::pair<int, int>> degree_violation;
  long cycles_checked = 0;
  // exhaustive verdicts (and any failure) are conclusive; a bounded or
  // triangle pass is necessary-but-not-sufficient
  bool conclusive = true;
  std::string note;  // records the simple-cycle reading of "circuit"
};

// Checks condition (1) (each vertex sees at most two edges of any color) and
// the per-cycle condition for the property over the cycles selected by mode.
PropertyReport verify_edge_coloring(const Graph& g, const EdgeColoring& ec,
                                    EdgeProperty property, VerifyMode mode,
                                    long cycle_ceiling = 10'000'000);

// Verifies the natural generator coloring of Cay(G, C).
PropertyReport natural_coloring_check(const FiniteGroup& g, const std::vector<int>& gens,
                                      EdgeProperty property,
                                      VerifyMode mode = VerifyMode::Bounded(10),
                                      long cycle_ceiling = 10'000'000);

// Descartes-style level-k graph. k=1: a vertex; k=2: C4 with alternating
// colors; k=3: 7 independent vertices X, one C4 copy per 4-subset of X, each
// joined by a privately colored matching.
struct DescartesGraph {
  Graph graph;
  EdgeColoring coloring;
  int k = 1;
  std::vector<int> x_set;
  struct Copy {
    std::vector<int> vertices;                    // canonical copy order
    std::vector<std::pair<int, int>> matching;    // (x vertex, copy vertex)
    int matching_color = -1;
  };
  std::vector<Copy> copies;
};

// Guarded to k <= 3 (k = 4 needs C(439,147) copies). Matchings are canonical
// (sorted) by default; a seed switches to a shuffled matching for fuzzing.
DescartesGraph descartes_graph(int k, std::optional<unsigned> matching_seed = std::nullopt);

struct DescartesReport {
  bool x_independent = false;
  bool degree_condition = false;        // condition (1) on the whole graph
  bool matchings_private = false;       // each matching color on exactly one matching
  bool copies_pass_exhaustive = false;  // each copy is one-popular, exhaustively
  bool bounded_cycles_pass = false;     // all cycles up to bounded_len
  long cycles_checked = 0;
  bool passed() const {
    return x_independent && degree_condition && matchings_private &&
           copies_pass_exhaustive && bounded_cycles_pass;
  }
};

// Combines exhaustive per-copy checks, the structural certificate (X
// independent plus private matchings force a repeat on any cycle leaving a
// copy), and a bounded-length exhaustive cycle check.
DescartesReport verify_descartes(const DescartesGraph& dg, int bounded_len = 12);

enum class CycleScope { all, triangles, four_cycles };

struct SearchResult {
  SolveStatus status;
  std::optional<EdgeColoring> coloring;
  long nodes = 0;
  long solutions = 0;
};

// Backtracking search for an edge coloring satisfying condition (1) plus the
// property on every cycle in scope, with canonical color introduction (edge i
// uses colors 0..min(i, max_colors-1)). Scope restriction relaxes the
// problem, so UNSAT under a restricted scope is conclusive. When on_solution
// is set, all canonical solutions are enumerated (return false to stop).
SearchResult search_edge_coloring(
    const Graph& g, EdgeProperty property, CycleScope scope, int max_colors,
    const SolveBudget& budget = {},
    const std::function<bool(const EdgeColoring&)>& on_solution = nullptr);

}  // namespace mcg

#endif  // MCG_POPULAR_HPP_
