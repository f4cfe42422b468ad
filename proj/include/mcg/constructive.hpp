#ifndef MCG_CONSTRUCTIVE_HPP_
#define MCG_CONSTRUCTIVE_HPP_

#include <vector>

#include "mcg/chromatic.hpp"
#include "mcg/graph.hpp"
#include "mcg/group.hpp"

namespace mcg {

// An input claimed minimal (or structurally constrained) turned out not to
// be; the algorithm reports the falsified obligation instead of repairing.
struct inconsistency_error : error {
  explicit inconsistency_error(const std::string& msg) : error(msg) {}
};

// Pulls a proper coloring of Cay(G/N, C_quot) back through the projection.
// The result is proper on Cay(G, C*N) and on any Cayley subgraph of it.
VertexColoring lift_coloring(const FiniteGroup& g, const SubgroupHandle& n,
                             const std::vector<int>& quot_gens,
                             const VertexColoring& quot_col);

// Colors every Schreier factor Cay(G/<C-{c}>, {c}) exactly and combines the
// factor colors by sum mod k, k = max factor chromatic number. Requires C
// minimal; result is proper on Cay(G, C) with at most k colors.
VertexColoring schreier_product_coloring(const FiniteGroup& g, const std::vector<int>& gens);

// 3-coloring of a minimal Cayley graph of a Dedekind group: every Schreier
// factor is a cycle (or edge), 3-colored and combined by sum mod 3.
VertexColoring dedekind_three_coloring(const FiniteGroup& g, const std::vector<int>& gens);

struct DihedralContext {
  const FiniteGroup* base = nullptr;   // abelian Gamma
  const FiniteGroup* group = nullptr;  // Dih(Gamma), gdih element layout
  std::vector<int> gens;               // full connection set C
  std::vector<int> c0, c1;             // partition of C by second coordinate
  SubgroupHandle h;                    // (Gamma x {0}) intersect <C1>
  int y = -1;                          // chosen reflection part: lowest-id element of C1
};

// Splits C by second coordinate and computes H. The group must use the gdih
// layout (g,t) -> g + |base|*t.
DihedralContext make_dihedral_context(const FiniteGroup& base, const FiniteGroup& dih,
                                      const std::vector<int>& gens);

// 3-coloring of a minimal Cayley graph of a generalized dihedral group. The
// minimality consequences (H independent; C0 cosets minimally generate the
// quotient) are re-verified and their failure reported as inconsistency.
VertexColoring generalized_dihedral_three_coloring(const DihedralContext& ctx);

// 3-coloring of a minimal Cayley graph of a group whose commutator subgroup
// lies inside its Frattini subgroup (all finite nilpotent groups): color the
// Frattini quotient and lift.
VertexColoring frattini_three_coloring(const FiniteGroup& g, const std::vector<int>& gens);

}  // namespace mcg

#endif  // MCG_CONSTRUCTIVE_HPP_
