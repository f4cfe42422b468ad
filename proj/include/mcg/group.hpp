#ifndef MCG_GROUP_HPP_
#define MCG_GROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mcg/base.hpp"

namespace mcg {

// Finite group given by its full multiplication table over element ids
// 0..order-1. The identity is always element 0; constructors renumber when
// necessary. Immutable after construction.
class FiniteGroup {
 public:
  static constexpr int identity = 0;

  // Takes ownership of a complete multiplication table. Verifies the identity
  // convention, that rows/columns are permutations, and that inverses exist.
  // Associativity is checked exhaustively for order <= 512.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int g, long e) const;
  int element_order(int g) const;

  const std::string& name(int g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }

  // Which constructor built this group ("cyclic", "sym", "dicyclic", "gdih",
  // "sdp", "prod", "table"); empty for hand-built tables.
  const std::string& kind() const { return kind_; }
  // For pair-coordinate constructors: id = x + dims[0]*t with x < dims[0],
  // t < dims[1]. Empty when only raw element ids apply.
  const std::vector<int>& coord_dims() const { return coord_dims_; }
  // The spec string this group was built from, if any.
  const std::string& spec() const { return spec_; }

  void set_meta(std::string kind, std::vector<int> coord_dims, std::string spec) {
    kind_ = std::move(kind);
    coord_dims_ = std::move(coord_dims);
    spec_ = std::move(spec);
  }

 private:
  int n_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::string kind_;
  std::vector<int> coord_dims_;
  std::string spec_;
};

// Sorted element-id set closed under multiplication and inverse, with a
// reference to its parent group.
struct SubgroupHandle {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted
  std::vector<char> member;   // indexed by element id

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const { return member[g] != 0; }
};

// Group construction from the spec mini-language:
//   cyclic:<n> | sym:<n> | dicyclic:<n> | gdih:(<spec>) | sdp:<m>,<n>,<k>
//   | prod:(<spec>)x(<spec>) | table:<path>
// Guards: sym n <= 8, total order <= 20160.
FiniteGroup make_group(const std::string& spec);

// Smallest subgroup containing the seed (breadth-first closure).
SubgroupHandle subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

// Left cosets xH as sorted blocks, ordered by minimal element; block 0 is H.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const SubgroupHandle& h);

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h);

struct Quotient {
  FiniteGroup group;
  std::vector<int> projection;  // element id -> coset id
};

// Quotient by a normal subgroup. Coset ids follow left_cosets order, so the
// identity coset is 0 and the projection is a surjective homomorphism.
Quotient quotient(const FiniteGroup& g, const SubgroupHandle& n);

SubgroupHandle commutator_subgroup(const FiniteGroup& g);

// All subgroups, found by closing unions of pairs of known subgroups to a
// fixpoint, seeded with the cyclic subgroups. Guarded to order <= 128.
std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& g);

// Intersection of all inclusion-maximal proper subgroups ({0} for the
// trivial group). Guarded to order <= 128.
SubgroupHandle frattini_subgroup(const FiniteGroup& g);

struct GroupClass {
  bool abelian;
  bool dedekind;
  bool nilpotent;
  bool has_index_two_subgroup;
};

bool is_abelian(const FiniteGroup& g);

// True iff the subgroup generated by squares and commutators is proper
// (equivalently, the group surjects onto Z2).
bool has_index_two_subgroup(const FiniteGroup& g);

// abelian by table scan, dedekind via subgroup enumeration, nilpotent via
// Wielandt's criterion (commutator inside Frattini).
GroupClass classify_group(const FiniteGroup& g);

// Independent nilpotency oracle: the lower central series reaches {e}.
bool nilpotent_by_lower_central_series(const FiniteGroup& g);

// Element id of a permutation of {0..n-1} (one-line form) in sym:<n>'s
// lexicographic numbering.
int sym_element_id(int n, const std::vector<int>& one_line);

// Element id of a single cycle given in 1-based notation, e.g. {1,2} for the
// transposition (1 2), within sym:<n>.
int sym_cycle_id(int n, const std::vector<int>& cycle);

// Parses a comma-separated generator list against a group. Accepts raw
// element ids, pair tuples "(x,t)" for coordinate constructors, and cycle
// notation "(1 2)" for symmetric groups.
std::vector<int> parse_generators(const FiniteGroup& g, const std::string& text);

}  // namespace mcg

#endif  // MCG_GROUP_HPP_
