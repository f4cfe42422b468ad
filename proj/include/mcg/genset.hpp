#ifndef MCG_GENSET_HPP_
#define MCG_GENSET_HPP_

#include <optional>
#include <vector>

#include "mcg/group.hpp"

namespace mcg {

// Ordered candidate connection set; order matters for semiminimality.
struct GenSet {
  const FiniteGroup* group = nullptr;
  std::vector<int> elements;
};

struct GenSetReport {
  bool generates = false;
  bool minimal = false;
  bool semiminimal_in_given_order = false;
  bool semiminimal_some_order = false;
  std::optional<std::vector<int>> witness_order;  // permutation of indices
};

// Generation, minimality, and semiminimality analysis. The some-order search
// is exact (memoized prefix closures) and guarded to |C| <= 10.
GenSetReport analyze_genset(const GenSet& c);

// All inclusion-minimal generating sets with at most max_size elements.
// Guards: |G| <= 64 and max_size <= log2|G|.
std::vector<std::vector<int>> enumerate_minimal_generating_sets(const FiniteGroup& g,
                                                                int max_size);

// The unique W > 0 with W * 2^W = n, to absolute tolerance 1e-9. Requires
// n >= 2.
double binary_lambert_w(double n);

struct ChromaticBound {
  enum class Kind { minimal, semiminimal, not_semiminimal };
  Kind kind;
  double value;  // +infinity when not semiminimal in any order
};

// 2*W_b(n) for minimal sets, 2*log2(n) for semiminimal ones, +inf otherwise.
ChromaticBound chromatic_bound(const GenSet& c);

}  // namespace mcg

#endif  // MCG_GENSET_HPP_
