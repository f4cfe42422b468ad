#ifndef MCG_REPRO_HPP_
#define MCG_REPRO_HPP_

#include <string>
#include <vector>

namespace mcg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct ReproOptions {
  double time_limit_s = 300.0;  // solver budget per call; REPRO_TIME_LIMIT overrides
};

// Cayley-graph corpus shared by the acceptance suite and the property tests.
struct CorpusEntry {
  std::string spec;
  std::string gens;  // parse_generators syntax
  bool minimal;      // otherwise semiminimal (in the listed order)
};

const std::vector<CorpusEntry>& corpus();

// Abelian groups of order <= 32 used for the Dedekind coloring sweep.
const std::vector<std::string>& abelian_catalogue();

// Groups of order <= 16 used for the chi_min cross-check.
const std::vector<std::string>& chi_min_catalogue();

// Runs every acceptance criterion and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const ReproOptions& opts = {});

}  // namespace mcg

#endif  // MCG_REPRO_HPP_
