#pragma once

#include <string>
#include <vector>

#include "eulerian/poset.hpp"

namespace eulerian {

struct CorpusEntry {
  std::string name;  // construction expression
  RankedPoset poset;
};

/// Eulerian posets used by the sweeping checks: Boolean algebras of rank at
/// most 5, doubled chains, dp posets with n <= 6 and N <= 2, lemma3(2), and
/// joins and duals of these.
const std::vector<CorpusEntry>& eulerian_corpus();

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> rows;   // one line per checked instance
  std::vector<std::string> notes;  // findings that do not fail the suite
  double seconds = 0.0;
  double time_limit = 0.0;         // 0 when the criterion has no runtime bound
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" is not accepted here). Throws InvalidArgument for
/// unknown names.
SuiteResult run_suite(const std::string& name);

}  // namespace eulerian
