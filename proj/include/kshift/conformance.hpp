#pragma once

#include <string>
#include <vector>

#include "kshift/automata.hpp"

namespace kshift {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string witness;  // first counterexample or error, empty when ok
};

// The cross-module invariant suite over one graph: validation, the
// factorization algebra, metric and pattern properties, automata laws,
// reconstruction round trips, and groupoid axioms.  Deterministic: fixed
// seeds, fixed sample order.  Stops adding module checks only when the graph
// itself fails validation (nothing downstream is well defined then).
std::vector<CheckResult> run_conformance(const KGraph& g, bool allow_sources = false);

}  // namespace kshift
