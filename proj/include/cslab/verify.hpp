#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cslab::verify {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Report = std::function<void(const CaseResult&)>;

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") up to size bound `max`, reporting each case as it
/// finishes. Returns true when every case passed. Extra lines (tables) go to
/// `echo`. Unknown suite names throw InvalidInput.
///
/// Bounds: raney, injectivity and fs-characterization use (k-1)n <= max for
/// k = 2, 3, 4; chung-feller uses n <= max; huq uses (k-1)n <= max for bridges
/// and vector length <= min(max, 6) for the cyclic-shift profiles; type-oracle
/// uses kn+1 <= max lattice points; continuant uses n <= max; orbit-genfun
/// uses n <= max for both built-in classes.
bool run_suite(const std::string& suite, int max, const Report& report,
               const std::function<void(const std::string&)>& echo);

}  // namespace cslab::verify
