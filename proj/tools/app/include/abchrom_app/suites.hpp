#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace abchrom::app {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string title;
  int criterion = 0;
  bool observational = false;  ///< findings are reported, never failed
  std::vector<Check> checks;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  unsigned threads = 0;             ///< 0 = hardware concurrency
  std::uint64_t seed = 20240601;
  std::size_t random_graphs = 1000;
  int random_max_n = 9;
  int library_max_n = 6;            ///< exhaustive connected-graph library
  int probe_max_n = 7;              ///< the observational probe scans at least this far
  int heuristic_max_n = 7;
  int heuristic_runs = 100;
  std::uint64_t budget = 50'000'000;
};

/// closed-forms, joins, figures, theorem3, bounds, gap-families, extremal, heuristic, probe.
std::vector<std::string> suite_names();

/// Also accepts "corollary-basic2" for closed-forms. Throws InvalidFamily on an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& opts = {});

/// Suite implementing acceptance criterion 1..9.
std::string suite_for_criterion(int criterion);

}  // namespace abchrom::app
