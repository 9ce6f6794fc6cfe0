#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "memotab/grammar_dsl.hpp"
#include "memotab/grammars.hpp"

namespace memotab {

// One measured cell: median wall-clock seconds to run the grammar on a^n
// and traverse every resulting chart.
struct BenchRecord {
  std::string grammar;
  int n = 0;
  double seconds = 0.0;
  bool accepted = false;
};

// A grammar to benchmark: either a built-in id or a rule set loaded from a
// DSL file. Instantiated into a fresh session per measured cell.
struct BenchSource {
  std::string name;
  std::optional<GrammarId> builtin;
  RuleSet rules;

  // Resolves a --grammars item: a built-in id, or a readable DSL file.
  // Throws (DslError or std::runtime_error) on unreadable or bad files.
  static BenchSource resolve(const std::string& source);
};

BuiltGrammar instantiate(Session& sess, const BenchSource& src);

// Runs every (grammar, length) cell sequentially, reps times each, and
// reports the median. Timing covers the run plus a full traversal of all
// charts; building the grammar and the session is excluded.
std::vector<BenchRecord> run_bench(const std::vector<BenchSource>& sources,
                                   const std::vector<int>& lengths, int reps);

// Least-squares slope of log(seconds) against log(n). Cells with n <= 0 or
// non-positive seconds are skipped; nullopt when fewer than 2 usable cells
// remain or all lengths coincide.
std::optional<double> loglog_slope(const std::vector<std::pair<int, double>>& cells);

// Per-grammar slopes over the records, in first-appearance order.
std::vector<std::pair<std::string, double>> bench_slopes(const std::vector<BenchRecord>& records);

// Stable schema: header `grammar,n,seconds,accepted`, one row per record.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

void write_table(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace memotab
