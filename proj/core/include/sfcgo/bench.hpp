// Copyright 2026 The sfcgo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SFCGO_BENCH_HPP_
#define SFCGO_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfcgo/gkls.hpp"
#include "sfcgo/run_result.hpp"

namespace sfcgo {

inline constexpr int kResultSchemaVersion = 1;

enum class Algorithm { kMgas, kDirect };

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

struct BenchParams {
  int level = 10;
  double epsilon = 1e-4;
  std::optional<double> eta;     // defaults to gkls_class_eta(class)
  std::optional<double> radius;  // defaults to gkls_class_radius(class)
  std::int64_t max_trials = 1000000;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Outcome of one function of a class. `trials` is the number of trials
// actually spent: the count at the end of the solving iteration, or the
// budget/stagnation point for unsolved runs.
struct FunctionOutcome {
  int func_index = 0;  // 1-based
  bool solved = false;
  std::int64_t trials = 0;
  std::int64_t iterations = 0;
  StopReason stop_reason = StopReason::kBudget;
  double f_min = 0.0;
  std::string error;  // non-empty if the function could not be generated
};

struct ClassReport {
  int class_id = 0;
  Algorithm algo = Algorithm::kMgas;
  std::int64_t max_trials = 0;
  std::vector<FunctionOutcome> runs;

  // Unsolved runs enter the average and maximum as max_trials, which makes
  // the average a lower bound (average_is_lower_bound) in that case.
  double average = 0.0;
  std::int64_t maximum = 0;
  int unsolved = 0;
  bool average_is_lower_bound = false;

  int solved_count() const { return static_cast<int>(runs.size()) - unsolved; }
  int stagnated_count() const;
};

// Runs the first `count` functions (indices 1..count) of the class with the
// chosen method, stopping each at the ball of radius rho around its global
// minimizer or at the budget. Functions run concurrently; the report is
// independent of the thread count.
ClassReport run_class(Algorithm algo, const GklsClassSpec& spec, int count,
                      const BenchParams& params);

// One function of a class; exposed for the CLI and tests.
RunResult run_function(Algorithm algo, const GklsFunction& g,
                       const BenchParams& params);

struct CharacteristicPoint {
  std::int64_t budget = 0;
  int solved_count = 0;
};

// Log-spaced integer budgets from lo to hi inclusive, deduplicated.
std::vector<std::int64_t> log_budget_grid(std::int64_t lo, std::int64_t hi,
                                          int points = 50);

// Number of functions solved within each budget.
std::vector<CharacteristicPoint> operating_characteristic(
    const ClassReport& report, std::span<const std::int64_t> budgets);
std::vector<CharacteristicPoint> operating_characteristic(
    std::span<const std::optional<std::int64_t>> solved_at,
    std::span<const std::int64_t> budgets);

struct EtaSweepRow {
  double eta = 0.0;
  double average = 0.0;
  std::int64_t maximum = 0;
  int solved = 0;
  int unsolved = 0;
  int stagnated = 0;
};

// MGAS over the class once per eta value.
std::vector<EtaSweepRow> eta_sweep(const GklsClassSpec& spec,
                                   std::span<const double> eta_values,
                                   int count, const BenchParams& params);

// CSV "class,func_index,algo,solved,trials,stop_reason".
void write_runs_csv_header(std::ostream& os);
void write_runs_csv(std::ostream& os, const ClassReport& report);

// CSV "budget,solved_count,algo,class".
void write_characteristics_csv_header(std::ostream& os);
void write_characteristics_csv(std::ostream& os, const ClassReport& report,
                               std::span<const std::int64_t> budgets);

// CSV "eta,average,maximum,solved,unsolved,stagnated".
void write_sweep_csv(std::ostream& os, std::span<const EtaSweepRow> rows);

// Per-run record: schema version, configuration, seed, stop reason, counters.
std::string outcome_json(const ClassReport& report, const GklsClassSpec& spec,
                         const BenchParams& params,
                         const FunctionOutcome& outcome);

// Class summary (average, maximum, unsolved, lower-bound flag).
std::string report_json(const ClassReport& report, const GklsClassSpec& spec,
                        const BenchParams& params);

}  // namespace sfcgo

#endif  // SFCGO_BENCH_HPP_
