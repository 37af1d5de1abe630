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

#ifndef SFCGO_RUN_RESULT_HPP_
#define SFCGO_RUN_RESULT_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfcgo/geometry.hpp"

namespace sfcgo {

// Black-box objective F(y), y in R^N.
using Objective = std::function<double(std::span<const double>)>;

enum class StopReason {
  kBudget,      // trial budget exhausted
  kSolved,      // a trial fell inside the target ball
  kStagnation,  // no interval or box qualified for subdivision
};

std::string_view to_string(StopReason r);
StopReason stop_reason_from_string(std::string_view s);

// Terminates a run when a trial lands within `radius` of `target`, or when
// `max_trials` trials have been spent. Without a target only the budget (and
// stagnation) can end a run.
struct StoppingRule {
  std::optional<Point> target;
  double radius = 0.0;
  std::int64_t max_trials = 1000000;

  // Throws std::invalid_argument if a target is set with radius <= 0 or
  // max_trials < 1.
  void validate() const;
  bool in_ball(std::span<const double> y) const;
};

struct TrialRecord {
  std::int64_t trial = 0;    // 1-based
  std::optional<double> x;   // curve abscissa; absent for box-based methods
  Point y;
  double f = 0.0;
};

struct RunResult {
  std::string algorithm;
  StopReason stop_reason = StopReason::kBudget;
  std::int64_t trials = 0;
  std::int64_t iterations = 0;
  std::int64_t subdivisions = 0;
  double f_min = 0.0;
  std::optional<double> x_min;
  Point y_min;
  // Trial count at the end of the iteration in which the target ball was hit.
  std::optional<std::int64_t> solved_at;
  std::vector<TrialRecord> trace;

  bool solved() const noexcept { return solved_at.has_value(); }
};

// "trial,x,y_1..y_N,f,f_min"; x is empty for box-based methods.
void write_trace_csv(std::ostream& os, const RunResult& r);

// JSON document of the run's counters and incumbent; the trace is included
// only on request.
std::string to_json(const RunResult& r, bool include_trace = false);

}  // namespace sfcgo

#endif  // SFCGO_RUN_RESULT_HPP_
