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

#ifndef SFCGO_MGAS_HPP_
#define SFCGO_MGAS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "sfcgo/curve.hpp"
#include "sfcgo/diagram.hpp"
#include "sfcgo/geometry.hpp"
#include "sfcgo/hull.hpp"
#include "sfcgo/run_result.hpp"

namespace sfcgo {

// Length threshold used when none is given: 1e-4 for N <= 2, 1e-7 for N = 3
// and 1e-10 above.
double default_eta(std::size_t dim);

struct MgasConfig {
  std::size_t dim = 2;
  int level = 10;
  double epsilon = 1e-4;  // xi = epsilon * |f_min|
  double eta = 1e-4;      // only intervals longer than eta are subdivided
  std::int64_t max_trials = 1000000;
  Box box = Box::unit(2);

  // epsilon = 1e-4, level = 10, eta = default_eta(dim).
  static MgasConfig defaults(Box box);

  // Throws std::invalid_argument on a bad box, negative epsilon or eta,
  // max_trials < 3, or dim * level beyond the curve's index width.
  void validate() const;
};

// Search state of one run. The partition of [0, 1] is kept as a flat list of
// live intervals plus, per trisection depth, the intervals ordered by
// (f_mid, id); every interval of a depth shares one h, so the diagram's
// columns are exactly these depth buckets.
class OptimizerState {
 public:
  using Column = std::set<std::pair<double, IntervalId>>;

  const CurveMap& curve() const noexcept { return curve_; }
  const std::vector<IntervalRecord>& partition() const noexcept {
    return partition_;
  }
  const IntervalRecord& interval(IntervalId id) const;

  std::int64_t iteration() const noexcept { return iteration_; }
  std::int64_t interval_count() const noexcept {
    return static_cast<std::int64_t>(partition_.size());
  }
  std::int64_t trial_count() const noexcept {
    return static_cast<std::int64_t>(trace_.size());
  }
  std::int64_t subdivisions() const noexcept { return subdivisions_; }

  double f_min() const noexcept { return f_min_; }
  double x_min() const noexcept { return x_min_; }
  const Point& y_min() const noexcept { return y_min_; }
  const std::vector<TrialRecord>& trace() const noexcept { return trace_; }

  // Length of the longest interval in the partition.
  double max_interval_length() const;

  // One diagram point per nonempty depth: the lowest f_mid (smallest id on
  // ties).
  std::vector<DiagramPoint> column_minima() const;

 private:
  friend OptimizerState initialize(const MgasConfig&, const Objective&);
  friend struct MgasStepper;

  explicit OptimizerState(CurveMap curve);

  double evaluate(double x, const Objective& objective);
  void insert(const IntervalRecord& iv);
  IntervalRecord remove(IntervalId id);

  CurveMap curve_;
  std::vector<IntervalRecord> partition_;
  std::vector<std::size_t> slot_of_;  // id -> index into partition_
  std::array<Column, kMaxTrisectionDepth + 1> columns_;
  std::array<double, kMaxTrisectionDepth + 1> h_by_depth_{};
  IntervalId next_id_ = 0;
  std::int64_t iteration_ = 1;
  std::int64_t subdivisions_ = 0;
  double f_min_ = 0.0;
  double x_min_ = 0.0;
  Point y_min_;
  std::vector<TrialRecord> trace_;
};

// Splits [0, 1] into thirds and evaluates the objective at p_M(1/6),
// p_M(1/2) and p_M(5/6).
OptimizerState initialize(const MgasConfig& cfg, const Objective& objective);

struct IterationReport {
  std::int64_t iteration = 0;    // k of the sweep just performed
  double f_min = 0.0;            // incumbent frozen at selection time
  double xi = 0.0;
  HullSelection hull;            // all nondominated intervals, before filters
  std::vector<IntervalId> selected;  // passed both thresholds, in processing order
  std::size_t subdivided = 0;
  bool budget_exhausted = false;  // stopped early: next split would pass max_trials
};

// One iteration: select the nondominated intervals that pass the improvement
// threshold and the length threshold, then trisect them longest first, two
// new trials each. A sweep with nothing selected changes nothing.
IterationReport iterate(OptimizerState& state, const MgasConfig& cfg,
                        const Objective& objective);

using IterationCallback =
    std::function<void(const OptimizerState&, const IterationReport&)>;

// Iterates until the stopping rule fires or nothing is left to subdivide.
// The trial budget is min(cfg.max_trials, stop.max_trials). A run that hits
// the target reports the trial count at the end of that iteration.
RunResult run(const MgasConfig& cfg, const Objective& objective,
              const StoppingRule& stop,
              const IterationCallback& on_iteration = {});

// Lower bound for F over the whole box given a lower bound u_star along the
// curve p_M: u_star - L * 2^-(M+1) * ||b - a|| (half a cell diagonal; for the
// unit cube this is 2^-(M+1) L sqrt(N)). Throws std::domain_error if L <= 0.
double global_lower_bound(double u_star, double lipschitz,
                          const MgasConfig& cfg);

}  // namespace sfcgo

#endif  // SFCGO_MGAS_HPP_
