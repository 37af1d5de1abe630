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

#ifndef SFCGO_DIRECT_HPP_
#define SFCGO_DIRECT_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sfcgo/diagram.hpp"
#include "sfcgo/geometry.hpp"
#include "sfcgo/hull.hpp"
#include "sfcgo/run_result.hpp"

namespace sfcgo {

// Baseline DIRECT (DIviding RECTangles) in the Euclidean metric.
struct DirectConfig {
  std::size_t dim = 2;
  double epsilon = 1e-4;
  std::int64_t max_trials = 1000000;
  Box box = Box::unit(2);

  void validate() const;
};

// A hyperrectangle of the normalized unit cube. Along coordinate j it is the
// cell offsets[j] of the 3^levels[j]-grid, so sides and center are exact
// rationals.
struct BoxRecord {
  IntervalId id = 0;
  std::vector<int> levels;
  std::vector<std::uint64_t> offsets;
  double f_center = 0.0;
  double measure = 0.0;  // half the diagonal, 0.5 * ||side_lengths||

  Point center() const;  // unit coordinates
  Point side_lengths() const;
  int level_sum() const;
  int min_level() const;
};

// Half-diagonal of a box whose coordinate levels are all k or k + 1 and sum to
// level_sum. Depends only on level_sum, so equal-size boxes share a bit-exact
// abscissa in the diagram.
double direct_measure(int level_sum, std::size_t dim);

class DirectState {
 public:
  const std::vector<BoxRecord>& boxes() const noexcept { return boxes_; }
  const BoxRecord& box(IntervalId id) const;
  std::int64_t iteration() const noexcept { return iteration_; }
  std::int64_t trial_count() const noexcept {
    return static_cast<std::int64_t>(trace_.size());
  }
  std::int64_t divisions() const noexcept { return divisions_; }
  double f_min() const noexcept { return f_min_; }
  const Point& y_min() const noexcept { return y_min_; }
  const std::vector<TrialRecord>& trace() const noexcept { return trace_; }

  // Lowest f_center per box size (smallest id on ties), with h = measure.
  std::vector<DiagramPoint> column_minima() const;

 private:
  friend struct DirectStepper;
  friend DirectState direct_initialize(const DirectConfig&, const Objective&);

  explicit DirectState(Box box) : domain_(std::move(box)) {}

  double evaluate(const std::vector<int>& levels,
                  const std::vector<std::uint64_t>& offsets,
                  const Objective& objective);
  void insert(BoxRecord b);
  BoxRecord remove(IntervalId id);

  Box domain_;
  std::vector<BoxRecord> boxes_;
  std::vector<std::size_t> slot_of_;
  std::vector<std::set<std::pair<double, IntervalId>>> columns_;  // by level sum
  IntervalId next_id_ = 0;
  std::int64_t iteration_ = 1;
  std::int64_t divisions_ = 0;
  double f_min_ = 0.0;
  Point y_min_;
  std::vector<TrialRecord> trace_;
};

// Samples the center of the box.
DirectState direct_initialize(const DirectConfig& cfg, const Objective& objective);

struct DirectIterationReport {
  std::int64_t iteration = 0;
  double f_min = 0.0;
  double xi = 0.0;
  HullSelection hull;
  std::vector<IntervalId> selected;
  std::size_t divided = 0;
  bool budget_exhausted = false;
};

// Selects the potentially optimal boxes (lower-right hull of
// (measure, f_center) filtered by xi = epsilon * |f_min|) and divides each
// along its longest sides: samples center +- side/3 on every longest
// coordinate, then trisects coordinates in order of increasing
// min(f(c + d e_i), f(c - d e_i)) so that the best points keep the largest
// boxes.
DirectIterationReport direct_iterate(DirectState& state, const DirectConfig& cfg,
                                     const Objective& objective);

RunResult direct_run(const DirectConfig& cfg, const Objective& objective,
                     const StoppingRule& stop);

}  // namespace sfcgo

#endif  // SFCGO_DIRECT_HPP_
