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

#include "sfcgo/direct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sfcgo {
namespace {

constexpr std::size_t kNoSlot = std::numeric_limits<std::size_t>::max();

double coordinate_center(int level, std::uint64_t offset) {
  return static_cast<double>(2 * offset + 1) /
         static_cast<double>(2 * power_of_three(level));
}

}  // namespace

void DirectConfig::validate() const {
  if (box.dim() != dim) {
    throw std::invalid_argument("direct: box dimension does not match dim");
  }
  box.validate();
  if (!(epsilon >= 0.0)) throw std::invalid_argument("direct: epsilon must be >= 0");
  if (max_trials < 1) throw std::invalid_argument("direct: max_trials must be >= 1");
}

Point BoxRecord::center() const {
  Point c(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) {
    c[j] = coordinate_center(levels[j], offsets[j]);
  }
  return c;
}

Point BoxRecord::side_lengths() const {
  Point s(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) {
    s[j] = inverse_power_of_three(levels[j]);
  }
  return s;
}

int BoxRecord::level_sum() const {
  return std::accumulate(levels.begin(), levels.end(), 0);
}

int BoxRecord::min_level() const {
  return *std::min_element(levels.begin(), levels.end());
}

double direct_measure(int level_sum, std::size_t dim) {
  const int n = static_cast<int>(dim);
  const int k = level_sum / n;
  const int deeper = level_sum - n * k;  // coordinates at level k + 1
  const double s0 = inverse_power_of_three(k);
  const double s1 = k + 1 <= kMaxTrisectionDepth ? inverse_power_of_three(k + 1)
                                                 : s0 / 3.0;
  return 0.5 * std::sqrt(static_cast<double>(n - deeper) * s0 * s0 +
                         static_cast<double>(deeper) * s1 * s1);
}

const BoxRecord& DirectState::box(IntervalId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= slot_of_.size() ||
      slot_of_[static_cast<std::size_t>(id)] == kNoSlot) {
    throw std::out_of_range("direct: no live box with id " + std::to_string(id));
  }
  return boxes_[slot_of_[static_cast<std::size_t>(id)]];
}

std::vector<DiagramPoint> DirectState::column_minima() const {
  std::vector<DiagramPoint> pts;
  for (std::size_t s = 0; s < columns_.size(); ++s) {
    if (columns_[s].empty()) continue;
    const auto& [f, id] = *columns_[s].begin();
    pts.push_back(DiagramPoint{id, box(id).measure, f});
  }
  return pts;
}

double DirectState::evaluate(const std::vector<int>& levels,
                             const std::vector<std::uint64_t>& offsets,
                             const Objective& objective) {
  Point unit(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) {
    unit[j] = coordinate_center(levels[j], offsets[j]);
  }
  Point y = domain_.from_unit(unit);
  const double f = objective(y);
  if (trace_.empty() || f < f_min_) {
    f_min_ = f;
    y_min_ = y;
  }
  trace_.push_back(TrialRecord{static_cast<std::int64_t>(trace_.size()) + 1,
                               std::nullopt, std::move(y), f});
  return f;
}

void DirectState::insert(BoxRecord b) {
  const auto id = static_cast<std::size_t>(b.id);
  const auto sum = static_cast<std::size_t>(b.level_sum());
  b.measure = direct_measure(b.level_sum(), b.levels.size());
  if (slot_of_.size() <= id) slot_of_.resize(id + 1, kNoSlot);
  if (columns_.size() <= sum) columns_.resize(sum + 1);
  columns_[sum].emplace(b.f_center, b.id);
  slot_of_[id] = boxes_.size();
  boxes_.push_back(std::move(b));
}

BoxRecord DirectState::remove(IntervalId id) {
  BoxRecord b = box(id);
  const std::size_t slot = slot_of_[static_cast<std::size_t>(id)];
  if (slot + 1 != boxes_.size()) {
    boxes_[slot] = std::move(boxes_.back());
    slot_of_[static_cast<std::size_t>(boxes_[slot].id)] = slot;
  }
  boxes_.pop_back();
  slot_of_[static_cast<std::size_t>(id)] = kNoSlot;
  columns_[static_cast<std::size_t>(b.level_sum())].erase({b.f_center, b.id});
  return b;
}

DirectState direct_initialize(const DirectConfig& cfg, const Objective& objective) {
  cfg.validate();
  DirectState state(cfg.box);
  BoxRecord root;
  root.id = state.next_id_++;
  root.levels.assign(cfg.dim, 0);
  root.offsets.assign(cfg.dim, 0);
  root.f_center = state.evaluate(root.levels, root.offsets, objective);
  state.insert(std::move(root));
  return state;
}

struct DirectStepper {
  static void divide(DirectState& s, IntervalId id, const Objective& objective) {
    BoxRecord parent = s.remove(id);
    const int lmin = parent.min_level();

    struct Probe {
      std::size_t dim;
      double lo_f;
      double hi_f;
      double best() const { return std::min(lo_f, hi_f); }
    };
    std::vector<Probe> probes;
    for (std::size_t j = 0; j < parent.levels.size(); ++j) {
      if (parent.levels[j] != lmin) continue;
      std::vector<int> lv = parent.levels;
      std::vector<std::uint64_t> off = parent.offsets;
      lv[j] += 1;
      off[j] = 3 * parent.offsets[j];
      const double lo_f = s.evaluate(lv, off, objective);
      off[j] = 3 * parent.offsets[j] + 2;
      const double hi_f = s.evaluate(lv, off, objective);
      probes.push_back(Probe{j, lo_f, hi_f});
    }
    std::stable_sort(probes.begin(), probes.end(),
                     [](const Probe& l, const Probe& r) { return l.best() < r.best(); });

    // Split the best coordinate first: its two new boxes are the largest.
    BoxRecord core = std::move(parent);
    for (const auto& p : probes) {
      const std::uint64_t base = 3 * core.offsets[p.dim];
      core.levels[p.dim] += 1;
      core.offsets[p.dim] = base + 1;

      BoxRecord lo = core;
      lo.id = s.next_id_++;
      lo.offsets[p.dim] = base;
      lo.f_center = p.lo_f;
      BoxRecord hi = core;
      hi.id = s.next_id_++;
      hi.offsets[p.dim] = base + 2;
      hi.f_center = p.hi_f;
      s.insert(std::move(lo));
      s.insert(std::move(hi));
    }
    core.id = s.next_id_++;
    s.insert(std::move(core));
    ++s.divisions_;
  }

  static DirectIterationReport iterate(DirectState& s, const DirectConfig& cfg,
                                       const Objective& objective) {
    DirectIterationReport rep;
    rep.iteration = s.iteration_;
    rep.f_min = s.f_min_;
    rep.xi = cfg.epsilon * std::abs(s.f_min_);

    const std::vector<DiagramPoint> points = s.column_minima();
    rep.hull = nondominated(points);
    for (const auto& v : rep.hull.vertices) {
      if (!passes_improvement(v, rep.f_min, rep.xi)) continue;
      if (s.box(v.id).min_level() >= kMaxTrisectionDepth) continue;
      rep.selected.push_back(v.id);
    }
    // Hull order is by increasing measure; divide the largest first.
    std::reverse(rep.selected.begin(), rep.selected.end());

    for (const IntervalId id : rep.selected) {
      const BoxRecord& b = s.box(id);
      const auto longest = static_cast<std::int64_t>(
          std::count(b.levels.begin(), b.levels.end(), b.min_level()));
      if (s.trial_count() + 2 * longest > cfg.max_trials) {
        rep.budget_exhausted = true;
        break;
      }
      divide(s, id, objective);
      ++rep.divided;
    }
    if (rep.divided > 0) ++s.iteration_;
    return rep;
  }
};

DirectIterationReport direct_iterate(DirectState& state, const DirectConfig& cfg,
                                     const Objective& objective) {
  return DirectStepper::iterate(state, cfg, objective);
}

RunResult direct_run(const DirectConfig& cfg, const Objective& objective,
                     const StoppingRule& stop) {
  stop.validate();
  DirectConfig local = cfg;
  local.max_trials = std::min(cfg.max_trials, stop.max_trials);
  DirectState state = direct_initialize(local, objective);

  RunResult result;
  result.algorithm = "direct";
  auto hit_since = [&](std::size_t from) {
    const auto& tr = state.trace();
    for (std::size_t i = from; i < tr.size(); ++i) {
      if (stop.in_ball(tr[i].y)) return true;
    }
    return false;
  };

  if (hit_since(0)) {
    result.stop_reason = StopReason::kSolved;
    result.solved_at = state.trial_count();
  } else {
    for (;;) {
      if (state.trial_count() + 2 > local.max_trials) {
        result.stop_reason = StopReason::kBudget;
        break;
      }
      const std::size_t before = state.trace().size();
      const DirectIterationReport rep = direct_iterate(state, local, objective);
      if (hit_since(before)) {
        result.stop_reason = StopReason::kSolved;
        result.solved_at = state.trial_count();
        break;
      }
      if (rep.budget_exhausted) {
        result.stop_reason = StopReason::kBudget;
        break;
      }
      if (rep.divided == 0) {
        result.stop_reason = StopReason::kStagnation;
        break;
      }
    }
  }

  result.trials = state.trial_count();
  result.iterations = state.iteration() - 1;
  result.subdivisions = state.divisions();
  result.f_min = state.f_min();
  result.y_min = state.y_min();
  result.trace = state.trace();
  return result;
}

}  // namespace sfcgo
