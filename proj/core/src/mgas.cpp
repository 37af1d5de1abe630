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

#include "sfcgo/mgas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sfcgo {
namespace {

constexpr std::size_t kNoSlot = std::numeric_limits<std::size_t>::max();

}  // namespace

double default_eta(std::size_t dim) {
  if (dim <= 2) return 1e-4;
  if (dim == 3) return 1e-7;
  return 1e-10;
}

MgasConfig MgasConfig::defaults(Box box) {
  MgasConfig cfg;
  cfg.dim = box.dim();
  cfg.eta = default_eta(cfg.dim);
  cfg.box = std::move(box);
  return cfg;
}

void MgasConfig::validate() const {
  if (box.dim() != dim) {
    throw std::invalid_argument("mgas: box dimension does not match dim");
  }
  box.validate();
  if (!(epsilon >= 0.0)) throw std::invalid_argument("mgas: epsilon must be >= 0");
  if (!(eta >= 0.0)) throw std::invalid_argument("mgas: eta must be >= 0");
  if (max_trials < 3) throw std::invalid_argument("mgas: max_trials must be >= 3");
  if (level < 1) throw std::invalid_argument("mgas: level must be >= 1");
  if (static_cast<long long>(dim) * level > max_index_bits()) {
    throw std::invalid_argument("mgas: dim * level = " +
                                std::to_string(dim * level) + " exceeds " +
                                std::to_string(max_index_bits()) + " bits");
  }
}

OptimizerState::OptimizerState(CurveMap curve) : curve_(std::move(curve)) {
  for (int d = 0; d <= kMaxTrisectionDepth; ++d) {
    h_by_depth_[static_cast<std::size_t>(d)] =
        h_coordinate(inverse_power_of_three(d), curve_.dim());
  }
}

const IntervalRecord& OptimizerState::interval(IntervalId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= slot_of_.size() ||
      slot_of_[static_cast<std::size_t>(id)] == kNoSlot) {
    throw std::out_of_range("mgas: no live interval with id " +
                            std::to_string(id));
  }
  return partition_[slot_of_[static_cast<std::size_t>(id)]];
}

double OptimizerState::max_interval_length() const {
  for (int d = 0; d <= kMaxTrisectionDepth; ++d) {
    if (!columns_[static_cast<std::size_t>(d)].empty()) {
      return inverse_power_of_three(d);
    }
  }
  return 0.0;
}

std::vector<DiagramPoint> OptimizerState::column_minima() const {
  std::vector<DiagramPoint> pts;
  for (std::size_t d = 0; d < columns_.size(); ++d) {
    if (columns_[d].empty()) continue;
    const auto& [f, id] = *columns_[d].begin();
    pts.push_back(DiagramPoint{id, h_by_depth_[d], f});
  }
  return pts;
}

double OptimizerState::evaluate(double x, const Objective& objective) {
  Point y = curve_.map(x);
  const double f = objective(y);
  // Strict improvement only: the earliest trial keeps the record on ties.
  if (trace_.empty() || f < f_min_) {
    f_min_ = f;
    x_min_ = x;
    y_min_ = y;
  }
  trace_.push_back(TrialRecord{static_cast<std::int64_t>(trace_.size()) + 1, x,
                               std::move(y), f});
  return f;
}

void OptimizerState::insert(const IntervalRecord& iv) {
  const auto id = static_cast<std::size_t>(iv.id);
  if (slot_of_.size() <= id) slot_of_.resize(id + 1, kNoSlot);
  slot_of_[id] = partition_.size();
  partition_.push_back(iv);
  columns_[static_cast<std::size_t>(iv.depth)].emplace(iv.f_mid, iv.id);
}

IntervalRecord OptimizerState::remove(IntervalId id) {
  const IntervalRecord iv = interval(id);
  const std::size_t slot = slot_of_[static_cast<std::size_t>(id)];
  if (slot + 1 != partition_.size()) {
    partition_[slot] = partition_.back();
    slot_of_[static_cast<std::size_t>(partition_[slot].id)] = slot;
  }
  partition_.pop_back();
  slot_of_[static_cast<std::size_t>(id)] = kNoSlot;
  columns_[static_cast<std::size_t>(iv.depth)].erase({iv.f_mid, iv.id});
  return iv;
}

OptimizerState initialize(const MgasConfig& cfg, const Objective& objective) {
  cfg.validate();
  OptimizerState state(CurveMap(cfg.dim, cfg.level, cfg.box));
  for (std::uint64_t k = 0; k < 3; ++k) {
    IntervalRecord iv = IntervalRecord::make(state.next_id_++, 1, k, 0.0);
    iv.f_mid = state.evaluate(iv.midpoint(), objective);
    state.insert(iv);
  }
  return state;
}

// Grants iterate() access to the state's mutators.
struct MgasStepper {
  static void subdivide(OptimizerState& s, IntervalId id,
                        const Objective& objective) {
    const IntervalRecord parent = s.remove(id);
    const int depth = parent.depth + 1;
    const std::uint64_t base = 3 * parent.offset;

    IntervalRecord left = IntervalRecord::make(s.next_id_++, depth, base, 0.0);
    IntervalRecord middle =
        IntervalRecord::make(s.next_id_++, depth, base + 1, parent.f_mid);
    IntervalRecord right =
        IntervalRecord::make(s.next_id_++, depth, base + 2, 0.0);
    left.f_mid = s.evaluate(parent.left_child_midpoint(), objective);
    right.f_mid = s.evaluate(parent.right_child_midpoint(), objective);

    s.insert(left);
    s.insert(middle);
    s.insert(right);
    ++s.subdivisions_;
  }

  static IterationReport iterate(OptimizerState& s, const MgasConfig& cfg,
                                 const Objective& objective) {
    IterationReport rep;
    rep.iteration = s.iteration_;
    rep.f_min = s.f_min_;
    rep.xi = cfg.epsilon * std::abs(s.f_min_);

    const std::vector<DiagramPoint> points = s.column_minima();
    rep.hull = nondominated(points);

    std::vector<const IntervalRecord*> chosen;
    for (const auto& v : rep.hull.vertices) {
      if (!passes_improvement(v, rep.f_min, rep.xi)) continue;
      const IntervalRecord& iv = s.interval(v.id);
      if (!(iv.length() > cfg.eta)) continue;
      if (iv.depth >= kMaxTrisectionDepth) continue;
      chosen.push_back(&iv);
    }
    std::sort(chosen.begin(), chosen.end(),
              [](const IntervalRecord* l, const IntervalRecord* r) {
                if (l->depth != r->depth) return l->depth < r->depth;
                return l->id < r->id;
              });
    for (const auto* iv : chosen) rep.selected.push_back(iv->id);

    for (const IntervalId id : rep.selected) {
      if (s.trial_count() + 2 > cfg.max_trials) {
        rep.budget_exhausted = true;
        break;
      }
      subdivide(s, id, objective);
      ++rep.subdivided;
    }
    if (rep.subdivided > 0) ++s.iteration_;
    return rep;
  }
};

IterationReport iterate(OptimizerState& state, const MgasConfig& cfg,
                        const Objective& objective) {
  return MgasStepper::iterate(state, cfg, objective);
}

RunResult run(const MgasConfig& cfg, const Objective& objective,
              const StoppingRule& stop, const IterationCallback& on_iteration) {
  stop.validate();
  MgasConfig local = cfg;
  local.max_trials = std::min(cfg.max_trials, stop.max_trials);

  OptimizerState state = initialize(local, objective);

  RunResult result;
  result.algorithm = "mgas";
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
      const IterationReport rep = iterate(state, local, objective);
      if (on_iteration) on_iteration(state, rep);
      if (hit_since(before)) {
        result.stop_reason = StopReason::kSolved;
        result.solved_at = state.trial_count();
        break;
      }
      if (rep.budget_exhausted) {
        result.stop_reason = StopReason::kBudget;
        break;
      }
      if (rep.subdivided == 0) {
        result.stop_reason = StopReason::kStagnation;
        break;
      }
    }
  }

  result.trials = state.trial_count();
  result.iterations = state.iteration() - 1;
  result.subdivisions = state.subdivisions();
  result.f_min = state.f_min();
  result.x_min = state.x_min();
  result.y_min = state.y_min();
  result.trace = state.trace();
  return result;
}

double global_lower_bound(double u_star, double lipschitz,
                          const MgasConfig& cfg) {
  if (!(lipschitz > 0.0)) {
    throw std::domain_error("global_lower_bound: Lipschitz constant must be > 0");
  }
  return u_star - lipschitz * std::ldexp(1.0, -(cfg.level + 1)) *
                      cfg.box.diagonal();
}

}  // namespace sfcgo
