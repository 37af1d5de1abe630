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

#include "sfcgo/run_result.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace sfcgo {

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::kBudget:
      return "budget";
    case StopReason::kSolved:
      return "solved";
    case StopReason::kStagnation:
      return "stagnation";
  }
  return "unknown";
}

StopReason stop_reason_from_string(std::string_view s) {
  if (s == "budget") return StopReason::kBudget;
  if (s == "solved") return StopReason::kSolved;
  if (s == "stagnation") return StopReason::kStagnation;
  throw std::invalid_argument("unknown stop reason: " + std::string(s));
}

void StoppingRule::validate() const {
  if (max_trials < 1) {
    throw std::invalid_argument("stopping rule: max_trials must be >= 1");
  }
  if (target && !(radius > 0.0)) {
    throw std::invalid_argument("stopping rule: radius must be positive");
  }
}

bool StoppingRule::in_ball(std::span<const double> y) const {
  if (!target || target->size() != y.size()) return false;
  return distance(*target, y) <= radius;
}

void write_trace_csv(std::ostream& os, const RunResult& r) {
  const std::size_t dim = r.trace.empty() ? r.y_min.size() : r.trace[0].y.size();
  os << "trial,x";
  for (std::size_t j = 1; j <= dim; ++j) os << ",y_" << j;
  os << ",f,f_min\n";
  const auto old_precision = os.precision(17);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : r.trace) {
    best = std::min(best, t.f);
    os << t.trial << ',';
    if (t.x) os << *t.x;
    for (double v : t.y) os << ',' << v;
    os << ',' << t.f << ',' << best << '\n';
  }
  os.precision(old_precision);
}

std::string to_json(const RunResult& r, bool include_trace) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["stop_reason"] = std::string(to_string(r.stop_reason));
  j["trials"] = r.trials;
  j["iterations"] = r.iterations;
  j["subdivisions"] = r.subdivisions;
  j["f_min"] = r.f_min;
  j["x_min"] = r.x_min ? nlohmann::ordered_json(*r.x_min) : nullptr;
  j["y_min"] = r.y_min;
  j["solved"] = r.solved();
  j["solved_at"] = r.solved_at ? nlohmann::ordered_json(*r.solved_at) : nullptr;
  if (include_trace) {
    auto& arr = j["trace"] = nlohmann::ordered_json::array();
    for (const auto& t : r.trace) {
      arr.push_back({{"trial", t.trial},
                     {"x", t.x ? nlohmann::ordered_json(*t.x) : nullptr},
                     {"y", t.y},
                     {"f", t.f}});
    }
  }
  return j.dump(2);
}

}  // namespace sfcgo
