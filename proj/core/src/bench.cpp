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

#include "sfcgo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "sfcgo/direct.hpp"
#include "sfcgo/mgas.hpp"

namespace sfcgo {
namespace {

double class_radius(const GklsClassSpec& spec) {
  if (spec.class_id >= 1 && spec.class_id <= kGklsClassCount) {
    return gkls_class_radius(spec.class_id);
  }
  return 0.01 * std::sqrt(static_cast<double>(spec.dim));
}

double class_eta(const GklsClassSpec& spec) {
  if (spec.class_id >= 1 && spec.class_id <= kGklsClassCount) {
    return gkls_class_eta(spec.class_id);
  }
  return default_eta(spec.dim);
}

void summarize(ClassReport& r) {
  r.unsolved = 0;
  r.maximum = 0;
  double sum = 0.0;
  for (const auto& o : r.runs) {
    const std::int64_t t = o.solved ? o.trials : r.max_trials;
    if (!o.solved) ++r.unsolved;
    sum += static_cast<double>(t);
    r.maximum = std::max(r.maximum, t);
  }
  r.average = r.runs.empty() ? 0.0 : sum / static_cast<double>(r.runs.size());
  r.average_is_lower_bound = r.unsolved > 0;
}

nlohmann::ordered_json spec_json(const GklsClassSpec& s) {
  return {{"class", s.class_id},   {"dim", s.dim},
          {"num_minima", s.num_minima}, {"f_star", s.f_star},
          {"dist_d", s.dist_d},    {"radius_r", s.radius_r},
          {"seed", s.seed}};
}

nlohmann::ordered_json params_json(const GklsClassSpec& spec,
                                   const BenchParams& p) {
  return {{"level", p.level},
          {"epsilon", p.epsilon},
          {"eta", p.eta.value_or(class_eta(spec))},
          {"radius", p.radius.value_or(class_radius(spec))},
          {"max_trials", p.max_trials}};
}

}  // namespace

std::string_view to_string(Algorithm a) {
  return a == Algorithm::kMgas ? "mgas" : "direct";
}

Algorithm algorithm_from_string(std::string_view s) {
  if (s == "mgas") return Algorithm::kMgas;
  if (s == "direct") return Algorithm::kDirect;
  throw std::invalid_argument("unknown algorithm: " + std::string(s));
}

int ClassReport::stagnated_count() const {
  return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const auto& o) {
    return !o.solved && o.stop_reason == StopReason::kStagnation;
  }));
}

RunResult run_function(Algorithm algo, const GklsFunction& g,
                       const BenchParams& params) {
  StoppingRule stop;
  stop.target = g.global_minimizer();
  stop.radius = params.radius.value_or(class_radius(g.spec()));
  stop.max_trials = params.max_trials;
  const Objective objective = [&g](std::span<const double> y) {
    return g.evaluate(y);
  };

  if (algo == Algorithm::kMgas) {
    MgasConfig cfg;
    cfg.dim = g.spec().dim;
    cfg.level = params.level;
    cfg.epsilon = params.epsilon;
    cfg.eta = params.eta.value_or(class_eta(g.spec()));
    cfg.max_trials = params.max_trials;
    cfg.box = g.domain();
    return run(cfg, objective, stop);
  }
  DirectConfig cfg;
  cfg.dim = g.spec().dim;
  cfg.epsilon = params.epsilon;
  cfg.max_trials = params.max_trials;
  cfg.box = g.domain();
  return direct_run(cfg, objective, stop);
}

ClassReport run_class(Algorithm algo, const GklsClassSpec& spec, int count,
                      const BenchParams& params) {
  if (count < 0) throw std::invalid_argument("run_class: count must be >= 0");
  spec.validate();

  ClassReport report;
  report.class_id = spec.class_id;
  report.algo = algo;
  report.max_trials = params.max_trials;
  report.runs.resize(static_cast<std::size_t>(count));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      FunctionOutcome& o = report.runs[static_cast<std::size_t>(i)];
      o.func_index = i + 1;
      try {
        const GklsFunction g = generate(spec, static_cast<std::uint64_t>(i + 1));
        const RunResult r = run_function(algo, g, params);
        o.solved = r.solved();
        o.trials = r.trials;
        o.iterations = r.iterations;
        o.stop_reason = r.stop_reason;
        o.f_min = r.f_min;
      } catch (const std::exception& e) {
        o.error = e.what();
        o.solved = false;
        o.stop_reason = StopReason::kStagnation;
      }
    }
  };

  unsigned threads = params.threads != 0 ? params.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  summarize(report);
  return report;
}

std::vector<std::int64_t> log_budget_grid(std::int64_t lo, std::int64_t hi,
                                          int points) {
  if (lo < 1 || hi < lo || points < 2) {
    throw std::invalid_argument("log_budget_grid: need 1 <= lo <= hi, points >= 2");
  }
  std::vector<std::int64_t> grid;
  const double llo = std::log(static_cast<double>(lo));
  const double lhi = std::log(static_cast<double>(hi));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    auto b = static_cast<std::int64_t>(std::llround(std::exp(llo + t * (lhi - llo))));
    b = std::clamp(b, lo, hi);
    if (grid.empty() || b > grid.back()) grid.push_back(b);
  }
  if (grid.back() != hi) grid.push_back(hi);
  return grid;
}

std::vector<CharacteristicPoint> operating_characteristic(
    std::span<const std::optional<std::int64_t>> solved_at,
    std::span<const std::int64_t> budgets) {
  std::vector<CharacteristicPoint> out;
  out.reserve(budgets.size());
  for (const std::int64_t b : budgets) {
    int n = 0;
    for (const auto& s : solved_at) {
      if (s && *s <= b) ++n;
    }
    out.push_back({b, n});
  }
  return out;
}

std::vector<CharacteristicPoint> operating_characteristic(
    const ClassReport& report, std::span<const std::int64_t> budgets) {
  std::vector<std::optional<std::int64_t>> solved_at;
  solved_at.reserve(report.runs.size());
  for (const auto& o : report.runs) {
    solved_at.push_back(o.solved ? std::optional<std::int64_t>(o.trials)
                                 : std::nullopt);
  }
  return operating_characteristic(solved_at, budgets);
}

std::vector<EtaSweepRow> eta_sweep(const GklsClassSpec& spec,
                                   std::span<const double> eta_values,
                                   int count, const BenchParams& params) {
  std::vector<EtaSweepRow> rows;
  for (const double eta : eta_values) {
    BenchParams p = params;
    p.eta = eta;
    const ClassReport r = run_class(Algorithm::kMgas, spec, count, p);
    rows.push_back(EtaSweepRow{eta, r.average, r.maximum, r.solved_count(),
                               r.unsolved, r.stagnated_count()});
  }
  return rows;
}

void write_runs_csv_header(std::ostream& os) {
  os << "class,func_index,algo,solved,trials,stop_reason\n";
}

void write_runs_csv(std::ostream& os, const ClassReport& report) {
  for (const auto& o : report.runs) {
    os << report.class_id << ',' << o.func_index << ',' << to_string(report.algo)
       << ',' << (o.solved ? 1 : 0) << ',' << o.trials << ','
       << to_string(o.stop_reason) << '\n';
  }
}

void write_characteristics_csv_header(std::ostream& os) {
  os << "budget,solved_count,algo,class\n";
}

void write_characteristics_csv(std::ostream& os, const ClassReport& report,
                               std::span<const std::int64_t> budgets) {
  for (const auto& p : operating_characteristic(report, budgets)) {
    os << p.budget << ',' << p.solved_count << ',' << to_string(report.algo)
       << ',' << report.class_id << '\n';
  }
}

void write_sweep_csv(std::ostream& os, std::span<const EtaSweepRow> rows) {
  const auto old_precision = os.precision(17);
  os << "eta,average,maximum,solved,unsolved,stagnated\n";
  for (const auto& r : rows) {
    os << r.eta << ',' << r.average << ',' << r.maximum << ',' << r.solved
       << ',' << r.unsolved << ',' << r.stagnated << '\n';
  }
  os.precision(old_precision);
}

std::string outcome_json(const ClassReport& report, const GklsClassSpec& spec,
                         const BenchParams& params,
                         const FunctionOutcome& outcome) {
  nlohmann::ordered_json j;
  j["schema_version"] = kResultSchemaVersion;
  j["algo"] = std::string(to_string(report.algo));
  j["spec"] = spec_json(spec);
  j["params"] = params_json(spec, params);
  j["func_index"] = outcome.func_index;
  j["solved"] = outcome.solved;
  j["trials"] = outcome.trials;
  j["iterations"] = outcome.iterations;
  j["stop_reason"] = std::string(to_string(outcome.stop_reason));
  j["f_min"] = outcome.f_min;
  if (!outcome.error.empty()) j["error"] = outcome.error;
  return j.dump(2);
}

std::string report_json(const ClassReport& report, const GklsClassSpec& spec,
                        const BenchParams& params) {
  nlohmann::ordered_json j;
  j["schema_version"] = kResultSchemaVersion;
  j["algo"] = std::string(to_string(report.algo));
  j["spec"] = spec_json(spec);
  j["params"] = params_json(spec, params);
  j["count"] = report.runs.size();
  j["average"] = report.average;
  j["average_is_lower_bound"] = report.average_is_lower_bound;
  j["maximum"] = report.maximum;
  j["unsolved"] = report.unsolved;
  j["stagnated"] = report.stagnated_count();
  return j.dump(2);
}

}  // namespace sfcgo
