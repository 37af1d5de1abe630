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

// sfcgo command-line front end.
//
//   sfcgo curve-dump --dim N --level M [--box lo,hi ...] [--force]
//   sfcgo optimize [--algo mgas|direct] [--function paraboloid|rastrigin|gkls] ...
//   sfcgo gkls gen --class K --index i --seed s
//   sfcgo gkls eval --class K --index i --seed s < points.csv
//   sfcgo benchmark --algo mgas|direct|both --class K --count C --seed S --out dir
//   sfcgo sweep --param eta --values v1,v2,... --class K --count C --seed S --out dir

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfcgo/bench.hpp"
#include "sfcgo/curve.hpp"
#include "sfcgo/diagram.hpp"
#include "sfcgo/direct.hpp"
#include "sfcgo/gkls.hpp"
#include "sfcgo/hull.hpp"
#include "sfcgo/mgas.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kCurveDumpMaxBits = 24;

sfcgo::Box parse_box(const std::vector<std::string>& specs, std::size_t dim,
                     const sfcgo::Box& fallback) {
  if (specs.empty()) return fallback;
  sfcgo::Box box;
  if (specs.size() != 1 && specs.size() != dim) {
    throw std::invalid_argument("--box: give one lo,hi pair or one per coordinate");
  }
  for (std::size_t j = 0; j < dim; ++j) {
    const std::string& s = specs[specs.size() == 1 ? 0 : j];
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--box expects lo,hi");
    box.lo.push_back(std::stod(s.substr(0, comma)));
    box.hi.push_back(std::stod(s.substr(comma + 1)));
  }
  box.validate();
  return box;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text << '\n';
}

struct CurveDumpOptions {
  std::size_t dim = 2;
  int level = 3;
  std::vector<std::string> box;
  bool force = false;
};

int curve_dump(const CurveDumpOptions& o) {
  if (static_cast<long long>(o.dim) * o.level > kCurveDumpMaxBits && !o.force) {
    std::cerr << "curve-dump: dim * level > " << kCurveDumpMaxBits
              << " would emit too many rows; pass --force\n";
    return 2;
  }
  const sfcgo::CurveMap cm(o.dim, o.level,
                           parse_box(o.box, o.dim, sfcgo::Box::unit(o.dim)));
  std::cout.precision(17);
  std::cout << "index,x";
  for (std::size_t j = 1; j <= o.dim; ++j) std::cout << ",coord_" << j;
  std::cout << '\n';
  sfcgo::Point c(o.dim);
  for (std::uint64_t i = 0; i < cm.cell_count(); ++i) {
    cm.cell_center(i, c);
    // Left end of the cell in [0, 1].
    std::cout << i << ',' << std::ldexp(static_cast<double>(i), -cm.index_bits());
    for (double v : c) std::cout << ',' << v;
    std::cout << '\n';
  }
  return 0;
}

struct OptimizeOptions {
  std::string algo = "mgas";
  std::string function = "paraboloid";
  std::size_t dim = 2;
  int level = 10;
  double epsilon = 1e-4;
  std::optional<double> eta;
  std::int64_t max_trials = 100000;
  std::vector<double> target;
  std::optional<double> radius;
  std::vector<std::string> box;
  int gkls_class = 1;
  std::uint64_t index = 1;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::string hull_path;
  std::string diagram_path;
  bool include_trace = false;
};

int optimize(const OptimizeOptions& o) {
  sfcgo::Objective objective;
  sfcgo::Box box;
  sfcgo::StoppingRule stop;
  stop.max_trials = o.max_trials;
  std::size_t dim = o.dim;
  std::optional<double> eta = o.eta;
  std::optional<sfcgo::GklsFunction> gkls;

  if (o.function == "gkls") {
    gkls = sfcgo::generate(sfcgo::gkls_class(o.gkls_class, o.seed), o.index);
    dim = gkls->spec().dim;
    box = gkls->domain();
    objective = [&g = *gkls](std::span<const double> y) { return g.evaluate(y); };
    stop.target = o.target.empty() ? gkls->global_minimizer() : o.target;
    stop.radius = o.radius.value_or(sfcgo::gkls_class_radius(o.gkls_class));
    if (!eta) eta = sfcgo::gkls_class_eta(o.gkls_class);
  } else {
    box = parse_box(o.box, dim, sfcgo::Box::unit(dim));
    sfcgo::Point center(dim);
    for (std::size_t j = 0; j < dim; ++j) center[j] = 0.5 * (box.lo[j] + box.hi[j]);
    if (!o.target.empty()) center = o.target;
    if (o.function == "paraboloid") {
      objective = [center](std::span<const double> y) {
        double s = 0.0;
        for (std::size_t j = 0; j < y.size(); ++j) s += (y[j] - center[j]) * (y[j] - center[j]);
        return s;
      };
    } else if (o.function == "rastrigin") {
      objective = [](std::span<const double> y) {
        double s = 10.0 * static_cast<double>(y.size());
        for (double v : y) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
        return s;
      };
    } else {
      throw std::invalid_argument("unknown function: " + o.function);
    }
    if (!o.target.empty()) {
      stop.target = o.target;
      stop.radius = o.radius.value_or(0.01 * std::sqrt(static_cast<double>(dim)));
    }
  }
  if (stop.target && stop.target->size() != dim) {
    throw std::invalid_argument("--target must have " + std::to_string(dim) + " coordinates");
  }

  sfcgo::RunResult result;
  if (o.algo == "mgas") {
    sfcgo::MgasConfig cfg = sfcgo::MgasConfig::defaults(box);
    cfg.level = o.level;
    cfg.epsilon = o.epsilon;
    if (eta) cfg.eta = *eta;
    cfg.max_trials = o.max_trials;

    std::ofstream hull_out;
    if (!o.hull_path.empty()) {
      hull_out.open(o.hull_path);
      sfcgo::write_selection_csv_header(hull_out);
    }
    std::vector<sfcgo::IntervalRecord> final_partition;
    result = sfcgo::run(cfg, objective, stop,
                        [&](const sfcgo::OptimizerState& s, const sfcgo::IterationReport& rep) {
                          if (hull_out.is_open()) {
                            sfcgo::write_selection_csv(hull_out, rep.iteration, rep.hull,
                                                       rep.f_min, rep.xi);
                          }
                          if (!o.diagram_path.empty()) final_partition = s.partition();
                        });
    if (!o.diagram_path.empty()) {
      std::ofstream out(o.diagram_path);
      sfcgo::write_diagram_csv(out, final_partition, dim);
    }
  } else if (o.algo == "direct") {
    sfcgo::DirectConfig cfg;
    cfg.dim = dim;
    cfg.epsilon = o.epsilon;
    cfg.max_trials = o.max_trials;
    cfg.box = box;
    result = sfcgo::direct_run(cfg, objective, stop);
  } else {
    throw std::invalid_argument("unknown algorithm: " + o.algo);
  }

  if (!o.trace_path.empty()) {
    std::ofstream out(o.trace_path);
    sfcgo::write_trace_csv(out, result);
  }
  std::cout << sfcgo::to_json(result, o.include_trace) << '\n';
  return 0;
}

struct GklsOptions {
  int gkls_class = 1;
  std::uint64_t index = 1;
  std::uint64_t seed = 0;
};

int gkls_gen(const GklsOptions& o) {
  std::cout << sfcgo::to_json(sfcgo::generate(sfcgo::gkls_class(o.gkls_class, o.seed), o.index))
            << '\n';
  return 0;
}

int gkls_eval(const GklsOptions& o) {
  const sfcgo::GklsFunction g =
      sfcgo::generate(sfcgo::gkls_class(o.gkls_class, o.seed), o.index);
  std::cout.precision(17);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    std::vector<double> y;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        y.push_back(std::stod(cell));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) continue;  // header row
    std::cout << line << ',' << g.evaluate(y) << '\n';
  }
  return 0;
}

struct BenchOptions {
  std::string algo = "both";
  int gkls_class = 1;
  std::optional<int> count;
  std::uint64_t seed = 0;
  std::string out = "results";
  std::optional<std::int64_t> max_trials;
  std::optional<double> eta;
  int level = 10;
  double epsilon = 1e-4;
  unsigned threads = 0;
  int budget_points = 50;
  bool full_scale = false;
  std::vector<double> values;
  std::string param = "eta";
};

sfcgo::BenchParams bench_params(const BenchOptions& o, std::size_t dim) {
  sfcgo::BenchParams p;
  p.level = o.level;
  p.epsilon = o.epsilon;
  p.eta = o.eta;
  p.threads = o.threads;
  p.max_trials = o.max_trials.value_or(o.full_scale ? 1000000 : 100000);
  (void)dim;
  return p;
}

int desk_count(const BenchOptions& o, std::size_t dim) {
  if (o.count) return *o.count;
  if (o.full_scale) return 100;
  return dim <= 3 ? 100 : 20;
}

int benchmark(const BenchOptions& o) {
  const sfcgo::GklsClassSpec spec = sfcgo::gkls_class(o.gkls_class, o.seed);
  const sfcgo::BenchParams params = bench_params(o, spec.dim);
  const int count = desk_count(o, spec.dim);
  std::vector<sfcgo::Algorithm> algos;
  if (o.algo == "both") {
    algos = {sfcgo::Algorithm::kMgas, sfcgo::Algorithm::kDirect};
  } else {
    algos = {sfcgo::algorithm_from_string(o.algo)};
  }

  const fs::path out(o.out);
  fs::create_directories(out / "runs");
  std::ofstream runs_csv(out / "runs.csv");
  std::ofstream chars_csv(out / "characteristics.csv");
  sfcgo::write_runs_csv_header(runs_csv);
  sfcgo::write_characteristics_csv_header(chars_csv);
  const auto budgets = sfcgo::log_budget_grid(10, params.max_trials, o.budget_points);

  for (const auto algo : algos) {
    const sfcgo::ClassReport report = sfcgo::run_class(algo, spec, count, params);
    sfcgo::write_runs_csv(runs_csv, report);
    sfcgo::write_characteristics_csv(chars_csv, report, budgets);
    const std::string tag = std::string(sfcgo::to_string(algo)) + "_c" +
                            std::to_string(spec.class_id);
    for (const auto& outcome : report.runs) {
      write_text(out / "runs" / (tag + "_f" + std::to_string(outcome.func_index) + ".json"),
                 sfcgo::outcome_json(report, spec, params, outcome));
    }
    write_text(out / (tag + "_summary.json"), sfcgo::report_json(report, spec, params));
    std::cout << sfcgo::to_string(algo) << " class " << spec.class_id << ": solved "
              << report.solved_count() << "/" << report.runs.size() << ", average "
              << (report.average_is_lower_bound ? ">" : "") << report.average
              << ", maximum " << report.maximum << '\n';
  }
  return 0;
}

int sweep(const BenchOptions& o) {
  if (o.param != "eta") throw std::invalid_argument("sweep: only --param eta is supported");
  if (o.values.empty()) throw std::invalid_argument("sweep: --values is required");
  const sfcgo::GklsClassSpec spec = sfcgo::gkls_class(o.gkls_class, o.seed);
  const sfcgo::BenchParams params = bench_params(o, spec.dim);
  const auto rows = sfcgo::eta_sweep(spec, o.values, desk_count(o, spec.dim), params);
  const fs::path out(o.out);
  fs::create_directories(out);
  std::ofstream csv(out / ("sweep_eta_c" + std::to_string(spec.class_id) + ".csv"));
  sfcgo::write_sweep_csv(csv, rows);
  sfcgo::write_sweep_csv(std::cout, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global optimization with space-filling curves and multiple Hoelder constant estimates"};
  app.require_subcommand(1);

  CurveDumpOptions cd;
  auto* cd_cmd = app.add_subcommand("curve-dump", "Print all curve cell centers in curve order");
  cd_cmd->add_option("--dim", cd.dim, "Dimension N")->required();
  cd_cmd->add_option("--level", cd.level, "Curve level M")->required();
  cd_cmd->add_option("--box", cd.box, "lo,hi (once, or once per coordinate)");
  cd_cmd->add_flag("--force", cd.force, "Allow dim * level > 24");

  OptimizeOptions op;
  auto* op_cmd = app.add_subcommand("optimize", "Minimize a builtin or GKLS function");
  op_cmd->add_option("--algo", op.algo, "mgas or direct")->check(CLI::IsMember({"mgas", "direct"}));
  op_cmd->add_option("--function", op.function, "paraboloid, rastrigin or gkls")
      ->check(CLI::IsMember({"paraboloid", "rastrigin", "gkls"}));
  op_cmd->add_option("--dim", op.dim, "Dimension for builtin functions");
  op_cmd->add_option("--level", op.level, "Curve level M");
  op_cmd->add_option("--epsilon", op.epsilon, "Improvement factor epsilon");
  op_cmd->add_option("--eta", op.eta, "Minimum interval length eta");
  op_cmd->add_option("--max-trials", op.max_trials, "Trial budget");
  op_cmd->add_option("--target", op.target, "Target point x1,..,xN")->delimiter(',');
  op_cmd->add_option("--radius", op.radius, "Target ball radius");
  op_cmd->add_option("--box", op.box, "lo,hi (once, or once per coordinate)");
  op_cmd->add_option("--class", op.gkls_class, "GKLS class 1..8");
  op_cmd->add_option("--index", op.index, "GKLS function index");
  op_cmd->add_option("--seed", op.seed, "GKLS seed");
  op_cmd->add_option("--trace", op.trace_path, "Write trial trace CSV");
  op_cmd->add_option("--hull-dump", op.hull_path, "Write per-iteration hull CSV (mgas)");
  op_cmd->add_option("--diagram-dump", op.diagram_path, "Write final diagram CSV (mgas)");
  op_cmd->add_flag("--include-trace", op.include_trace, "Embed the trace in the JSON output");

  GklsOptions gk;
  auto* gk_cmd = app.add_subcommand("gkls", "GKLS test function generator");
  gk_cmd->require_subcommand(1);
  auto* gen_cmd = gk_cmd->add_subcommand("gen", "Describe a generated function as JSON");
  auto* eval_cmd = gk_cmd->add_subcommand("eval", "Evaluate CSV points read from stdin");
  for (auto* c : {gen_cmd, eval_cmd}) {
    c->add_option("--class", gk.gkls_class, "Class 1..8")->required();
    c->add_option("--index", gk.index, "Function index");
    c->add_option("--seed", gk.seed, "Seed");
  }

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("benchmark", "Run a GKLS class and write results");
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sensitivity sweep");
  for (auto* c : {bench_cmd, sweep_cmd}) {
    c->add_option("--class", bo.gkls_class, "Class 1..8")->required();
    c->add_option("--count", bo.count, "Functions per class");
    c->add_option("--seed", bo.seed, "Seed");
    c->add_option("--out", bo.out, "Output directory");
    c->add_option("--max-trials", bo.max_trials, "Trial budget per function");
    c->add_option("--level", bo.level, "Curve level M");
    c->add_option("--epsilon", bo.epsilon, "Improvement factor epsilon");
    c->add_option("--threads", bo.threads, "Worker threads (0: all cores)");
    c->add_flag("--full-scale", bo.full_scale, "100 functions, 10^6 trials");
  }
  bench_cmd->add_option("--algo", bo.algo, "mgas, direct or both")
      ->check(CLI::IsMember({"mgas", "direct", "both"}));
  bench_cmd->add_option("--eta", bo.eta, "Minimum interval length eta");
  bench_cmd->add_option("--budget-points", bo.budget_points, "Points on the budget grid");
  sweep_cmd->add_option("--param", bo.param, "Parameter to sweep")->check(CLI::IsMember({"eta"}));
  sweep_cmd->add_option("--values", bo.values, "Comma-separated values")->delimiter(',')->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cd_cmd->parsed()) return curve_dump(cd);
    if (op_cmd->parsed()) return optimize(op);
    if (gen_cmd->parsed()) return gkls_gen(gk);
    if (eval_cmd->parsed()) return gkls_eval(gk);
    if (bench_cmd->parsed()) return benchmark(bo);
    if (sweep_cmd->parsed()) return sweep(bo);
  } catch (const std::exception& e) {
    std::cerr << "sfcgo: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
