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

#include "sfcgo/gkls.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace sfcgo {
namespace {

constexpr int kOuterAttempts = 200;
constexpr int kPlacementAttempts = 10000;
constexpr double kMinLocalRadius = 0.01;
constexpr double kDomainSlack = 1e-12;

struct PresetRow {
  std::size_t dim;
  double d;
  double r;
};

constexpr std::array<PresetRow, kGklsClassCount> kPresets{{
    {2, 0.90, 0.20},
    {2, 0.90, 0.10},
    {3, 0.66, 0.20},
    {3, 0.90, 0.20},
    {4, 0.66, 0.20},
    {4, 0.90, 0.20},
    {5, 0.90, 0.40},
    {5, 0.90, 0.30},
}};

void check_class(int class_id) {
  if (class_id < 1 || class_id > kGklsClassCount) {
    throw std::invalid_argument("gkls: class must be in 1.." +
                                std::to_string(kGklsClassCount));
  }
}

// Portable draws: 53 random bits -> [0, 1).
class Draws {
 public:
  explicit Draws(std::seed_seq& seq) : engine_(seq) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; the first uniform is shifted into (0, 1].
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Point direction(std::size_t dim) {
    for (;;) {
      Point v(dim);
      double norm = 0.0;
      for (auto& c : v) {
        c = normal();
        norm += c * c;
      }
      norm = std::sqrt(norm);
      if (norm < 1e-12) continue;
      for (auto& c : v) c /= norm;
      return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

double boundary_distance(const Point& p, double half_width) {
  double m = half_width;
  for (double c : p) m = std::min(m, half_width - std::abs(c));
  return m;
}

}  // namespace

void GklsClassSpec::validate() const {
  if (dim < 1) throw std::invalid_argument("gkls: dim must be >= 1");
  if (num_minima < 1) throw std::invalid_argument("gkls: need at least one minimum");
  if (!(domain > 0.0)) throw std::invalid_argument("gkls: domain must be positive");
  if (!(f_star < vertex_value)) {
    throw std::invalid_argument("gkls: f_star must lie below the vertex value");
  }
  if (!(radius_r > 0.0) || !(dist_d > radius_r)) {
    throw std::invalid_argument("gkls: need 0 < radius_r < dist_d");
  }
  if (radius_r >= domain) {
    throw std::invalid_argument("gkls: attraction ball does not fit the domain");
  }
  // The vertex T lies in the domain and the global ball must fit inside.
  const double reach = 2.0 * domain * std::sqrt(static_cast<double>(dim));
  if (dist_d >= reach) {
    throw std::invalid_argument("gkls: dist_d exceeds the domain diagonal");
  }
}

GklsClassSpec gkls_class(int class_id, std::uint64_t seed) {
  check_class(class_id);
  const PresetRow& row = kPresets[static_cast<std::size_t>(class_id - 1)];
  GklsClassSpec s;
  s.class_id = class_id;
  s.dim = row.dim;
  s.num_minima = 10;
  s.f_star = -1.0;
  s.dist_d = row.d;
  s.radius_r = row.r;
  s.seed = seed;
  return s;
}

double gkls_class_radius(int class_id) {
  check_class(class_id);
  const double n = static_cast<double>(kPresets[static_cast<std::size_t>(class_id - 1)].dim);
  return (class_id <= 6 ? 0.01 : 0.02) * std::sqrt(n);
}

double gkls_class_eta(int class_id) {
  check_class(class_id);
  switch (class_id) {
    case 1:
    case 2:
      return 1e-4;
    case 3:
      return 1e-7;
    case 4:
      return 1e-8;
    default:
      return 1e-10;
  }
}

double GklsFunction::paraboloid(std::span<const double> y) const {
  return std::pow(distance(y, vertex_), 2) + spec_.vertex_value;
}

double GklsFunction::evaluate(std::span<const double> y) const {
  if (y.size() != spec_.dim) throw std::domain_error("gkls: dimension mismatch");
  for (double c : y) {
    if (!(std::abs(c) <= spec_.domain + kDomainSlack)) {
      throw std::domain_error("gkls: point outside the domain");
    }
  }
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    const Point& m = centers_[i];
    const double r = distance(y, m);
    const double rho = radii_[i];
    if (!(r < rho)) continue;
    const double fi = values_[i];
    if (r == 0.0) return fi;
    // Cubic in r that equals the paraboloid on the sphere r = rho, matches
    // its radial derivative there, and bottoms out at fi in the center.
    double dot = 0.0;
    double tm2 = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double tm = vertex_[j] - m[j];
      dot += (y[j] - m[j]) * tm;
      tm2 += tm * tm;
    }
    const double g = dot / r;
    const double a = tm2 + spec_.vertex_value - fi;
    const double rho2 = rho * rho;
    const double c3 = 2.0 * g / rho2 - 2.0 * a / (rho2 * rho);
    const double c2 = 1.0 - 4.0 * g / rho + 3.0 * a / rho2;
    return (c3 * r + c2) * r * r + fi;
  }
  return paraboloid(y);
}

GklsFunction generate(const GklsClassSpec& spec, std::uint64_t index) {
  spec.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                    static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(spec.class_id),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(spec.dim)};
  Draws rng(seq);
  const std::size_t n = spec.dim;
  const double w = spec.domain;

  for (int attempt = 0; attempt < kOuterAttempts; ++attempt) {
    GklsFunction g;
    g.spec_ = spec;
    g.index_ = index;

    // Vertex anywhere in the domain; global minimizer at distance d from it
    // with its whole ball inside the domain.
    bool placed = false;
    for (int k = 0; k < kPlacementAttempts && !placed; ++k) {
      Point t(n);
      for (auto& c : t) c = rng.uniform(-w, w);
      const Point u = rng.direction(n);
      Point m(n);
      for (std::size_t j = 0; j < n; ++j) m[j] = t[j] + spec.dist_d * u[j];
      if (boundary_distance(m, w) >= spec.radius_r) {
        g.vertex_ = std::move(t);
        g.centers_.push_back(std::move(m));
        g.values_.push_back(spec.f_star);
        g.radii_.push_back(spec.radius_r);
        placed = true;
      }
    }
    if (!placed) continue;

    // Local minima: disjoint balls inside the domain that keep the vertex
    // outside, each no wider than the global one, values in (f*, t).
    const double span = spec.vertex_value - spec.f_star;
    bool ok = true;
    for (int i = 1; i < spec.num_minima && ok; ++i) {
      ok = false;
      for (int k = 0; k < kPlacementAttempts; ++k) {
        Point p(n);
        for (auto& c : p) c = rng.uniform(-w, w);
        double rho = std::min(spec.radius_r, boundary_distance(p, w));
        rho = std::min(rho, 0.5 * distance(p, g.vertex_));
        for (std::size_t j = 0; j < g.centers_.size(); ++j) {
          rho = std::min(rho, distance(p, g.centers_[j]) - g.radii_[j]);
        }
        if (rho < kMinLocalRadius) continue;
        g.centers_.push_back(std::move(p));
        g.radii_.push_back(rho);
        g.values_.push_back(spec.f_star + span * rng.uniform(0.1, 0.9));
        ok = true;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::runtime_error("gkls: could not place the attraction balls for "
                           "class " + std::to_string(spec.class_id) +
                           " index " + std::to_string(index));
}

std::string to_json(const GklsFunction& g) {
  const GklsClassSpec& s = g.spec();
  nlohmann::ordered_json j;
  j["spec"] = {{"class", s.class_id},     {"dim", s.dim},
               {"num_minima", s.num_minima}, {"f_star", s.f_star},
               {"dist_d", s.dist_d},      {"radius_r", s.radius_r},
               {"vertex_value", s.vertex_value}, {"domain", s.domain},
               {"seed", s.seed}};
  j["index"] = g.index();
  j["vertex"] = g.vertex();
  j["vertex_value"] = g.vertex_value();
  auto& minima = j["minima"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.centers().size(); ++i) {
    minima.push_back({{"center", g.centers()[i]},
                      {"value", g.values()[i]},
                      {"radius", g.radii()[i]}});
  }
  return j.dump(2);
}

}  // namespace sfcgo
