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

#ifndef SFCGO_GKLS_HPP_
#define SFCGO_GKLS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfcgo/geometry.hpp"

namespace sfcgo {

// Parameters of a class of GKLS-style (ND-type) test functions on
// [-domain, domain]^N: a paraboloid ||y - T||^2 + t distorted by cubic
// polynomials inside num_minima disjoint attraction balls. Ball 0 holds the
// global minimizer, at distance dist_d from the vertex T, with radius
// radius_r and value f_star.
struct GklsClassSpec {
  int class_id = 0;  // 1..8 for the standard presets, 0 for custom specs
  std::size_t dim = 2;
  int num_minima = 10;
  double f_star = -1.0;
  double dist_d = 0.9;
  double radius_r = 0.2;
  double vertex_value = 0.0;  // t; every local minimum value lies below it
  double domain = 1.0;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on a geometrically impossible spec.
  void validate() const;
};

inline constexpr int kGklsClassCount = 8;

// Presets 1..8: N = 2,2,3,3,4,4,5,5; m = 10; f* = -1;
// d = .90,.90,.66,.90,.66,.90,.90,.90; r* = .20,.10,.20,.20,.20,.20,.40,.30.
GklsClassSpec gkls_class(int class_id, std::uint64_t seed = 0);

// Stopping-ball radius for a preset: 0.01 sqrt(N) for classes 1-6 and
// 0.02 sqrt(N) for classes 7-8.
double gkls_class_radius(int class_id);

// Length threshold eta tuned per preset: 1e-4 (1, 2), 1e-7 (3), 1e-8 (4),
// 1e-10 (5-8).
double gkls_class_eta(int class_id);

class GklsFunction {
 public:
  const GklsClassSpec& spec() const noexcept { return spec_; }
  std::uint64_t index() const noexcept { return index_; }
  const Point& vertex() const noexcept { return vertex_; }
  double vertex_value() const noexcept { return spec_.vertex_value; }
  const std::vector<Point>& centers() const noexcept { return centers_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& radii() const noexcept { return radii_; }

  const Point& global_minimizer() const { return centers_.front(); }
  double global_minimum() const { return values_.front(); }
  Box domain() const { return Box::symmetric(spec_.dim, spec_.domain); }

  // Throws std::domain_error if y is outside the domain (1e-12 slack) or
  // has the wrong dimension.
  double evaluate(std::span<const double> y) const;
  double operator()(std::span<const double> y) const { return evaluate(y); }

  // Value of the undistorted paraboloid ||y - T||^2 + t.
  double paraboloid(std::span<const double> y) const;

 private:
  friend GklsFunction generate(const GklsClassSpec& spec, std::uint64_t index);

  GklsClassSpec spec_;
  std::uint64_t index_ = 0;
  Point vertex_;
  std::vector<Point> centers_;
  std::vector<double> values_;
  std::vector<double> radii_;
};

// Builds function `index` of the class. Deterministic in (spec, index) on
// every platform: draws come from std::mt19937_64 seeded through
// std::seed_seq, converted to doubles without library distributions.
// Throws std::runtime_error if rejection sampling cannot place the balls.
GklsFunction generate(const GklsClassSpec& spec, std::uint64_t index = 0);

// {"spec": {...}, "index", "vertex", "vertex_value", "minima": [{center,
// value, radius}...]}.
std::string to_json(const GklsFunction& g);

}  // namespace sfcgo

#endif  // SFCGO_GKLS_HPP_
