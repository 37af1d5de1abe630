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

#include "sfcgo/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sfcgo {

Box Box::unit(std::size_t dim) {
  return Box{Point(dim, 0.0), Point(dim, 1.0)};
}

Box Box::symmetric(std::size_t dim, double half_width) {
  return Box{Point(dim, -half_width), Point(dim, half_width)};
}

void Box::validate() const {
  if (lo.empty()) throw std::invalid_argument("box: dimension must be >= 1");
  if (lo.size() != hi.size()) {
    throw std::invalid_argument("box: lo and hi differ in dimension");
  }
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (!(lo[j] < hi[j]) || !std::isfinite(lo[j]) || !std::isfinite(hi[j])) {
      throw std::invalid_argument("box: need lo < hi in coordinate " +
                                  std::to_string(j));
    }
  }
}

double Box::diagonal() const {
  double s = 0.0;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    const double w = hi[j] - lo[j];
    s += w * w;
  }
  return std::sqrt(s);
}

double Box::max_side() const {
  double m = 0.0;
  for (std::size_t j = 0; j < lo.size(); ++j) m = std::max(m, hi[j] - lo[j]);
  return m;
}

void Box::from_unit(std::span<const double> unit, std::span<double> out) const {
  assert(unit.size() == lo.size() && out.size() == lo.size());
  for (std::size_t j = 0; j < lo.size(); ++j) {
    out[j] = lo[j] + unit[j] * (hi[j] - lo[j]);
  }
}

Point Box::from_unit(std::span<const double> unit) const {
  Point out(lo.size());
  from_unit(unit, out);
  return out;
}

bool Box::contains(std::span<const double> y, double tol) const {
  if (y.size() != lo.size()) return false;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (y[j] < lo[j] - tol || y[j] > hi[j] + tol) return false;
  }
  return true;
}

double distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace sfcgo
