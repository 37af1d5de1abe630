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

#ifndef SFCGO_GEOMETRY_HPP_
#define SFCGO_GEOMETRY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace sfcgo {

using Point = std::vector<double>;

// Axis-aligned hyperinterval [lo, hi] in R^N.
struct Box {
  Point lo;
  Point hi;

  static Box unit(std::size_t dim);
  static Box symmetric(std::size_t dim, double half_width);

  std::size_t dim() const noexcept { return lo.size(); }

  // Throws std::invalid_argument unless dim >= 1 and lo[j] < hi[j] for all j.
  void validate() const;

  // Euclidean length of the main diagonal, ||hi - lo||.
  double diagonal() const;
  double max_side() const;

  // Affine image of a point of the unit cube.
  void from_unit(std::span<const double> unit, std::span<double> out) const;
  Point from_unit(std::span<const double> unit) const;

  bool contains(std::span<const double> y, double tol = 0.0) const;
};

double distance(std::span<const double> a, std::span<const double> b);

}  // namespace sfcgo

#endif  // SFCGO_GEOMETRY_HPP_
