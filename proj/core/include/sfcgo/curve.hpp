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

#ifndef SFCGO_CURVE_HPP_
#define SFCGO_CURVE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sfcgo/geometry.hpp"

namespace sfcgo {

// Number of index bits a curve cell index may use. Matches the mantissa width
// of double so that x * 2^(N*M) is exact for every representable x.
int max_index_bits() noexcept;

// Level-M approximation of the N-dimensional Hilbert curve over a box.
//
// The unit interval is cut into 2^(N*M) half-open cells (the last one closed);
// cell i maps to the center of one subcube of side 2^-M of the regular grid,
// and consecutive cells map to face-adjacent subcubes. Index 0 is the subcube
// at the corner box.lo. Index <-> grid conversion uses Skilling's transposed
// Gray-code formulation, O(N*M) per call.
class CurveMap {
 public:
  // Throws std::invalid_argument if dim == 0, level == 0, the box is invalid,
  // or dim * level exceeds index_bits.
  CurveMap(std::size_t dim, int level, Box box,
           int index_bits = max_index_bits());

  static CurveMap unit(std::size_t dim, int level);

  std::size_t dim() const noexcept { return dim_; }
  int level() const noexcept { return level_; }
  const Box& box() const noexcept { return box_; }
  int index_bits() const noexcept { return static_cast<int>(dim_) * level_; }

  // 2^(N*M).
  std::uint64_t cell_count() const noexcept { return cell_count_; }

  // floor(x * 2^(N*M)), clamped to the last cell at x = 1. Throws
  // std::domain_error if x lies outside [0, 1] by more than domain_tolerance().
  std::uint64_t cell_index(double x) const;

  // Integer grid coordinates in [0, 2^M) of curve cell i.
  std::vector<std::uint64_t> grid_coords(std::uint64_t i) const;
  void grid_coords(std::uint64_t i, std::span<std::uint64_t> out) const;

  // Center of the subcube for curve position i. Throws std::out_of_range.
  Point cell_center(std::uint64_t i) const;
  void cell_center(std::uint64_t i, std::span<double> out) const;

  // p_M(x) = cell_center(cell_index(x)).
  Point map(double x) const;
  void map(double x, std::span<double> out) const;

  // Diagonal of one curve cell in box coordinates: 2^-M * ||hi - lo||.
  double cell_diagonal() const;

  static constexpr double domain_tolerance() noexcept { return 1e-12; }

 private:
  std::size_t dim_;
  int level_;
  Box box_;
  std::uint64_t cell_count_;
  double cell_side_;  // 2^-M in unit coordinates
};

}  // namespace sfcgo

#endif  // SFCGO_CURVE_HPP_
