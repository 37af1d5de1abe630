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

#ifndef SFCGO_DIAGRAM_HPP_
#define SFCGO_DIAGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>

namespace sfcgo {

using IntervalId = std::int64_t;

// Deepest trisection level an interval may reach. At depth 32 the endpoints
// k / 3^32 are still distinct doubles and 2 * 3^32 < 2^53, so every midpoint
// is a correctly rounded, distinct abscissa.
inline constexpr int kMaxTrisectionDepth = 32;

// 3^depth as an exact integer, depth in [0, kMaxTrisectionDepth].
std::uint64_t power_of_three(int depth);

// The double nearest to 3^-depth.
double inverse_power_of_three(int depth);

// A subinterval [k / 3^d, (k + 1) / 3^d] of [0, 1] produced by d trisections.
// Position and length are held exactly as (offset, depth); a, b and the
// midpoint are the correctly rounded doubles of those rationals.
struct IntervalRecord {
  IntervalId id = 0;
  int depth = 0;
  std::uint64_t offset = 0;
  double a = 0.0;
  double b = 1.0;
  double f_mid = 0.0;

  // Throws std::invalid_argument if depth is out of range or
  // offset >= 3^depth.
  static IntervalRecord make(IntervalId id, int depth, std::uint64_t offset,
                             double f_mid);

  double length() const { return inverse_power_of_three(depth); }
  double midpoint() const;

  // Midpoints of the left and right children of a trisection, i.e. the two
  // new trial abscissas. The middle child's midpoint equals midpoint().
  double left_child_midpoint() const;
  double right_child_midpoint() const;
};

// A dot (h, F) of the Hoelder-metric diagram. h is cached at creation so that
// every consumer sees bit-identical coordinates.
struct DiagramPoint {
  IntervalId interval_id = 0;
  double h = 0.0;
  double F = 0.0;
};

// ((b - a) / 2)^(1/N), computed from the exact length 3^-depth.
double h_coordinate(const IntervalRecord& iv, std::size_t dim);
double h_coordinate(double length, std::size_t dim);

DiagramPoint make_point(const IntervalRecord& iv, std::size_t dim);

// R(H) = F - H * h, the lower bound the Hoelder minorant with constant H gives
// over the interval.
inline double characteristic(const DiagramPoint& p, double holder_constant) {
  return p.F - holder_constant * p.h;
}

// H = 2 L sqrt(N + 3). Throws std::domain_error if L <= 0 or dim == 0.
double holder_constant_from_lipschitz(double lipschitz, std::size_t dim);

// CSV snapshot "id,a,b,f_mid,h".
void write_diagram_csv(std::ostream& os, std::span<const IntervalRecord> ivs,
                       std::size_t dim);

}  // namespace sfcgo

#endif  // SFCGO_DIAGRAM_HPP_
