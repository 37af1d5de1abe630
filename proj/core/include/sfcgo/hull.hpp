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

#ifndef SFCGO_HULL_HPP_
#define SFCGO_HULL_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sfcgo/diagram.hpp"

namespace sfcgo {

// One vertex of the lower-right convex hull of a diagram, together with the
// open range (H_lo, H_hi) of Hoelder-constant estimates for which its
// characteristic F - H h is strictly the smallest of the diagram.
struct HullVertex {
  IntervalId id = 0;
  double h = 0.0;
  double F = 0.0;
  double H_lo = 0.0;
  double H_hi = 0.0;  // +inf for the largest-h vertex
};

struct HullSelection {
  // Ordered by increasing h; F is strictly increasing along the chain.
  std::vector<HullVertex> vertices;

  std::vector<IntervalId> ids() const;
  bool empty() const noexcept { return vertices.empty(); }
  std::size_t size() const noexcept { return vertices.size(); }
};

// Nondominated points: those whose characteristic is strictly minimal for
// some H in (0, inf). Within a group of equal h only the minimal F can win;
// exact duplicates of (h, F) resolve to the smallest id and collinear hull
// points are dropped, leaving only the chain's vertices.
//
// Gift wrapping (Jarvis march) over the per-column minima, starting at the
// overall minimum F (largest h among ties).
//
// Throws std::invalid_argument for an empty input or any h <= 0.
HullSelection nondominated(std::span<const DiagramPoint> points);

// True iff some H in the vertex's range gives F - H h <= f_min - xi. The
// characteristic decreases in H, so the test is made at H_hi; a vertex with
// H_hi = inf and h > 0 always passes.
bool passes_improvement(const HullVertex& v, double f_min, double xi);

// Keeps the vertices that pass the improvement test.
HullSelection filter_improving(const HullSelection& sel, double f_min,
                               double xi);

// Debug dump of one selection round, "iter,id,h,F,H_lo,H_hi,passed_xi".
void write_selection_csv_header(std::ostream& os);
void write_selection_csv(std::ostream& os, std::int64_t iter,
                         const HullSelection& sel, double f_min, double xi);

}  // namespace sfcgo

#endif  // SFCGO_HULL_HPP_
