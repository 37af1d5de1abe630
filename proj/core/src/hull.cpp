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

#include "sfcgo/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sfcgo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double slope(const DiagramPoint& from, const DiagramPoint& to) {
  return (to.F - from.F) / (to.h - from.h);
}

// Lowest point of every equal-h column, sorted by increasing h.
std::vector<DiagramPoint> column_minima(std::span<const DiagramPoint> points) {
  std::vector<DiagramPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const DiagramPoint& l, const DiagramPoint& r) {
              if (l.h != r.h) return l.h < r.h;
              if (l.F != r.F) return l.F < r.F;
              return l.interval_id < r.interval_id;
            });
  std::vector<DiagramPoint> minima;
  for (const auto& p : sorted) {
    if (minima.empty() || minima.back().h != p.h) minima.push_back(p);
  }
  return minima;
}

}  // namespace

std::vector<IntervalId> HullSelection::ids() const {
  std::vector<IntervalId> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.id);
  return out;
}

HullSelection nondominated(std::span<const DiagramPoint> points) {
  if (points.empty()) throw std::invalid_argument("nondominated: empty diagram");
  for (const auto& p : points) {
    if (!(p.h > 0.0)) {
      throw std::invalid_argument("nondominated: h must be positive");
    }
  }

  const std::vector<DiagramPoint> cols = column_minima(points);

  // Minimal F wins as H -> 0+; among equal F the larger h is lower for H > 0.
  std::size_t cur = 0;
  for (std::size_t i = 1; i < cols.size(); ++i) {
    if (cols[i].F <= cols[cur].F) cur = i;
  }

  HullSelection sel;
  double incoming = 0.0;
  for (;;) {
    // Wrap to the point on the right with the smallest slope; on equal slopes
    // take the farthest so that collinear points are skipped.
    std::size_t next = cols.size();
    double best = kInf;
    for (std::size_t j = cur + 1; j < cols.size(); ++j) {
      const double s = slope(cols[cur], cols[j]);
      if (next == cols.size() || s <= best) {
        best = s;
        next = j;
      }
    }
    const double outgoing = next == cols.size() ? kInf : best;
    sel.vertices.push_back(HullVertex{cols[cur].interval_id, cols[cur].h,
                                      cols[cur].F, incoming, outgoing});
    if (next == cols.size()) break;
    incoming = outgoing;
    cur = next;
  }
  return sel;
}

bool passes_improvement(const HullVertex& v, double f_min, double xi) {
  if (std::isinf(v.H_hi)) return v.h > 0.0;
  return v.F - v.H_hi * v.h <= f_min - xi;
}

HullSelection filter_improving(const HullSelection& sel, double f_min,
                               double xi) {
  HullSelection out;
  for (const auto& v : sel.vertices) {
    if (passes_improvement(v, f_min, xi)) out.vertices.push_back(v);
  }
  return out;
}

void write_selection_csv_header(std::ostream& os) {
  os << "iter,id,h,F,H_lo,H_hi,passed_xi\n";
}

void write_selection_csv(std::ostream& os, std::int64_t iter,
                         const HullSelection& sel, double f_min, double xi) {
  const auto old_precision = os.precision(17);
  for (const auto& v : sel.vertices) {
    os << iter << ',' << v.id << ',' << v.h << ',' << v.F << ',' << v.H_lo
       << ',';
    if (std::isinf(v.H_hi)) {
      os << "inf";
    } else {
      os << v.H_hi;
    }
    os << ',' << (passes_improvement(v, f_min, xi) ? 1 : 0) << '\n';
  }
  os.precision(old_precision);
}

}  // namespace sfcgo
