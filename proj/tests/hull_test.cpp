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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"

namespace sfcgo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::set<IntervalId> id_set(const HullSelection& s) {
  const auto ids = s.ids();
  return {ids.begin(), ids.end()};
}

TEST(NondominatedTest, SinglePoint) {
  const std::vector<DiagramPoint> pts = {{4, 0.5, 1.0}};
  const HullSelection s = nondominated(pts);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.vertices[0].id, 4);
  EXPECT_EQ(s.vertices[0].H_lo, 0.0);
  EXPECT_EQ(s.vertices[0].H_hi, kInf);
}

TEST(NondominatedTest, ThreePointExample) {
  // A = (0.4, 2.0), B = (0.3, 1.0), C = (0.35, 1.8): C sits above chord BA.
  const std::vector<DiagramPoint> pts = {{0, 0.4, 2.0}, {1, 0.3, 1.0}, {2, 0.35, 1.8}};
  const HullSelection s = nondominated(pts);
  EXPECT_EQ(s.ids(), (std::vector<IntervalId>{1, 0}));
  EXPECT_NEAR(s.vertices[0].H_hi, 10.0, 1e-12);
  EXPECT_NEAR(s.vertices[1].H_lo, 10.0, 1e-12);
  const auto grid = testing::log_grid(1e-6, 1e6, 10000);
  EXPECT_EQ(testing::grid_nondominated(pts, grid), (std::set<IntervalId>{0, 1}));
}

// Bottom dots A..G of seven columns shaped like the textbook picture: A, B,
// D, E on the hull; C above chord BD, F above chord DE, G left of E and
// higher. Extra dots sit above several bottoms.
TEST(NondominatedTest, SevenColumnPicture) {
  enum : IntervalId { A = 1, B, C, D, E, F, G };
  const std::vector<DiagramPoint> pts = {
      {A, 0.7, 1.0}, {B, 0.6, 0.7}, {C, 0.5, 0.6}, {D, 0.4, 0.3},
      {F, 0.3, 0.4}, {E, 0.2, 0.0}, {G, 0.1, 0.5},
      {20, 0.7, 1.4}, {21, 0.6, 0.9}, {22, 0.4, 0.8}, {23, 0.2, 0.3}};
  const HullSelection s = nondominated(pts);
  EXPECT_EQ(s.ids(), (std::vector<IntervalId>{E, D, B, A}));
  const auto grid = testing::log_grid(1e-6, 1e6, 10000);
  EXPECT_EQ(testing::grid_nondominated(pts, grid), id_set(s));
}

TEST(NondominatedTest, Errors) {
  EXPECT_THROW(nondominated(std::vector<DiagramPoint>{}), std::invalid_argument);
  const std::vector<DiagramPoint> zero = {{0, 0.0, 1.0}, {1, 0.5, 2.0}};
  EXPECT_THROW(nondominated(zero), std::invalid_argument);
}

TEST(NondominatedTest, TieRules) {
  // Identical dots: smallest id.
  const std::vector<DiagramPoint> dup = {{9, 0.3, 1.0}, {4, 0.3, 1.0}, {6, 0.3, 1.0}};
  EXPECT_EQ(nondominated(dup).ids(), (std::vector<IntervalId>{4}));

  // Equal minimal F in two columns: only the larger h is nondominated.
  const std::vector<DiagramPoint> flat = {{1, 0.2, 0.0}, {2, 0.5, 0.0}, {3, 0.7, 1.0}};
  EXPECT_EQ(nondominated(flat).ids(), (std::vector<IntervalId>{2, 3}));

  // Collinear middle point is skipped.
  const std::vector<DiagramPoint> line = {{1, 0.1, 0.0}, {2, 0.2, 1.0}, {3, 0.3, 2.0}};
  EXPECT_EQ(nondominated(line).ids(), (std::vector<IntervalId>{1, 3}));
}

TEST(NondominatedTest, LargestColumnMinimumAlwaysSelected) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const auto pts = testing::random_diagram(rng);
    const HullSelection s = nondominated(pts);
    double hmax = 0.0;
    for (const auto& p : pts) hmax = std::max(hmax, p.h);
    const HullVertex& last = s.vertices.back();
    EXPECT_EQ(last.h, hmax);
    EXPECT_EQ(last.H_hi, kInf);
    for (const auto& p : pts) {
      if (p.h == hmax) {
        EXPECT_LE(last.F, p.F);
        if (p.F == last.F) EXPECT_LE(last.id, p.interval_id);
      }
    }
  }
}

// Exact oracle (probes between all pairwise slopes): exact set equality.
TEST(NondominatedTest, MatchesSlopeOracle) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const auto pts = testing::random_diagram(rng);
    ASSERT_EQ(id_set(nondominated(pts)), testing::slope_nondominated(pts)) << "diagram " << t;
  }
}

TEST(NondominatedTest, ChainIsConvexWithIncreasingF) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const auto pts = testing::random_diagram(rng);
    const HullSelection s = nondominated(pts);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const HullVertex& v = s.vertices[i];
      EXPECT_LT(v.H_lo, v.H_hi);
      if (i > 0) {
        EXPECT_GT(v.h, s.vertices[i - 1].h);
        EXPECT_GT(v.F, s.vertices[i - 1].F);
        EXPECT_EQ(v.H_lo, s.vertices[i - 1].H_hi);
      }
      // No dot lies strictly below the supporting line at either end of the
      // vertex's slope range.
      for (double H : {v.H_lo, std::isinf(v.H_hi) ? v.H_lo + 1.0 : v.H_hi}) {
        for (const auto& p : pts) {
          EXPECT_GE(characteristic(p, H) + 1e-12, v.F - H * v.h);
        }
      }
    }
  }
}

TEST(NondominatedTest, AddingAPointAboveTheHullChangesNothing) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> lift(0.01, 1.0);
  for (int t = 0; t < 300; ++t) {
    auto pts = testing::random_diagram(rng, 49);
    const HullSelection before = nondominated(pts);
    // Lift a copy of an existing dot strictly upward.
    const DiagramPoint& src = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    pts.push_back(DiagramPoint{1000, src.h, src.F + lift(rng)});
    EXPECT_EQ(nondominated(pts).ids(), before.ids());
  }
}

TEST(NondominatedTest, AffineRescalingOfFKeepsSelection) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> scale(0.25, 8.0), shift(-5.0, 5.0);
  for (int t = 0; t < 300; ++t) {
    auto pts = testing::random_diagram(rng);
    const double c = scale(rng), d = shift(rng);
    const double f_min = std::min_element(pts.begin(), pts.end(), [](auto& l, auto& r) {
                           return l.F < r.F;
                         })->F;
    const double xi = 0.01;
    const auto base = filter_improving(nondominated(pts), f_min, xi).ids();
    for (auto& p : pts) p.F = c * p.F + d;
    const auto scaled = filter_improving(nondominated(pts), c * f_min + d, c * xi).ids();
    EXPECT_EQ(scaled, base);
  }
}

TEST(FilterImprovingTest, Examples) {
  const std::vector<DiagramPoint> pts = {{0, 0.1, 0.0}, {1, 0.5, 0.5}};
  const HullSelection s = nondominated(pts);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s.vertices[0].H_hi, 1.25, 1e-15);
  const HullSelection kept = filter_improving(s, 0.0, 0.01);
  EXPECT_EQ(kept.ids(), (std::vector<IntervalId>{0, 1}));
  // With a large xi only the largest-h vertex survives.
  EXPECT_EQ(filter_improving(s, 0.0, 0.2).ids(), (std::vector<IntervalId>{1}));
}

TEST(FilterImprovingTest, EqualityPasses) {
  const HullVertex v{0, 0.1, 0.0, 0.0, 1.0};
  EXPECT_TRUE(passes_improvement(v, 0.0, 0.1));
  EXPECT_FALSE(passes_improvement(v, 0.0, std::nextafter(0.1, 1.0)));
}

TEST(FilterImprovingTest, IncumbentAndLargestAlwaysPassWithZeroXi) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const auto pts = testing::random_diagram(rng);
    double f_min = INFINITY;
    for (const auto& p : pts) f_min = std::min(f_min, p.F);
    const HullSelection s = nondominated(pts);
    const HullSelection kept = filter_improving(s, f_min, 0.0);
    ASSERT_FALSE(kept.empty());
    EXPECT_EQ(kept.vertices.front().F, f_min);
    EXPECT_EQ(kept.vertices.back().id, s.vertices.back().id);
    // Largest-h vertex passes for any finite xi.
    EXPECT_EQ(filter_improving(s, f_min, 1e9).ids(),
              (std::vector<IntervalId>{s.vertices.back().id}));
  }
}

TEST(SelectionCsvTest, Schema) {
  const std::vector<DiagramPoint> pts = {{0, 0.1, 0.0}, {1, 0.5, 0.5}};
  std::ostringstream os;
  write_selection_csv_header(os);
  write_selection_csv(os, 3, nondominated(pts), 0.0, 0.2);
  EXPECT_EQ(os.str(),
            "iter,id,h,F,H_lo,H_hi,passed_xi\n"
            "3,0,0.10000000000000001,0,0,1.25,0\n"
            "3,1,0.5,0.5,1.25,inf,1\n");
}

}  // namespace
}  // namespace sfcgo
