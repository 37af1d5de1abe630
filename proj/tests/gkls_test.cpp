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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace sfcgo {
namespace {

double norm2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return s;
}

// Reference evaluation written from the radial interpolation conditions:
// Q(0) = f_i, Q'(0) = 0, Q(rho) = P, Q'(rho) = dP/dr along the ray. The cubic
// q(r) = f_i + c2 r^2 + c3 r^3 is solved as a 2x2 linear system.
double reference_eval(const GklsFunction& g, const Point& y) {
  const Point& t = g.vertex();
  for (std::size_t i = 0; i < g.centers().size(); ++i) {
    const Point& m = g.centers()[i];
    const double r = std::sqrt(norm2(y, m));
    const double rho = g.radii()[i];
    if (r >= rho) continue;
    if (r == 0.0) return g.values()[i];
    Point u(y.size()), b(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      u[j] = (y[j] - m[j]) / r;
      b[j] = m[j] + rho * u[j];
    }
    const double p = norm2(b, t) + g.vertex_value();
    double dp = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) dp += 2.0 * (b[j] - t[j]) * u[j];
    // [rho^2 rho^3; 2 rho 3 rho^2] [c2; c3] = [p - f_i; dp]
    const double a11 = rho * rho, a12 = rho * rho * rho;
    const double a21 = 2.0 * rho, a22 = 3.0 * rho * rho;
    const double r1 = p - g.values()[i], r2 = dp;
    const double det = a11 * a22 - a12 * a21;
    const double c2 = (r1 * a22 - a12 * r2) / det;
    const double c3 = (a11 * r2 - a21 * r1) / det;
    return g.values()[i] + c2 * r * r + c3 * r * r * r;
  }
  return norm2(y, t) + g.vertex_value();
}

Point random_point(std::mt19937_64& rng, std::size_t n, double w) {
  std::uniform_real_distribution<double> u(-w, w);
  Point p(n);
  for (auto& c : p) c = u(rng);
  return p;
}

TEST(GklsPresetTest, TableRows) {
  const int dims[] = {2, 2, 3, 3, 4, 4, 5, 5};
  const double d[] = {0.9, 0.9, 0.66, 0.9, 0.66, 0.9, 0.9, 0.9};
  const double r[] = {0.2, 0.1, 0.2, 0.2, 0.2, 0.2, 0.4, 0.3};
  for (int k = 1; k <= kGklsClassCount; ++k) {
    const GklsClassSpec s = gkls_class(k, 7);
    EXPECT_EQ(s.class_id, k);
    EXPECT_EQ(s.dim, static_cast<std::size_t>(dims[k - 1]));
    EXPECT_EQ(s.num_minima, 10);
    EXPECT_EQ(s.f_star, -1.0);
    EXPECT_EQ(s.dist_d, d[k - 1]);
    EXPECT_EQ(s.radius_r, r[k - 1]);
    EXPECT_EQ(s.domain, 1.0);
    EXPECT_EQ(s.seed, 7u);
    const double factor = k <= 6 ? 0.01 : 0.02;
    EXPECT_DOUBLE_EQ(gkls_class_radius(k), factor * std::sqrt(static_cast<double>(dims[k - 1])));
  }
  EXPECT_THROW(gkls_class(0), std::invalid_argument);
  EXPECT_THROW(gkls_class(9), std::invalid_argument);
  EXPECT_EQ(gkls_class_eta(1), 1e-4);
  EXPECT_EQ(gkls_class_eta(3), 1e-7);
  EXPECT_EQ(gkls_class_eta(4), 1e-8);
  EXPECT_EQ(gkls_class_eta(8), 1e-10);
}

TEST(GklsGenerateTest, ClassOneGeometry) {
  for (std::uint64_t idx = 1; idx <= 20; ++idx) {
    const GklsFunction g = generate(gkls_class(1), idx);
    EXPECT_NEAR(std::sqrt(norm2(g.global_minimizer(), g.vertex())), 0.9, 1e-12);
    EXPECT_EQ(g.radii().front(), 0.2);
    EXPECT_EQ(g.global_minimum(), -1.0);
    EXPECT_NEAR(g(g.global_minimizer()), -1.0, 1e-12);
  }
}

TEST(GklsGenerateTest, CertificatesHoldForEveryClass) {
  for (int k = 1; k <= kGklsClassCount; ++k) {
    for (std::uint64_t idx = 1; idx <= 10; ++idx) {
      const GklsFunction g = generate(gkls_class(k), idx);
      const auto& m = g.centers();
      const auto& rho = g.radii();
      const auto& f = g.values();
      ASSERT_EQ(m.size(), 10u);
      EXPECT_EQ(f[0], -1.0);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) {
          EXPECT_GT(f[i], f[0]);
          EXPECT_LT(f[i], g.vertex_value());
        }
        EXPECT_LE(rho[i], std::sqrt(norm2(m[i], g.vertex())) + 1e-15);
        for (double c : m[i]) EXPECT_LE(std::abs(c) + rho[i], 1.0 + 1e-12);
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          EXPECT_GE(std::sqrt(norm2(m[i], m[j])), rho[i] + rho[j] - 1e-12);
        }
      }
      EXPECT_NEAR(g(m[0]), -1.0, 1e-12);
    }
  }
}

TEST(GklsEvaluateTest, MatchesReferenceFormula) {
  std::mt19937_64 rng(5);
  for (int k = 1; k <= kGklsClassCount; ++k) {
    const GklsFunction g = generate(gkls_class(k), 3);
    const std::size_t n = g.spec().dim;
    for (int t = 0; t < 2000; ++t) {
      Point y = random_point(rng, n, 1.0);
      // Half the samples go inside a ball.
      if (t % 2 == 0) {
        const std::size_t i = static_cast<std::size_t>(t / 2) % g.centers().size();
        Point dir = random_point(rng, n, 1.0);
        const double len = std::sqrt(norm2(dir, Point(n, 0.0)));
        const double s = g.radii()[i] * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        for (std::size_t j = 0; j < n; ++j) y[j] = g.centers()[i][j] + s * dir[j] / len;
      }
      const double want = reference_eval(g, y);
      EXPECT_NEAR(g(y), want, 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(GklsEvaluateTest, FarFieldIsTheParaboloid) {
  const GklsFunction g = generate(gkls_class(2), 9);
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 500) {
    const Point y = random_point(rng, 2, 1.0);
    bool outside = true;
    for (std::size_t i = 0; i < g.centers().size(); ++i) {
      outside = outside && std::sqrt(norm2(y, g.centers()[i])) >= g.radii()[i];
    }
    if (!outside) continue;
    EXPECT_EQ(g(y), g.paraboloid(y));
    EXPECT_DOUBLE_EQ(g(y), norm2(y, g.vertex()) + g.vertex_value());
    ++checked;
  }
}

TEST(GklsEvaluateTest, GridNeverBelowGlobalMinimum) {
  for (std::uint64_t idx = 1; idx <= 10; ++idx) {
    const GklsFunction g = generate(gkls_class(1), idx);
    double lowest = INFINITY;
    for (int a = 0; a < 100; ++a) {
      for (int b = 0; b < 100; ++b) {
        const Point y = {-1.0 + 2.0 * (a + 0.5) / 100, -1.0 + 2.0 * (b + 0.5) / 100};
        lowest = std::min(lowest, g(y));
      }
    }
    EXPECT_GE(lowest, -1.0 - 1e-9);
  }
}

TEST(GklsEvaluateTest, ContinuousAcrossBallBoundaries) {
  for (int k : {1, 3, 6}) {
    const GklsFunction g = generate(gkls_class(k), 2);
    const std::size_t n = g.spec().dim;
    std::mt19937_64 rng(static_cast<unsigned>(k));
    for (std::size_t i = 0; i < g.centers().size(); ++i) {
      for (int t = 0; t < 20; ++t) {
        Point dir = random_point(rng, n, 1.0);
        const double len = std::sqrt(norm2(dir, Point(n, 0.0)));
        // The blend matches the paraboloid's value and radial slope on the
        // sphere, so the jump across it is 2 * step * slope + O(step^2).
        Point u(n), b(n);
        double slope = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          u[j] = dir[j] / len;
          b[j] = g.centers()[i][j] + g.radii()[i] * u[j];
          slope += 2.0 * (b[j] - g.vertex()[j]) * u[j];
        }
        for (const double step : {1e-5, 1e-6, 1e-7}) {
          Point in(n), out(n);
          for (std::size_t j = 0; j < n; ++j) {
            in[j] = g.centers()[i][j] + (g.radii()[i] - step) * u[j];
            out[j] = g.centers()[i][j] + (g.radii()[i] + step) * u[j];
          }
          if (std::any_of(out.begin(), out.end(), [](double c) { return std::abs(c) > 1.0; })) {
            break;
          }
          EXPECT_NEAR(g(out) - g(in), 2.0 * step * slope, 1e6 * step * step + 1e-12);
        }
      }
    }
  }
}

TEST(GklsGenerateTest, SeedDeterminism) {
  const GklsFunction a = generate(gkls_class(4, 11), 17);
  const GklsFunction b = generate(gkls_class(4, 11), 17);
  const GklsFunction c = generate(gkls_class(4, 12), 17);
  EXPECT_EQ(a.vertex(), b.vertex());
  EXPECT_EQ(a.centers(), b.centers());
  EXPECT_EQ(a.values(), b.values());
  EXPECT_EQ(a.radii(), b.radii());
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_NE(a.vertex(), c.vertex());
}

TEST(GklsGenerateTest, SingleMinimumIsShiftedParaboloidBasin) {
  GklsClassSpec s = gkls_class(1);
  s.num_minima = 1;
  const GklsFunction g = generate(s, 1);
  ASSERT_EQ(g.centers().size(), 1u);
  EXPECT_NEAR(g(g.global_minimizer()), -1.0, 1e-12);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const Point y = random_point(rng, 2, 1.0);
    EXPECT_GE(g(y), -1.0);
    if (std::sqrt(norm2(y, g.global_minimizer())) >= g.radii()[0]) {
      EXPECT_EQ(g(y), g.paraboloid(y));
    }
  }
}

TEST(GklsGenerateTest, InfeasibleSpecIsReported) {
  GklsClassSpec s;
  s.dim = 1;
  s.num_minima = 2;
  s.dist_d = 1.99;
  s.radius_r = 0.1;
  EXPECT_THROW(generate(s, 1), std::runtime_error);

  s = GklsClassSpec{};
  s.radius_r = 1.0;
  EXPECT_THROW(generate(s, 1), std::invalid_argument);
  s = GklsClassSpec{};
  s.f_star = 0.5;
  EXPECT_THROW(generate(s, 1), std::invalid_argument);
}

TEST(GklsEvaluateTest, DomainErrors) {
  const GklsFunction g = generate(gkls_class(1), 1);
  EXPECT_THROW(g(Point{1.1, 0.0}), std::domain_error);
  EXPECT_THROW(g(Point{0.0, 0.0, 0.0}), std::domain_error);
  EXPECT_THROW(g(Point{NAN, 0.0}), std::domain_error);
  EXPECT_NO_THROW(g(Point{1.0, -1.0}));
}

TEST(GklsJsonTest, Schema) {
  const GklsFunction g = generate(gkls_class(2), 4);
  const auto j = nlohmann::json::parse(to_json(g));
  EXPECT_EQ(j.at("spec").at("class").get<int>(), 2);
  EXPECT_EQ(j.at("spec").at("dim").get<int>(), 2);
  EXPECT_EQ(j.at("index").get<int>(), 4);
  EXPECT_EQ(j.at("vertex").get<Point>(), g.vertex());
  ASSERT_EQ(j.at("minima").size(), g.centers().size());
  for (std::size_t i = 0; i < g.centers().size(); ++i) {
    const auto& m = j.at("minima")[i];
    EXPECT_EQ(m.at("center").get<Point>(), g.centers()[i]);
    EXPECT_EQ(m.at("value").get<double>(), g.values()[i]);
    EXPECT_EQ(m.at("radius").get<double>(), g.radii()[i]);
  }
}

}  // namespace
}  // namespace sfcgo
