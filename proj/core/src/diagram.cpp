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

#include "sfcgo/diagram.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sfcgo {
namespace {

constexpr std::array<std::uint64_t, kMaxTrisectionDepth + 1> kPowersOfThree =
    [] {
      std::array<std::uint64_t, kMaxTrisectionDepth + 1> p{};
      p[0] = 1;
      for (std::size_t i = 1; i < p.size(); ++i) p[i] = 3 * p[i - 1];
      return p;
    }();

void check_depth(int depth) {
  if (depth < 0 || depth > kMaxTrisectionDepth) {
    throw std::invalid_argument("interval depth " + std::to_string(depth) +
                                " out of range");
  }
}

}  // namespace

std::uint64_t power_of_three(int depth) {
  check_depth(depth);
  return kPowersOfThree[static_cast<std::size_t>(depth)];
}

double inverse_power_of_three(int depth) {
  return 1.0 / static_cast<double>(power_of_three(depth));
}

IntervalRecord IntervalRecord::make(IntervalId id, int depth,
                                    std::uint64_t offset, double f_mid) {
  const std::uint64_t denom = power_of_three(depth);
  if (offset >= denom) {
    throw std::invalid_argument("interval offset out of range for its depth");
  }
  IntervalRecord iv;
  iv.id = id;
  iv.depth = depth;
  iv.offset = offset;
  iv.a = static_cast<double>(offset) / static_cast<double>(denom);
  iv.b = static_cast<double>(offset + 1) / static_cast<double>(denom);
  iv.f_mid = f_mid;
  return iv;
}

double IntervalRecord::midpoint() const {
  // (2k + 1) / (2 * 3^d); both operands are exact in double.
  const std::uint64_t denom = power_of_three(depth);
  return static_cast<double>(2 * offset + 1) / static_cast<double>(2 * denom);
}

double IntervalRecord::left_child_midpoint() const {
  const std::uint64_t denom = power_of_three(depth + 1);
  return static_cast<double>(6 * offset + 1) / static_cast<double>(2 * denom);
}

double IntervalRecord::right_child_midpoint() const {
  const std::uint64_t denom = power_of_three(depth + 1);
  return static_cast<double>(6 * offset + 5) / static_cast<double>(2 * denom);
}

double h_coordinate(double length, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("h_coordinate: dim must be >= 1");
  const double half = length / 2.0;
  if (dim == 1) return half;
  if (dim == 2) return std::sqrt(half);
  return std::exp(std::log(half) / static_cast<double>(dim));
}

double h_coordinate(const IntervalRecord& iv, std::size_t dim) {
  return h_coordinate(iv.length(), dim);
}

DiagramPoint make_point(const IntervalRecord& iv, std::size_t dim) {
  return DiagramPoint{iv.id, h_coordinate(iv, dim), iv.f_mid};
}

double holder_constant_from_lipschitz(double lipschitz, std::size_t dim) {
  if (!(lipschitz > 0.0) || !std::isfinite(lipschitz)) {
    throw std::domain_error("Lipschitz constant must be positive and finite");
  }
  if (dim == 0) throw std::domain_error("dimension must be >= 1");
  return 2.0 * lipschitz * std::sqrt(static_cast<double>(dim) + 3.0);
}

void write_diagram_csv(std::ostream& os, std::span<const IntervalRecord> ivs,
                       std::size_t dim) {
  const auto old_precision = os.precision(17);
  os << "id,a,b,f_mid,h\n";
  for (const auto& iv : ivs) {
    os << iv.id << ',' << iv.a << ',' << iv.b << ',' << iv.f_mid << ','
       << h_coordinate(iv, dim) << '\n';
  }
  os.precision(old_precision);
}

}  // namespace sfcgo
