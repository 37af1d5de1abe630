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

#include "sfcgo/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace sfcgo {
namespace {

// Skilling, "Programming the Hilbert curve" (AIP Conf. Proc. 707, 2004):
// converts the transposed Hilbert index held in x[0..n) (bits bits each) into
// grid coordinates, in place.
void transpose_to_axes(std::span<std::uint64_t> x, int bits) {
  const std::size_t n = x.size();
  const std::uint64_t top = std::uint64_t{2} << (bits - 1);

  // Gray decode.
  std::uint64_t t = x[n - 1] >> 1;
  for (std::size_t i = n - 1; i > 0; --i) x[i] ^= x[i - 1];
  x[0] ^= t;

  // Undo excess work.
  for (std::uint64_t q = 2; q != top; q <<= 1) {
    const std::uint64_t p = q - 1;
    for (std::size_t i = n; i-- > 0;) {
      if (x[i] & q) {
        x[0] ^= p;
      } else {
        t = (x[0] ^ x[i]) & p;
        x[0] ^= t;
        x[i] ^= t;
      }
    }
  }
}

}  // namespace

int max_index_bits() noexcept {
  return std::numeric_limits<double>::digits - 1;
}

CurveMap::CurveMap(std::size_t dim, int level, Box box, int index_bits)
    : dim_(dim), level_(level), box_(std::move(box)) {
  if (dim_ == 0) throw std::invalid_argument("curve: dimension must be >= 1");
  if (level_ < 1) throw std::invalid_argument("curve: level must be >= 1");
  if (box_.dim() != dim_) {
    throw std::invalid_argument("curve: box dimension does not match dim");
  }
  box_.validate();
  const int limit = std::min(index_bits, 63);
  if (static_cast<long long>(dim_) * level_ > limit) {
    throw std::invalid_argument(
        "curve: dim * level = " + std::to_string(dim_ * level_) +
        " exceeds the " + std::to_string(limit) + "-bit cell index");
  }
  cell_count_ = std::uint64_t{1} << (dim_ * static_cast<std::size_t>(level_));
  cell_side_ = std::ldexp(1.0, -level_);
}

CurveMap CurveMap::unit(std::size_t dim, int level) {
  return CurveMap(dim, level, Box::unit(dim));
}

std::uint64_t CurveMap::cell_index(double x) const {
  if (!(x >= -domain_tolerance() && x <= 1.0 + domain_tolerance())) {
    throw std::domain_error("curve: abscissa " + std::to_string(x) +
                            " outside [0, 1]");
  }
  if (x <= 0.0) return 0;
  if (x >= 1.0) return cell_count_ - 1;
  const double scaled = std::ldexp(x, index_bits());
  const auto i = static_cast<std::uint64_t>(scaled);
  return i < cell_count_ ? i : cell_count_ - 1;
}

void CurveMap::grid_coords(std::uint64_t i, std::span<std::uint64_t> out) const {
  if (i >= cell_count_) {
    throw std::out_of_range("curve: cell index " + std::to_string(i) +
                            " out of range");
  }
  if (out.size() != dim_) throw std::invalid_argument("curve: bad out size");
  // Bit j*n + (n-1-k) of the index is bit j of the k-th transposed word.
  for (auto& w : out) w = 0;
  for (int j = 0; j < level_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::size_t pos = static_cast<std::size_t>(j) * dim_ + (dim_ - 1 - k);
      out[k] |= ((i >> pos) & 1u) << j;
    }
  }
  transpose_to_axes(out, level_);
}

std::vector<std::uint64_t> CurveMap::grid_coords(std::uint64_t i) const {
  std::vector<std::uint64_t> out(dim_);
  grid_coords(i, out);
  return out;
}

void CurveMap::cell_center(std::uint64_t i, std::span<double> out) const {
  if (out.size() != dim_) throw std::invalid_argument("curve: bad out size");
  std::uint64_t coords[64];
  grid_coords(i, std::span<std::uint64_t>(coords, dim_));
  for (std::size_t k = 0; k < dim_; ++k) {
    const double u = (static_cast<double>(coords[k]) + 0.5) * cell_side_;
    out[k] = box_.lo[k] + u * (box_.hi[k] - box_.lo[k]);
  }
}

Point CurveMap::cell_center(std::uint64_t i) const {
  Point out(dim_);
  cell_center(i, out);
  return out;
}

void CurveMap::map(double x, std::span<double> out) const {
  cell_center(cell_index(x), out);
}

Point CurveMap::map(double x) const { return cell_center(cell_index(x)); }

double CurveMap::cell_diagonal() const { return cell_side_ * box_.diagonal(); }

}  // namespace sfcgo
