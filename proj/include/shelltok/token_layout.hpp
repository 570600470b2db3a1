// Copyright 2026 The shelltok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>

#include "shelltok/mesh.hpp"

namespace shelltok {

using Token = std::uint32_t;

/// Partition of the token id space.
///
///   [0, u_size)                     u of a ring vertex
///   [u_size, u_size + v_size)       v of any vertex
///   [u_size + v_size, 2u + v)       u of a shell center
///   2u + v, 2u + v + 1              start / end of sequence
///
/// A lattice point (x, y, z) is linearized to x*a^2 + y*a + z and split into
/// u = index / multiplier and v = index % multiplier.
class TokenLayout {
 public:
  TokenLayout() : TokenLayout(128, 2048) {}
  /// Throws Error unless resolution >= 2, multiplier >= 1 and the vocabulary
  /// fits in 32 bits.
  TokenLayout(std::uint32_t resolution, std::uint32_t multiplier);

  std::uint32_t resolution() const { return resolution_; }
  std::uint32_t multiplier() const { return multiplier_; }

  std::uint32_t u_size() const { return u_size_; }
  std::uint32_t v_size() const { return multiplier_; }
  Token ring_u_offset() const { return 0; }
  Token v_offset() const { return u_size_; }
  Token center_u_offset() const { return u_size_ + multiplier_; }
  Token sos() const { return 2 * u_size_ + multiplier_; }
  Token eos() const { return sos() + 1; }
  std::uint32_t vocabulary_size() const { return eos() + 1; }

  std::uint64_t lattice_points() const {
    return std::uint64_t{resolution_} * resolution_ * resolution_;
  }

  bool is_ring_u(Token t) const { return t < u_size_; }
  bool is_v(Token t) const { return t >= v_offset() && t < center_u_offset(); }
  bool is_center_u(Token t) const { return t >= center_u_offset() && t < sos(); }

  friend bool operator==(const TokenLayout&, const TokenLayout&) = default;

 private:
  std::uint32_t resolution_;
  std::uint32_t multiplier_;
  std::uint32_t u_size_;
};

struct UV {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend bool operator==(const UV&, const UV&) = default;
};

using LatticePoint = std::array<std::int32_t, 3>;

/// Linearizes a lattice point and splits it into (u, v). Throws Error when a
/// coordinate lies outside [0, resolution).
UV compress_coords(std::int32_t x, std::int32_t y, std::int32_t z, const TokenLayout& layout);
inline UV compress_coords(const LatticePoint& p, const TokenLayout& layout) {
  return compress_coords(p[0], p[1], p[2], layout);
}

/// Inverse of compress_coords. Throws Error when (u, v) is not the image of a
/// lattice point.
LatticePoint decompress_coords(std::uint32_t u, std::uint32_t v, const TokenLayout& layout);

}  // namespace shelltok
