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

#include "shelltok/token_layout.hpp"

#include <string>

namespace shelltok {

TokenLayout::TokenLayout(std::uint32_t resolution, std::uint32_t multiplier)
    : resolution_(resolution), multiplier_(multiplier), u_size_(0) {
  if (resolution < 2) throw Error("resolution must be at least 2");
  if (resolution > (1u << 20)) throw Error("resolution must not exceed 2^20");
  if (multiplier < 1) throw Error("multiplier must be positive");
  const std::uint64_t points = lattice_points();
  const std::uint64_t u = (points + multiplier - 1) / multiplier;
  // 2u + v + 2 ids must fit a 32-bit token.
  if (2 * u + multiplier + 2 > std::uint64_t{UINT32_MAX})
    throw Error("vocabulary for resolution " + std::to_string(resolution) + " and multiplier " +
                std::to_string(multiplier) + " exceeds 32 bits");
  u_size_ = static_cast<std::uint32_t>(u);
}

UV compress_coords(std::int32_t x, std::int32_t y, std::int32_t z, const TokenLayout& layout) {
  const auto a = static_cast<std::int64_t>(layout.resolution());
  for (std::int32_t c : {x, y, z})
    if (c < 0 || c >= a)
      throw Error("lattice coordinate " + std::to_string(c) + " outside [0, " +
                  std::to_string(a) + ")");
  const auto index = static_cast<std::uint64_t>((x * a + y) * a + z);
  return {static_cast<std::uint32_t>(index / layout.multiplier()),
          static_cast<std::uint32_t>(index % layout.multiplier())};
}

LatticePoint decompress_coords(std::uint32_t u, std::uint32_t v, const TokenLayout& layout) {
  if (u >= layout.u_size() || v >= layout.multiplier())
    throw Error("(u, v) = (" + std::to_string(u) + ", " + std::to_string(v) +
                ") outside the codebook");
  const std::uint64_t index = std::uint64_t{u} * layout.multiplier() + v;
  if (index >= layout.lattice_points())
    throw Error("(u, v) = (" + std::to_string(u) + ", " + std::to_string(v) +
                ") is not a lattice point");
  const std::uint64_t a = layout.resolution();
  return {static_cast<std::int32_t>(index / (a * a)), static_cast<std::int32_t>((index / a) % a),
          static_cast<std::int32_t>(index % a)};
}

}  // namespace shelltok
