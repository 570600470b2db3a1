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

#include <optional>
#include <string_view>
#include <vector>

#include "shelltok/mesh.hpp"
#include "shelltok/shell_tokenizer.hpp"
#include "shelltok/token_layout.hpp"

namespace shelltok {

enum class Scheme : std::uint8_t { nautilus = 0, naive9n = 1, strip = 2 };

std::string_view scheme_name(Scheme s);
/// Accepts "nautilus", "naive9n" and "strip".
std::optional<Scheme> parse_scheme(std::string_view name);

/// How a baseline writes one vertex: three raw coordinate tokens in
/// [0, resolution), or the (u, v + u_size) pair of the shell codec's layout.
enum class CoordEncoding : std::uint8_t { raw, compressed };

struct BaselineTokenSequence {
  Scheme scheme = Scheme::naive9n;
  CoordEncoding encoding = CoordEncoding::raw;
  std::vector<Token> tokens;
  /// First token index of every vertex occurrence, in emission order.
  std::vector<Occurrence> occurrences;
};

/// Three vertices per face in face order, every vertex spelled out: 9N tokens
/// with raw coordinates.
BaselineTokenSequence naive_tokenize(const QuantizedMesh& mesh,
                                     CoordEncoding encoding = CoordEncoding::raw,
                                     const std::optional<TokenLayout>& layout = std::nullopt);

/// Greedy strips: a strip opens with all three vertices of the lowest
/// unvisited face, then repeatedly moves to the lowest-id unvisited face
/// sharing an edge with the previous one and emits only its new vertex.
BaselineTokenSequence strip_tokenize(const QuantizedMesh& mesh,
                                     CoordEncoding encoding = CoordEncoding::raw,
                                     const std::optional<TokenLayout>& layout = std::nullopt);

}  // namespace shelltok
