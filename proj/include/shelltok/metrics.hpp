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

#include <cstddef>
#include <cstdint>
#include <span>

#include "shelltok/mesh.hpp"
#include "shelltok/shell_tokenizer.hpp"

namespace shelltok {

/// body_tokens / (9 * face_count). Throws Error for zero faces.
double compression_ratio(std::size_t body_tokens, std::size_t face_count);

/// Locality of a serialization.
///
/// For every vertex with at least one mesh neighbor, t(v) is the token index
/// of its first occurrence; the vertex scores the fraction of its neighbors
/// that occur anywhere in [max(0, t(v) - window), t(v)). The result is the
/// mean score. Vertices with an empty window score 0 and are still counted.
/// Throws Error when a mesh vertex never occurs in the sequence.
double local_ratio(std::span<const Occurrence> occurrences, const QuantizedMesh& mesh,
                   std::size_t window = 100);

struct SequenceMetrics {
  double compression_ratio = 0;
  double local_ratio = 0;
  std::size_t token_count = 0;
  Index face_count = 0;
};

struct QualityReport {
  Index surface_hole_count = 0;
  std::int64_t intersecting_pair_count = 0;
  Index nonmanifold_edge_count = 0;
  bool is_manifold_result = true;
};

/// Boundary loops, self-intersecting face pairs and non-manifold edges.
QualityReport quality_report(const QuantizedMesh& mesh);

}  // namespace shelltok
