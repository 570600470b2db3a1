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

#include "shelltok/metrics.hpp"

#include <algorithm>
#include <vector>

#include "shelltok/adjacency.hpp"
#include "shelltok/intersection.hpp"

namespace shelltok {

double compression_ratio(std::size_t body_tokens, std::size_t face_count) {
  if (face_count == 0) throw Error("compression ratio of a mesh without faces");
  return static_cast<double>(body_tokens) / (9.0 * static_cast<double>(face_count));
}

double local_ratio(std::span<const Occurrence> occurrences, const QuantizedMesh& mesh,
                   std::size_t window) {
  const auto nv = static_cast<std::size_t>(mesh.num_vertices());
  std::vector<std::vector<std::size_t>> seen(nv);
  for (const Occurrence& o : occurrences) {
    if (o.vertex < 0 || static_cast<std::size_t>(o.vertex) >= nv)
      throw Error("sequence references vertex " + std::to_string(o.vertex) +
                  " which the mesh does not have");
    seen[static_cast<std::size_t>(o.vertex)].push_back(o.position);
  }
  for (auto& s : seen) std::sort(s.begin(), s.end());

  const AdjacencyIndex adj(mesh);
  std::vector<std::vector<Index>> neighbors(nv);
  for (std::uint64_t key : adj.edges()) {
    const auto [a, b] = edge_vertices(key);
    neighbors[static_cast<std::size_t>(a)].push_back(b);
    neighbors[static_cast<std::size_t>(b)].push_back(a);
  }

  double total = 0;
  std::size_t counted = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (neighbors[v].empty()) continue;
    if (seen[v].empty())
      throw Error("vertex " + std::to_string(v) + " is absent from the sequence");
    const std::size_t t = seen[v].front();
    const std::size_t lo = t > window ? t - window : 0;
    std::size_t hits = 0;
    for (Index u : neighbors[v]) {
      const auto& pos = seen[static_cast<std::size_t>(u)];
      auto it = std::lower_bound(pos.begin(), pos.end(), lo);
      if (it != pos.end() && *it < t) ++hits;
    }
    total += static_cast<double>(hits) / static_cast<double>(neighbors[v].size());
    ++counted;
  }
  return counted ? total / static_cast<double>(counted) : 0.0;
}

QualityReport quality_report(const QuantizedMesh& mesh) {
  const TopologyReport topo = topology_report(mesh);
  QualityReport q;
  q.surface_hole_count = topo.boundary_loop_count;
  q.nonmanifold_edge_count = topo.nonmanifold_edge_count;
  q.intersecting_pair_count = count_self_intersections(mesh);
  q.is_manifold_result = q.surface_hole_count == 0 && q.intersecting_pair_count == 0 &&
                         q.nonmanifold_edge_count == 0;
  return q;
}

}  // namespace shelltok
