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

#include <cstdint>
#include <span>
#include <vector>

#include "shelltok/mesh.hpp"

namespace shelltok {

/// Vertex/edge/face incidence of a QuantizedMesh plus the traversal state of
/// the shell builder: a visited flag per face and, per vertex, the number of
/// incident edges that are still unvisited. An edge becomes visited as soon
/// as any face containing it is visited.
///
/// The index is owned by a single traversal. It copies the face list, so it
/// stays valid when the source mesh goes away.
class AdjacencyIndex {
 public:
  explicit AdjacencyIndex(const QuantizedMesh& mesh);

  Index num_vertices() const { return static_cast<Index>(degree_.size()); }
  Index num_faces() const { return static_cast<Index>(faces_.size()); }
  const Face& face(Index f) const { return faces_[static_cast<std::size_t>(f)]; }

  /// Faces containing `v`, ascending by face id.
  std::span<const Index> incident_faces(Index v) const;
  /// Faces containing the undirected edge (a, b), ascending. Empty if absent.
  std::span<const Index> edge_faces(Index a, Index b) const;
  /// Every undirected edge as an edge_key, ascending.
  std::span<const std::uint64_t> edges() const { return edge_keys_; }

  Index degree(Index v) const { return degree_[static_cast<std::size_t>(v)]; }
  bool visited(Index f) const { return visited_[static_cast<std::size_t>(f)] != 0; }
  Index remaining_faces() const { return remaining_; }
  /// Lowest unvisited face id, or -1 when all faces are visited.
  Index first_unvisited_face() const;

  /// Marks faces visited and refreshes the degree of every touched vertex.
  void mark_visited(std::span<const Index> faces);

  /// Vertices sharing an unvisited face with `v`, ascending.
  std::vector<Index> unvisited_neighbors(Index v) const;

 private:
  Index count_live_edges(Index v) const;

  std::vector<Face> faces_;
  std::vector<Index> vf_offsets_, vf_faces_;
  std::vector<std::uint64_t> edge_keys_;
  std::vector<Index> ef_offsets_, ef_faces_;
  std::vector<Index> degree_;
  std::vector<std::uint8_t> visited_;
  Index remaining_ = 0;
  mutable Index first_hint_ = 0;
};

/// Builds the incidence maps of a mesh with no face visited yet.
inline AdjacencyIndex build_adjacency(const QuantizedMesh& mesh) { return AdjacencyIndex(mesh); }

struct TopologyReport {
  Index boundary_edge_count = 0;
  /// Maximal chains of boundary edges whose interior vertices touch exactly
  /// two boundary edges. A closed hole is one chain.
  Index boundary_loop_count = 0;
  Index nonmanifold_edge_count = 0;
  bool is_closed_manifold = true;
};

TopologyReport topology_report(const QuantizedMesh& mesh);

}  // namespace shelltok
