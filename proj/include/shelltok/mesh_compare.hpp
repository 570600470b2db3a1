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

#include <string>

#include "shelltok/mesh.hpp"

namespace shelltok {

/// Structural comparison of two lattice meshes by coordinates, independent of
/// vertex numbering, face order and the rotation of each face.
struct MeshComparison {
  bool vertices_equal = false;
  /// Face multisets equal when each face is an unordered vertex triple.
  bool faces_equal = false;
  /// Face multisets equal up to cyclic rotation of each face.
  bool oriented_faces_equal = false;
  /// First difference found, empty when the meshes are identical.
  std::string divergence;

  bool lossless() const { return vertices_equal && faces_equal; }
};

MeshComparison compare_meshes(const QuantizedMesh& expected, const QuantizedMesh& actual);

}  // namespace shelltok
