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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "shelltok/mesh.hpp"

namespace shelltok {

namespace detail {
/// Merges coincident lattice points, drops faces that repeat an index and
/// removes vertices no face references. Throws ResolutionCollapse when no
/// face survives.
QuantizedMesh weld(std::int32_t resolution, const LatticeMatrix& lattice,
                   const FaceMatrix& faces);
}  // namespace detail

/// Snaps a mesh onto the [0, resolution)^3 lattice.
///
/// The bounding box of the referenced vertices is centered in the unit cube
/// and scaled uniformly so its longest side spans [0, 1]; each coordinate c
/// then lands in bin floor(c * resolution), clamped to resolution - 1.
/// Coincident bins are merged and collapsed faces dropped.
template <typename Scalar>
QuantizedMesh quantize(const RawMesh<Scalar>& mesh, std::int32_t resolution = 128) {
  if (resolution < 2) throw Error("resolution must be at least 2");
  if (resolution > (1 << 20)) throw Error("resolution must not exceed 2^20");
  if (mesh.num_faces() == 0) throw Error("cannot quantize a mesh without faces");
  for (Index f = 0; f < mesh.num_faces(); ++f)
    for (int k = 0; k < 3; ++k)
      if (mesh.faces(f, k) < 0 || mesh.faces(f, k) >= mesh.num_vertices())
        throw Error("face " + std::to_string(f) + " references a missing vertex");

  Eigen::Vector3d lo = Eigen::Vector3d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector3d hi = -lo;
  for (Index f = 0; f < mesh.num_faces(); ++f) {
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d p = mesh.vertices.row(mesh.faces(f, k)).template cast<double>();
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
  const double extent = (hi - lo).maxCoeff();
  if (!std::isfinite(extent) || !(extent > 0))
    throw ResolutionCollapse("mesh has zero extent; every face collapses");
  const Eigen::Vector3d center = 0.5 * (lo + hi);

  LatticeMatrix lattice(mesh.num_vertices(), 3);
  for (Index v = 0; v < mesh.num_vertices(); ++v) {
    for (int k = 0; k < 3; ++k) {
      const double unit = (static_cast<double>(mesh.vertices(v, k)) - center[k]) / extent + 0.5;
      double bin = std::floor(unit * resolution);
      bin = std::clamp(bin, 0.0, static_cast<double>(resolution - 1));
      lattice(v, k) = static_cast<std::int32_t>(bin);
    }
  }
  return detail::weld(resolution, lattice, mesh.faces);
}

/// Reorders vertices ascending by (z, y, x) and faces ascending by their
/// smallest vertex index, ties broken by the ascending index triple. Each face
/// is rotated to start at its smallest index; the winding is kept.
QuantizedMesh canonical_sort(const QuantizedMesh& mesh);

/// Rotates a face so its smallest index comes first, keeping the winding.
inline Face rotate_to_min(Face f) {
  while (f[0] > f[1] || f[0] > f[2]) f = {f[1], f[2], f[0]};
  return f;
}

}  // namespace shelltok
