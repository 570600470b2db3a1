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
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "shelltok/mesh.hpp"

namespace shelltok {

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit engine draw.
/// Unlike std::uniform_real_distribution the sequence is identical across
/// standard libraries.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Triangle areas of a mesh, one per face.
template <typename Derived>
std::vector<double> face_areas(const Eigen::MatrixBase<Derived>& vertices, const FaceMatrix& faces) {
  std::vector<double> areas(static_cast<std::size_t>(faces.rows()));
  for (Eigen::Index f = 0; f < faces.rows(); ++f) {
    const Eigen::Vector3d a = vertices.row(faces(f, 0)).transpose().template cast<double>();
    const Eigen::Vector3d b = vertices.row(faces(f, 1)).transpose().template cast<double>();
    const Eigen::Vector3d c = vertices.row(faces(f, 2)).transpose().template cast<double>();
    areas[static_cast<std::size_t>(f)] = 0.5 * (b - a).cross(c - a).norm();
  }
  return areas;
}

struct SurfaceSample {
  PositionMatrix<double> points;
  /// Face each point was drawn from.
  std::vector<Index> faces;
};

/// Draws `count` points uniformly from the surface: a face with probability
/// proportional to its area, then a point via the square-root barycentric
/// map p = (1 - s) a + s (1 - r) b + s r c with s = sqrt(r1). Deterministic
/// for a fixed seed. Throws Error when the surface has zero area.
template <typename Derived>
SurfaceSample sample_surface(const Eigen::MatrixBase<Derived>& vertices, const FaceMatrix& faces,
                             std::size_t count = 1024, std::uint64_t seed = 0) {
  const std::vector<double> areas = face_areas(vertices, faces);
  std::vector<double> cdf(areas.size());
  double total = 0;
  for (std::size_t f = 0; f < areas.size(); ++f) cdf[f] = total += areas[f];
  if (!(total > 0)) throw Error("cannot sample a surface with zero area");

  std::mt19937_64 rng(seed);
  SurfaceSample out;
  out.points.resize(static_cast<Eigen::Index>(count), 3);
  out.faces.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double pick = unit_draw(rng) * total;
    auto f = static_cast<Eigen::Index>(std::upper_bound(cdf.begin(), cdf.end(), pick) - cdf.begin());
    f = std::min<Eigen::Index>(f, faces.rows() - 1);
    // Never land on a zero-area face sitting at the end of the table.
    while (areas[static_cast<std::size_t>(f)] == 0) --f;

    const double s = std::sqrt(unit_draw(rng));
    const double r = unit_draw(rng);
    const Eigen::Vector3d a = vertices.row(faces(f, 0)).transpose().template cast<double>();
    const Eigen::Vector3d b = vertices.row(faces(f, 1)).transpose().template cast<double>();
    const Eigen::Vector3d c = vertices.row(faces(f, 2)).transpose().template cast<double>();
    out.points.row(static_cast<Eigen::Index>(i)) = ((1 - s) * a + s * (1 - r) * b + s * r * c).transpose();
    out.faces[i] = static_cast<Index>(f);
  }
  return out;
}

}  // namespace shelltok
