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

#include <Eigen/Core>

#include "shelltok/mesh.hpp"

namespace shelltok {

using LatticeVector = Eigen::Matrix<std::int64_t, 3, 1>;

/// Exact test whether two closed triangles with integer corners share a
/// point. Degenerate (collinear) triangles are handled as segments.
bool triangles_intersect(const LatticeVector& a0, const LatticeVector& a1, const LatticeVector& a2,
                         const LatticeVector& b0, const LatticeVector& b1, const LatticeVector& b2);

/// True when faces f and g share no vertex and their triangles intersect.
bool faces_intersect(const QuantizedMesh& mesh, Index f, Index g);

/// Number of unordered face pairs that share no vertex and intersect.
/// Candidate pairs come from a uniform grid over the lattice; the count is
/// identical to testing all pairs.
std::int64_t count_self_intersections(const QuantizedMesh& mesh);

}  // namespace shelltok
