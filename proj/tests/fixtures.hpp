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
#include <filesystem>
#include <string>
#include <vector>

#include "shelltok/mesh.hpp"
#include "shelltok/token_layout.hpp"

namespace fixtures {

using shelltok::Face;
using shelltok::LatticePoint;
using shelltok::QuantizedMesh;
using Raw = shelltok::RawMesh<double>;

QuantizedMesh lattice_mesh(const std::vector<LatticePoint>& vertices, const std::vector<Face>& faces,
                           std::int32_t resolution = 128);
Raw raw_mesh(const std::vector<std::array<double, 3>>& vertices, const std::vector<Face>& faces);

/// Vertices (0,0,0), (4,0,0), (0,4,0), (0,0,4) with faces (0,1,2), (0,1,3),
/// (0,2,3), (1,2,3) exactly as listed. The winding is not consistent.
QuantizedMesh canonical_tetrahedron();
/// Same vertices, outward winding.
QuantizedMesh oriented_tetrahedron();
/// Random non-degenerate lattice tetrahedron, outward winding.
QuantizedMesh random_tetrahedron(std::uint64_t seed);

Raw cube();
/// Each side split into n x n quads (two triangles each), welded.
Raw subdivided_cube(int n);
Raw icosphere(int subdivisions);
Raw uv_sphere(int rings, int segments);
Raw torus(int major_segments, int minor_segments, double major = 1.0, double minor = 0.35);
/// Open heightfield of (nx - 1) x (ny - 1) quads.
Raw grid_patch(int nx, int ny, std::uint64_t seed);
/// Closed surface after orientation-preserving edge flips, vertex jitter and
/// random vertex/face/rotation permutation.
Raw fuzzed_manifold(std::uint64_t seed);

QuantizedMesh cube_with_hole();
/// Three triangles sharing one edge.
QuantizedMesh three_fins();
QuantizedMesh crossing_triangles();
/// Two triangles touching at one vertex.
QuantizedMesh bowtie();
/// m faces around an apex whose ring closes on itself.
QuantizedMesh umbrella(int m);
/// k triangles chained edge to edge along a zig-zag.
QuantizedMesh triangle_strip(int k);
/// Random lattice triangles, some coplanar, for intersection tests.
QuantizedMesh triangle_soup(int count, std::uint64_t seed);

struct Named {
  std::string name;
  QuantizedMesh mesh;
};

/// Closed manifold corpus (cubes, spheres, tori, fuzzed surfaces) at 128.
std::vector<Named> closed_manifold_corpus();
/// Mixed round-trip corpus with at least 200 meshes.
std::vector<Named> roundtrip_corpus();

/// No directed edge appears in two faces.
bool consistently_oriented(const QuantizedMesh& mesh);
double signed_volume(const Raw& mesh);

/// Fresh empty directory under the system temp path.
std::filesystem::path scratch_dir(const std::string& tag);
void write_obj_file(const std::filesystem::path& path, const Raw& mesh);

}  // namespace fixtures
