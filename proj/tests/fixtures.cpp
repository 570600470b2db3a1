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

#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Geometry>

#include "shelltok/adjacency.hpp"
#include "shelltok/obj_io.hpp"
#include "shelltok/quantize.hpp"

namespace fixtures {

using shelltok::Index;

QuantizedMesh lattice_mesh(const std::vector<LatticePoint>& vertices, const std::vector<Face>& faces,
                           std::int32_t resolution) {
  QuantizedMesh m;
  m.resolution = resolution;
  m.vertices.resize(static_cast<Eigen::Index>(vertices.size()), 3);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int k = 0; k < 3; ++k) m.vertices(static_cast<Eigen::Index>(v), k) = vertices[v][static_cast<std::size_t>(k)];
  m.faces.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int k = 0; k < 3; ++k) m.faces(static_cast<Eigen::Index>(f), k) = faces[f][static_cast<std::size_t>(k)];
  return m;
}

Raw raw_mesh(const std::vector<std::array<double, 3>>& vertices, const std::vector<Face>& faces) {
  Raw m;
  m.vertices.resize(static_cast<Eigen::Index>(vertices.size()), 3);
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int k = 0; k < 3; ++k) m.vertices(static_cast<Eigen::Index>(v), k) = vertices[v][static_cast<std::size_t>(k)];
  m.faces.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int k = 0; k < 3; ++k) m.faces(static_cast<Eigen::Index>(f), k) = faces[f][static_cast<std::size_t>(k)];
  return m;
}

namespace {

std::vector<LatticePoint> tet_points() { return {{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}}; }

std::int64_t det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c, const LatticePoint& d) {
  const std::int64_t ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
  const std::int64_t vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
  const std::int64_t wx = d[0] - a[0], wy = d[1] - a[1], wz = d[2] - a[2];
  return ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
}

void flip_all(Raw& m) {
  for (Index f = 0; f < m.num_faces(); ++f) std::swap(m.faces(f, 1), m.faces(f, 2));
}

void orient_outward(Raw& m) {
  if (signed_volume(m) < 0) flip_all(m);
}

std::vector<Face> faces_of(const Raw& m) {
  std::vector<Face> out;
  for (Index f = 0; f < m.num_faces(); ++f) out.push_back({m.faces(f, 0), m.faces(f, 1), m.faces(f, 2)});
  return out;
}

std::vector<std::array<double, 3>> vertices_of(const Raw& m) {
  std::vector<std::array<double, 3>> out;
  for (Index v = 0; v < m.num_vertices(); ++v) out.push_back({m.vertices(v, 0), m.vertices(v, 1), m.vertices(v, 2)});
  return out;
}

QuantizedMesh checked_closed(const std::string& name, const Raw& raw) {
  QuantizedMesh q = shelltok::quantize(raw, 128);
  const auto t = shelltok::topology_report(q);
  if (!t.is_closed_manifold || !consistently_oriented(q))
    throw std::logic_error("fixture " + name + " is not an oriented closed manifold after quantization");
  return q;
}

}  // namespace

QuantizedMesh canonical_tetrahedron() { return lattice_mesh(tet_points(), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

QuantizedMesh oriented_tetrahedron() { return lattice_mesh(tet_points(), {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}); }

QuantizedMesh random_tetrahedron(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 127);
  for (;;) {
    std::vector<LatticePoint> p(4);
    for (auto& q : p) q = {coord(rng), coord(rng), coord(rng)};
    const std::int64_t d = det3(p[0], p[1], p[2], p[3]);
    if (d == 0) continue;
    if (d < 0) std::swap(p[1], p[2]);
    return lattice_mesh(p, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
  }
}

Raw cube() { return subdivided_cube(1); }

Raw subdivided_cube(int n) {
  std::map<std::array<int, 3>, Index> ids;
  std::vector<std::array<double, 3>> verts;
  std::vector<Face> faces;
  const auto id = [&](std::array<int, 3> p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<Index>(verts.size()));
    if (inserted) verts.push_back({double(p[0]) / n, double(p[1]) / n, double(p[2]) / n});
    return it->second;
  };
  for (int axis = 0; axis < 3; ++axis) {
    const int u = (axis + 1) % 3, v = (axis + 2) % 3;
    for (int side = 0; side < 2; ++side) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          std::array<int, 3> p{};
          p[static_cast<std::size_t>(axis)] = side * n;
          const auto at = [&](int di, int dj) {
            std::array<int, 3> q = p;
            q[static_cast<std::size_t>(u)] = i + di;
            q[static_cast<std::size_t>(v)] = j + dj;
            return id(q);
          };
          const Index a = at(0, 0), b = at(1, 0), c = at(1, 1), d = at(0, 1);
          // e_u x e_v = e_axis, so (a, b, c, d) faces +axis.
          if (side == 1) {
            faces.push_back({a, b, c});
            faces.push_back({a, c, d});
          } else {
            faces.push_back({a, c, b});
            faces.push_back({a, d, c});
          }
        }
      }
    }
  }
  return raw_mesh(verts, faces);
}

Raw icosphere(int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> verts{{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                                           {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                                           {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  std::vector<Face> faces{{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                          {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                          {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                          {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  const auto normalize = [](std::array<double, 3> p) {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return std::array<double, 3>{p[0] / r, p[1] / r, p[2] / r};
  };
  for (auto& v : verts) v = normalize(v);
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<Index, Index>, Index> mid;
    const auto midpoint = [&](Index a, Index b) {
      const auto key = std::minmax(a, b);
      auto [it, inserted] = mid.try_emplace({key.first, key.second}, static_cast<Index>(verts.size()));
      if (inserted) {
        const auto& p = verts[static_cast<std::size_t>(a)];
        const auto& q = verts[static_cast<std::size_t>(b)];
        verts.push_back(normalize({p[0] + q[0], p[1] + q[1], p[2] + q[2]}));
      }
      return it->second;
    };
    std::vector<Face> next;
    for (const Face& f : faces) {
      const Index ab = midpoint(f[0], f[1]), bc = midpoint(f[1], f[2]), ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  Raw m = raw_mesh(verts, faces);
  orient_outward(m);
  return m;
}

Raw uv_sphere(int rings, int segments) {
  std::vector<std::array<double, 3>> verts{{0, 0, 1}};
  for (int r = 1; r < rings; ++r) {
    const double theta = M_PI * r / rings;
    for (int s = 0; s < segments; ++s) {
      const double phi = 2 * M_PI * s / segments;
      verts.push_back({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)});
    }
  }
  verts.push_back({0, 0, -1});
  const Index south = static_cast<Index>(verts.size()) - 1;
  const auto at = [&](int r, int s) { return static_cast<Index>(1 + (r - 1) * segments + (s % segments)); };
  std::vector<Face> faces;
  for (int s = 0; s < segments; ++s) faces.push_back({0, at(1, s), at(1, s + 1)});
  for (int r = 1; r + 1 < rings; ++r) {
    for (int s = 0; s < segments; ++s) {
      faces.push_back({at(r, s), at(r + 1, s), at(r + 1, s + 1)});
      faces.push_back({at(r, s), at(r + 1, s + 1), at(r, s + 1)});
    }
  }
  for (int s = 0; s < segments; ++s) faces.push_back({south, at(rings - 1, s + 1), at(rings - 1, s)});
  Raw m = raw_mesh(verts, faces);
  orient_outward(m);
  return m;
}

Raw torus(int major_segments, int minor_segments, double major, double minor) {
  std::vector<std::array<double, 3>> verts;
  for (int i = 0; i < major_segments; ++i) {
    const double u = 2 * M_PI * i / major_segments;
    for (int j = 0; j < minor_segments; ++j) {
      const double v = 2 * M_PI * j / minor_segments;
      verts.push_back({(major + minor * std::cos(v)) * std::cos(u), (major + minor * std::cos(v)) * std::sin(u),
                       minor * std::sin(v)});
    }
  }
  const auto at = [&](int i, int j) {
    return static_cast<Index>((i % major_segments) * minor_segments + (j % minor_segments));
  };
  std::vector<Face> faces;
  for (int i = 0; i < major_segments; ++i) {
    for (int j = 0; j < minor_segments; ++j) {
      faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  }
  Raw m = raw_mesh(verts, faces);
  orient_outward(m);
  return m;
}

Raw grid_patch(int nx, int ny, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> height(0.0, 0.3);
  std::vector<std::array<double, 3>> verts;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) verts.push_back({double(i), double(j), height(rng) * std::max(nx, ny)});
  std::vector<Face> faces;
  const auto at = [&](int i, int j) { return static_cast<Index>(j * nx + i); };
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  }
  return raw_mesh(verts, faces);
}

Raw fuzzed_manifold(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Raw base;
  switch (seed % 4) {
    case 0: base = icosphere(1 + static_cast<int>(seed / 4 % 2)); break;
    case 1: base = uv_sphere(5 + static_cast<int>(seed % 5), 6 + static_cast<int>(seed % 7)); break;
    case 2: base = torus(10 + static_cast<int>(seed % 7), 6 + static_cast<int>(seed % 3)); break;
    default: base = subdivided_cube(2 + static_cast<int>(seed % 3)); break;
  }
  std::vector<Face> faces = faces_of(base);
  std::vector<std::array<double, 3>> verts = vertices_of(base);

  // Edge flips (a, b, c) + (b, a, d) -> (a, d, c) + (d, b, c) keep the winding.
  const int flips = 3 + static_cast<int>(rng() % 20);
  for (int attempt = 0, done = 0; attempt < 200 && done < flips; ++attempt) {
    const std::size_t f = rng() % faces.size();
    const int k = static_cast<int>(rng() % 3);
    const Index a = faces[f][static_cast<std::size_t>(k)], b = faces[f][static_cast<std::size_t>((k + 1) % 3)],
                c = faces[f][static_cast<std::size_t>((k + 2) % 3)];
    std::size_t g = faces.size();
    Index d = -1;
    for (std::size_t h = 0; h < faces.size() && g == faces.size(); ++h)
      for (int m = 0; m < 3; ++m)
        if (faces[h][static_cast<std::size_t>(m)] == b && faces[h][static_cast<std::size_t>((m + 1) % 3)] == a) {
          g = h;
          d = faces[h][static_cast<std::size_t>((m + 2) % 3)];
        }
    if (g == faces.size() || c == d) continue;
    std::map<Index, int> degree;
    bool cd_exists = false;
    for (const Face& t : faces) {
      for (int m = 0; m < 3; ++m) {
        const Index x = t[static_cast<std::size_t>(m)], y = t[static_cast<std::size_t>((m + 1) % 3)];
        if ((x == c && y == d) || (x == d && y == c)) cd_exists = true;
        ++degree[x];
      }
    }
    // Keep every vertex on at least three faces.
    if (cd_exists || degree[a] <= 3 || degree[b] <= 3) continue;
    faces[f] = {a, d, c};
    faces[g] = {d, b, c};
    ++done;
  }

  std::uniform_real_distribution<double> jitter(-0.01, 0.01);
  for (auto& v : verts)
    for (double& x : v) x += jitter(rng);

  std::vector<Index> perm(verts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::array<double, 3>> moved(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) moved[static_cast<std::size_t>(perm[v])] = verts[v];
  for (Face& t : faces) {
    for (Index& i : t) i = perm[static_cast<std::size_t>(i)];
    std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(rng() % 3), t.end());
  }
  std::shuffle(faces.begin(), faces.end(), rng);
  return raw_mesh(moved, faces);
}

QuantizedMesh cube_with_hole() {
  QuantizedMesh q = shelltok::quantize(cube(), 128);
  // Drop the two triangles of the -x side: every vertex there has x = 0.
  std::vector<Face> kept;
  for (Index f = 0; f < q.num_faces(); ++f) {
    const Face t = q.face(f);
    const bool on_side = q.vertices(t[0], 0) == 0 && q.vertices(t[1], 0) == 0 && q.vertices(t[2], 0) == 0;
    if (!on_side) kept.push_back(t);
  }
  std::vector<LatticePoint> verts;
  for (Index v = 0; v < q.num_vertices(); ++v) verts.push_back({q.vertices(v, 0), q.vertices(v, 1), q.vertices(v, 2)});
  return lattice_mesh(verts, kept);
}

QuantizedMesh three_fins() {
  return lattice_mesh({{0, 0, 0}, {0, 0, 10}, {10, 0, 5}, {0, 10, 5}, {7, 7, 5}},
                      {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}});
}

QuantizedMesh crossing_triangles() {
  return lattice_mesh({{0, 0, 5}, {10, 0, 5}, {5, 10, 5}, {5, 3, 0}, {5, 3, 10}, {5, 12, 5}},
                      {{0, 1, 2}, {3, 4, 5}});
}

QuantizedMesh bowtie() {
  return lattice_mesh({{0, 0, 0}, {10, 0, 0}, {10, 10, 0}, {20, 0, 0}, {20, 10, 0}},
                      {{0, 1, 2}, {1, 3, 4}});
}

QuantizedMesh umbrella(int m) {
  std::vector<LatticePoint> verts{{40, 40, 0}};
  for (int i = 0; i < m; ++i) {
    const double a = 2 * M_PI * i / m;
    verts.push_back({40 + static_cast<int>(std::lround(30 * std::cos(a))),
                     40 + static_cast<int>(std::lround(30 * std::sin(a))), 10});
  }
  std::vector<Face> faces;
  for (int i = 0; i < m; ++i) faces.push_back({0, 1 + i, 1 + (i + 1) % m});
  return lattice_mesh(verts, faces);
}

QuantizedMesh triangle_strip(int k) {
  // Bottom row b_i = (4i, 0, 0), top row t_i = (4i + 2, 4, 0).
  const int columns = k / 2 + 2;
  std::vector<LatticePoint> verts;
  for (int i = 0; i < columns; ++i) verts.push_back({4 * i, 0, 0});
  for (int i = 0; i < columns; ++i) verts.push_back({4 * i + 2, 4, 0});
  const auto b = [](int i) { return static_cast<Index>(i); };
  const auto t = [&](int i) { return static_cast<Index>(columns + i); };
  std::vector<Face> faces;
  for (int i = 0; static_cast<int>(faces.size()) < k; ++i) {
    faces.push_back({b(i), b(i + 1), t(i)});
    if (static_cast<int>(faces.size()) < k) faces.push_back({b(i + 1), t(i + 1), t(i)});
  }
  std::vector<bool> used(verts.size(), false);
  for (const Face& f : faces)
    for (Index v : f) used[static_cast<std::size_t>(v)] = true;
  std::vector<Index> remap(verts.size(), -1);
  std::vector<LatticePoint> kept;
  for (std::size_t v = 0; v < verts.size(); ++v)
    if (used[v]) {
      remap[v] = static_cast<Index>(kept.size());
      kept.push_back(verts[v]);
    }
  for (Face& f : faces)
    for (Index& v : f) v = remap[static_cast<std::size_t>(v)];
  return lattice_mesh(kept, faces);
}

QuantizedMesh triangle_soup(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, 24);
  std::map<LatticePoint, Index> ids;
  std::vector<LatticePoint> verts;
  const auto id = [&](const LatticePoint& p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<Index>(verts.size()));
    if (inserted) verts.push_back(p);
    return it->second;
  };
  std::vector<Face> faces;
  while (static_cast<int>(faces.size()) < count) {
    std::array<LatticePoint, 3> p;
    // Every fourth triangle lies in the plane z = 12 to exercise coplanar contact.
    const bool flat = faces.size() % 4 == 3;
    for (auto& q : p) q = {coord(rng), coord(rng), flat ? 12 : coord(rng)};
    const std::int64_t ux = p[1][0] - p[0][0], uy = p[1][1] - p[0][1], uz = p[1][2] - p[0][2];
    const std::int64_t vx = p[2][0] - p[0][0], vy = p[2][1] - p[0][1], vz = p[2][2] - p[0][2];
    if (uy * vz - uz * vy == 0 && uz * vx - ux * vz == 0 && ux * vy - uy * vx == 0) continue;
    faces.push_back({id(p[0]), id(p[1]), id(p[2])});
  }
  return lattice_mesh(verts, faces);
}

std::vector<Named> closed_manifold_corpus() {
  std::vector<Named> out;
  out.push_back({"cube", checked_closed("cube", cube())});
  for (int n = 2; n <= 6; ++n)
    out.push_back({"cube_" + std::to_string(n), checked_closed("cube", subdivided_cube(n))});
  for (int s = 0; s <= 3; ++s)
    out.push_back({"icosphere_" + std::to_string(s), checked_closed("icosphere", icosphere(s))});
  for (int rings : {4, 6, 9, 12})
    for (int segments : {6, 11, 16}) {
      const std::string name = "uv_" + std::to_string(rings) + "x" + std::to_string(segments);
      out.push_back({name, checked_closed(name, uv_sphere(rings, segments))});
    }
  for (int major : {8, 12, 20})
    for (int minor : {5, 8}) {
      const std::string name = "torus_" + std::to_string(major) + "x" + std::to_string(minor);
      out.push_back({name, checked_closed(name, torus(major, minor))});
    }
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::string name = "fuzzed_" + std::to_string(seed);
    out.push_back({name, checked_closed(name, fuzzed_manifold(seed))});
  }
  return out;
}

std::vector<Named> roundtrip_corpus() {
  std::vector<Named> out = closed_manifold_corpus();
  out.push_back({"tetrahedron", oriented_tetrahedron()});
  for (std::uint64_t seed = 0; seed < 24; ++seed)
    out.push_back({"tetrahedron_" + std::to_string(seed), random_tetrahedron(seed)});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int nx = 2 + static_cast<int>(seed % 9), ny = 2 + static_cast<int>(seed * 7 % 11);
    out.push_back({"patch_" + std::to_string(seed), shelltok::quantize(grid_patch(nx, ny, seed), 128)});
  }
  out.push_back({"cube_with_hole", cube_with_hole()});
  out.push_back({"three_fins", three_fins()});
  out.push_back({"bowtie", bowtie()});
  out.push_back({"crossing", crossing_triangles()});
  for (int m = 3; m <= 9; ++m) out.push_back({"umbrella_" + std::to_string(m), umbrella(m)});
  for (int k = 1; k <= 8; ++k) out.push_back({"strip_" + std::to_string(k), triangle_strip(k)});
  for (std::int32_t res : {16, 64, 256})
    out.push_back({"icosphere_2_res" + std::to_string(res), shelltok::quantize(icosphere(2), res)});
  return out;
}

bool consistently_oriented(const QuantizedMesh& mesh) {
  std::set<std::pair<Index, Index>> seen;
  for (Index f = 0; f < mesh.num_faces(); ++f)
    for (int k = 0; k < 3; ++k)
      if (!seen.insert({mesh.faces(f, k), mesh.faces(f, (k + 1) % 3)}).second) return false;
  return true;
}

double signed_volume(const Raw& m) {
  double volume = 0;
  for (Index f = 0; f < m.num_faces(); ++f) {
    const Eigen::Vector3d a = m.vertices.row(m.faces(f, 0)).transpose();
    const Eigen::Vector3d b = m.vertices.row(m.faces(f, 1)).transpose();
    const Eigen::Vector3d c = m.vertices.row(m.faces(f, 2)).transpose();
    volume += a.dot(b.cross(c)) / 6.0;
  }
  return volume;
}

std::filesystem::path scratch_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("shelltok_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_obj_file(const std::filesystem::path& path, const Raw& mesh) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  shelltok::write_obj(out, mesh);
}

}  // namespace fixtures
