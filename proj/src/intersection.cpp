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

#include "shelltok/intersection.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace shelltok {
namespace {

using Wide = __int128;
using Vec = LatticeVector;

int sign(Wide x) { return (x > 0) - (x < 0); }

Vec cross(const Vec& a, const Vec& b) {
  return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
          a.x() * b.y() - a.y() * b.x()};
}

// Sign of det[b - a, c - a, d - a].
int orient3d(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  const Vec u = b - a, v = c - a, w = d - a;
  const Wide det = Wide(u.x()) * (Wide(v.y()) * w.z() - Wide(v.z()) * w.y()) -
                   Wide(u.y()) * (Wide(v.x()) * w.z() - Wide(v.z()) * w.x()) +
                   Wide(u.z()) * (Wide(v.x()) * w.y() - Wide(v.y()) * w.x());
  return sign(det);
}

struct P2 {
  std::int64_t x, y;
};

int orient2d(const P2& a, const P2& b, const P2& c) {
  return sign(Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x));
}

bool on_segment_2d(const P2& a, const P2& b, const P2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect_2d(const P2& a, const P2& b, const P2& c, const P2& d) {
  const int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment_2d(a, b, c)) return true;
  if (o2 == 0 && on_segment_2d(a, b, d)) return true;
  if (o3 == 0 && on_segment_2d(c, d, a)) return true;
  if (o4 == 0 && on_segment_2d(c, d, b)) return true;
  return false;
}

// Drops the axis where the normal is largest, which keeps the projection of
// anything in the plane non-degenerate.
int drop_axis(const Vec& n) {
  const auto ax = std::abs(n.x()), ay = std::abs(n.y()), az = std::abs(n.z());
  if (ax >= ay && ax >= az) return 0;
  return ay >= az ? 1 : 2;
}

P2 project(const Vec& p, int drop) {
  if (drop == 0) return {p.y(), p.z()};
  if (drop == 1) return {p.x(), p.z()};
  return {p.x(), p.y()};
}

bool point_in_triangle_2d(const P2& a, const P2& b, const P2& c, const P2& p) {
  const int s1 = orient2d(a, b, p), s2 = orient2d(b, c, p), s3 = orient2d(c, a, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

bool segments_intersect_3d(const Vec& p, const Vec& q, const Vec& r, const Vec& s) {
  if (orient3d(p, q, r, s) != 0) return false;
  const Vec n = cross(q - p, s - r);
  if (n != Vec::Zero()) {
    const int drop = drop_axis(n);
    return segments_intersect_2d(project(p, drop), project(q, drop), project(r, drop),
                                 project(s, drop));
  }
  // Parallel: only collinear overlap remains.
  if (cross(q - p, r - p) != Vec::Zero()) return false;
  const Vec d = q - p;
  int axis = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(d[k]) > std::abs(d[axis])) axis = k;
  const auto lo1 = std::min(p[axis], q[axis]), hi1 = std::max(p[axis], q[axis]);
  const auto lo2 = std::min(r[axis], s[axis]), hi2 = std::max(r[axis], s[axis]);
  return lo1 <= hi2 && lo2 <= hi1;
}

// Closed segment pq against closed triangle abc (abc not collinear).
bool segment_hits_triangle(const Vec& p, const Vec& q, const Vec& a, const Vec& b, const Vec& c) {
  const int op = orient3d(a, b, c, p), oq = orient3d(a, b, c, q);
  if (op * oq > 0) return false;
  if (op == 0 && oq == 0) {
    const int drop = drop_axis(cross(b - a, c - a));
    const P2 A = project(a, drop), B = project(b, drop), C = project(c, drop);
    const P2 P = project(p, drop), Q = project(q, drop);
    return point_in_triangle_2d(A, B, C, P) || point_in_triangle_2d(A, B, C, Q) ||
           segments_intersect_2d(P, Q, A, B) || segments_intersect_2d(P, Q, B, C) ||
           segments_intersect_2d(P, Q, C, A);
  }
  // The segment reaches the plane; the crossing point lies inside the
  // triangle iff the line pq sees the three edges with one orientation.
  const int s1 = orient3d(p, q, a, b), s2 = orient3d(p, q, b, c), s3 = orient3d(p, q, c, a);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

bool segment_hits(const Vec& p, const Vec& q, const std::array<Vec, 3>& t) {
  if (cross(t[1] - t[0], t[2] - t[0]) == Vec::Zero()) {
    return segments_intersect_3d(p, q, t[0], t[1]) || segments_intersect_3d(p, q, t[1], t[2]) ||
           segments_intersect_3d(p, q, t[2], t[0]);
  }
  return segment_hits_triangle(p, q, t[0], t[1], t[2]);
}

Vec corner(const QuantizedMesh& mesh, Index v) {
  return mesh.vertices.row(v).transpose().cast<std::int64_t>();
}

}  // namespace

bool triangles_intersect(const Vec& a0, const Vec& a1, const Vec& a2, const Vec& b0, const Vec& b1,
                         const Vec& b2) {
  // Two closed triangles meet iff an edge of one meets the other: every
  // vertex of their (convex) intersection lies on some triangle boundary.
  const std::array<Vec, 3> a{a0, a1, a2}, b{b0, b1, b2};
  for (int k = 0; k < 3; ++k) {
    if (segment_hits(a[k], a[(k + 1) % 3], b)) return true;
    if (segment_hits(b[k], b[(k + 1) % 3], a)) return true;
  }
  return false;
}

bool faces_intersect(const QuantizedMesh& mesh, Index f, Index g) {
  const Face a = mesh.face(f), b = mesh.face(g);
  for (Index i : a)
    for (Index j : b)
      if (i == j) return false;
  return triangles_intersect(corner(mesh, a[0]), corner(mesh, a[1]), corner(mesh, a[2]),
                             corner(mesh, b[0]), corner(mesh, b[1]), corner(mesh, b[2]));
}

std::int64_t count_self_intersections(const QuantizedMesh& mesh) {
  const Index nf = mesh.num_faces();
  if (nf < 2) return 0;

  using Box = std::array<std::int64_t, 6>;
  std::vector<Box> boxes(static_cast<std::size_t>(nf));
  std::int64_t extent = 1;
  for (Index f = 0; f < nf; ++f) {
    Box b{INT64_MAX, INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN, INT64_MIN};
    for (Index v : mesh.face(f))
      for (int k = 0; k < 3; ++k) {
        b[static_cast<std::size_t>(k)] = std::min<std::int64_t>(b[static_cast<std::size_t>(k)], mesh.vertices(v, k));
        b[static_cast<std::size_t>(k + 3)] = std::max<std::int64_t>(b[static_cast<std::size_t>(k + 3)], mesh.vertices(v, k));
      }
    for (int k = 0; k < 3; ++k) extent = std::max(extent, b[static_cast<std::size_t>(k + 3)] + 1);
    boxes[static_cast<std::size_t>(f)] = b;
  }

  const auto cells = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(std::cbrt(static_cast<double>(nf)))), 1, 64);
  const std::int64_t size = (extent + cells - 1) / cells;
  const auto cell_of = [&](std::int64_t c) { return std::min(c / size, cells - 1); };
  const auto flat = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    return static_cast<std::size_t>((x * cells + y) * cells + z);
  };

  std::vector<std::vector<Index>> grid(static_cast<std::size_t>(cells * cells * cells));
  for (Index f = 0; f < nf; ++f) {
    const Box& b = boxes[static_cast<std::size_t>(f)];
    for (auto x = cell_of(b[0]); x <= cell_of(b[3]); ++x)
      for (auto y = cell_of(b[1]); y <= cell_of(b[4]); ++y)
        for (auto z = cell_of(b[2]); z <= cell_of(b[5]); ++z) grid[flat(x, y, z)].push_back(f);
  }

  std::int64_t count = 0;
  for (std::int64_t x = 0; x < cells; ++x)
    for (std::int64_t y = 0; y < cells; ++y)
      for (std::int64_t z = 0; z < cells; ++z) {
        const auto& list = grid[flat(x, y, z)];
        for (std::size_t i = 0; i < list.size(); ++i)
          for (std::size_t j = i + 1; j < list.size(); ++j) {
            const Box& a = boxes[static_cast<std::size_t>(list[i])];
            const Box& b = boxes[static_cast<std::size_t>(list[j])];
            bool overlap = true;
            for (int k = 0; k < 3; ++k)
              if (a[static_cast<std::size_t>(k)] > b[static_cast<std::size_t>(k + 3)] ||
                  b[static_cast<std::size_t>(k)] > a[static_cast<std::size_t>(k + 3)])
                overlap = false;
            if (!overlap) continue;
            // Count each pair once: in the lowest cell both boxes cover.
            if (cell_of(std::max(a[0], b[0])) != x || cell_of(std::max(a[1], b[1])) != y ||
                cell_of(std::max(a[2], b[2])) != z)
              continue;
            if (faces_intersect(mesh, list[i], list[j])) ++count;
          }
      }
  return count;
}

}  // namespace shelltok
