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

#include "shelltok/mesh_compare.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace shelltok {
namespace {

using Point = std::array<std::int32_t, 3>;
using Tri = std::array<Point, 3>;

Point point(const QuantizedMesh& m, Index v) {
  return {m.vertices(v, 0), m.vertices(v, 1), m.vertices(v, 2)};
}

std::string show(const Point& p) {
  std::ostringstream s;
  s << '(' << p[0] << ',' << p[1] << ',' << p[2] << ')';
  return s.str();
}

std::string show(const Tri& t) { return "[" + show(t[0]) + " " + show(t[1]) + " " + show(t[2]) + "]"; }

template <typename T>
std::string first_difference(const std::vector<T>& a, const std::vector<T>& b, const char* what) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  if (ia == a.end() && ib == b.end()) return {};
  if (ia == a.end()) return std::string("extra ") + what + " " + show(*ib);
  if (ib == b.end()) return std::string("missing ") + what + " " + show(*ia);
  return *ia < *ib ? std::string("missing ") + what + " " + show(*ia)
                   : std::string("extra ") + what + " " + show(*ib);
}

}  // namespace

MeshComparison compare_meshes(const QuantizedMesh& expected, const QuantizedMesh& actual) {
  const auto vertices = [](const QuantizedMesh& m) {
    std::vector<Point> out;
    for (Index v = 0; v < m.num_vertices(); ++v) out.push_back(point(m, v));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto faces = [](const QuantizedMesh& m, bool oriented) {
    std::vector<Tri> out;
    for (Index f = 0; f < m.num_faces(); ++f) {
      Tri t{point(m, m.faces(f, 0)), point(m, m.faces(f, 1)), point(m, m.faces(f, 2))};
      if (oriented) {
        while (t[0] > t[1] || t[0] > t[2]) t = {t[1], t[2], t[0]};
      } else {
        std::sort(t.begin(), t.end());
      }
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  MeshComparison c;
  const auto va = vertices(expected), vb = vertices(actual);
  c.vertices_equal = va == vb;
  const auto fa = faces(expected, false), fb = faces(actual, false);
  c.faces_equal = fa == fb;
  const auto oa = faces(expected, true), ob = faces(actual, true);
  c.oriented_faces_equal = oa == ob;

  if (!c.vertices_equal) {
    c.divergence = first_difference(va, vb, "vertex");
  } else if (!c.faces_equal) {
    c.divergence = first_difference(fa, fb, "face");
  } else if (!c.oriented_faces_equal) {
    c.divergence = "orientation not preserved: " + first_difference(oa, ob, "oriented face");
  }
  return c;
}

}  // namespace shelltok
