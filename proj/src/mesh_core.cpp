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

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "shelltok/adjacency.hpp"
#include "shelltok/quantize.hpp"

namespace shelltok {

void validate(const QuantizedMesh& mesh) {
  if (mesh.resolution < 2) throw Error("resolution must be at least 2");
  if ((mesh.vertices.array() < 0).any() || (mesh.vertices.array() >= mesh.resolution).any())
    throw Error("lattice coordinate outside [0, resolution)");
  for (Index f = 0; f < mesh.num_faces(); ++f) {
    const Face t = mesh.face(f);
    for (Index i : t)
      if (i < 0 || i >= mesh.num_vertices())
        throw Error("face " + std::to_string(f) + " references a missing vertex");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw Error("face " + std::to_string(f) + " repeats a vertex index");
  }
  std::vector<std::array<std::int32_t, 3>> points(static_cast<std::size_t>(mesh.num_vertices()));
  for (Index v = 0; v < mesh.num_vertices(); ++v)
    points[static_cast<std::size_t>(v)] = {mesh.vertices(v, 0), mesh.vertices(v, 1), mesh.vertices(v, 2)};
  std::sort(points.begin(), points.end());
  const auto dup = std::adjacent_find(points.begin(), points.end());
  if (dup != points.end())
    throw Error("duplicate vertex coordinate (" + std::to_string((*dup)[0]) + "," +
                std::to_string((*dup)[1]) + "," + std::to_string((*dup)[2]) + ")");
}

namespace detail {

QuantizedMesh weld(std::int32_t resolution, const LatticeMatrix& lattice,
                   const FaceMatrix& faces) {
  const auto pack = [&](Index v) {
    return (static_cast<std::uint64_t>(lattice(v, 0)) << 42) |
           (static_cast<std::uint64_t>(lattice(v, 1)) << 21) |
           static_cast<std::uint64_t>(lattice(v, 2));
  };

  // First-appearance order keeps the result independent of hash iteration.
  std::unordered_map<std::uint64_t, Index> slot;
  std::vector<Index> remap(static_cast<std::size_t>(lattice.rows()));
  std::vector<Index> representative;
  for (Index v = 0; v < lattice.rows(); ++v) {
    auto [it, inserted] = slot.try_emplace(pack(v), static_cast<Index>(representative.size()));
    if (inserted) representative.push_back(v);
    remap[static_cast<std::size_t>(v)] = it->second;
  }

  std::vector<Face> kept;
  kept.reserve(static_cast<std::size_t>(faces.rows()));
  for (Index f = 0; f < faces.rows(); ++f) {
    Face t{remap[static_cast<std::size_t>(faces(f, 0))], remap[static_cast<std::size_t>(faces(f, 1))],
           remap[static_cast<std::size_t>(faces(f, 2))]};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
    kept.push_back(t);
  }
  if (kept.empty())
    throw ResolutionCollapse("resolution collapse: every face is degenerate at resolution " +
                             std::to_string(resolution));

  // Compact away vertices that no surviving face references.
  std::vector<Index> compact(representative.size(), -1);
  Index next = 0;
  for (const Face& t : kept)
    for (Index i : t)
      if (compact[static_cast<std::size_t>(i)] < 0) compact[static_cast<std::size_t>(i)] = 0;
  for (auto& c : compact)
    if (c == 0) c = next++;

  QuantizedMesh out;
  out.resolution = resolution;
  out.vertices.resize(next, 3);
  for (std::size_t r = 0; r < representative.size(); ++r)
    if (compact[r] >= 0) out.vertices.row(compact[r]) = lattice.row(representative[r]);
  out.faces.resize(static_cast<Eigen::Index>(kept.size()), 3);
  for (std::size_t f = 0; f < kept.size(); ++f)
    for (int k = 0; k < 3; ++k)
      out.faces(static_cast<Eigen::Index>(f), k) = compact[static_cast<std::size_t>(kept[f][k])];
  return out;
}

}  // namespace detail

QuantizedMesh canonical_sort(const QuantizedMesh& mesh) {
  const Index nv = mesh.num_vertices();
  std::vector<Index> order(static_cast<std::size_t>(nv));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::tuple(mesh.vertices(a, 2), mesh.vertices(a, 1), mesh.vertices(a, 0)) <
           std::tuple(mesh.vertices(b, 2), mesh.vertices(b, 1), mesh.vertices(b, 0));
  });
  std::vector<Index> rank(static_cast<std::size_t>(nv));
  for (Index i = 0; i < nv; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  struct Keyed {
    Face sorted;
    Face face;
  };
  std::vector<Keyed> faces;
  faces.reserve(static_cast<std::size_t>(mesh.num_faces()));
  for (Index f = 0; f < mesh.num_faces(); ++f) {
    Face t = mesh.face(f);
    for (Index& i : t) i = rank[static_cast<std::size_t>(i)];
    t = rotate_to_min(t);
    Face s = t;
    std::sort(s.begin(), s.end());
    faces.push_back({s, t});
  }
  // sorted[0] is the smallest index, so comparing (sorted, face) realizes
  // "smallest index first, then the ascending triple, then the winding".
  std::sort(faces.begin(), faces.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.sorted, a.face) < std::tie(b.sorted, b.face);
  });

  QuantizedMesh out;
  out.resolution = mesh.resolution;
  out.vertices.resize(nv, 3);
  for (Index i = 0; i < nv; ++i) out.vertices.row(i) = mesh.vertices.row(order[static_cast<std::size_t>(i)]);
  out.faces.resize(mesh.num_faces(), 3);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int k = 0; k < 3; ++k) out.faces(static_cast<Eigen::Index>(f), k) = faces[f].face[k];
  return out;
}

AdjacencyIndex::AdjacencyIndex(const QuantizedMesh& mesh) {
  const auto nv = static_cast<std::size_t>(mesh.num_vertices());
  const auto nf = static_cast<std::size_t>(mesh.num_faces());
  faces_.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) faces_[f] = mesh.face(static_cast<Index>(f));

  vf_offsets_.assign(nv + 1, 0);
  for (const Face& t : faces_)
    for (Index i : t) ++vf_offsets_[static_cast<std::size_t>(i) + 1];
  std::partial_sum(vf_offsets_.begin(), vf_offsets_.end(), vf_offsets_.begin());
  vf_faces_.resize(3 * nf);
  {
    std::vector<Index> cursor(vf_offsets_.begin(), vf_offsets_.end() - 1);
    for (std::size_t f = 0; f < nf; ++f)
      for (Index i : faces_[f]) vf_faces_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(i)]++)] = static_cast<Index>(f);
  }

  std::vector<std::pair<std::uint64_t, Index>> half;
  half.reserve(3 * nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const Face& t = faces_[f];
    for (int k = 0; k < 3; ++k) half.emplace_back(edge_key(t[k], t[(k + 1) % 3]), static_cast<Index>(f));
  }
  std::sort(half.begin(), half.end());
  ef_faces_.reserve(half.size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    if (i == 0 || half[i].first != half[i - 1].first) {
      edge_keys_.push_back(half[i].first);
      ef_offsets_.push_back(static_cast<Index>(i));
    }
    ef_faces_.push_back(half[i].second);
  }
  ef_offsets_.push_back(static_cast<Index>(half.size()));

  visited_.assign(nf, 0);
  remaining_ = static_cast<Index>(nf);
  degree_.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) degree_[v] = count_live_edges(static_cast<Index>(v));
}

std::span<const Index> AdjacencyIndex::incident_faces(Index v) const {
  const auto b = static_cast<std::size_t>(vf_offsets_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(vf_offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const Index>(vf_faces_).subspan(b, e - b);
}

std::span<const Index> AdjacencyIndex::edge_faces(Index a, Index b) const {
  const std::uint64_t key = edge_key(a, b);
  auto it = std::lower_bound(edge_keys_.begin(), edge_keys_.end(), key);
  if (it == edge_keys_.end() || *it != key) return {};
  const auto e = static_cast<std::size_t>(it - edge_keys_.begin());
  const auto lo = static_cast<std::size_t>(ef_offsets_[e]);
  const auto hi = static_cast<std::size_t>(ef_offsets_[e + 1]);
  return std::span<const Index>(ef_faces_).subspan(lo, hi - lo);
}

Index AdjacencyIndex::first_unvisited_face() const {
  while (first_hint_ < num_faces() && visited(first_hint_)) ++first_hint_;
  return first_hint_ < num_faces() ? first_hint_ : -1;
}

std::vector<Index> AdjacencyIndex::unvisited_neighbors(Index v) const {
  std::vector<Index> out;
  for (Index f : incident_faces(v)) {
    if (visited(f)) continue;
    for (Index w : face(f))
      if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Index AdjacencyIndex::count_live_edges(Index v) const {
  Index n = 0;
  for (Index w : unvisited_neighbors(v)) {
    const auto fs = edge_faces(v, w);
    n += std::none_of(fs.begin(), fs.end(), [&](Index f) { return visited(f); });
  }
  return n;
}

void AdjacencyIndex::mark_visited(std::span<const Index> faces) {
  std::vector<Index> touched;
  for (Index f : faces) {
    auto& flag = visited_[static_cast<std::size_t>(f)];
    if (flag) continue;
    flag = 1;
    --remaining_;
    touched.insert(touched.end(), faces_[static_cast<std::size_t>(f)].begin(),
                   faces_[static_cast<std::size_t>(f)].end());
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (Index v : touched) degree_[static_cast<std::size_t>(v)] = count_live_edges(v);
}

TopologyReport topology_report(const QuantizedMesh& mesh) {
  const AdjacencyIndex adj(mesh);
  TopologyReport report;

  std::vector<std::uint64_t> boundary;
  for (std::uint64_t key : adj.edges()) {
    const auto [a, b] = edge_vertices(key);
    const auto n = adj.edge_faces(a, b).size();
    if (n == 1) boundary.push_back(key);
    if (n > 2) ++report.nonmanifold_edge_count;
  }
  report.boundary_edge_count = static_cast<Index>(boundary.size());

  // Chain boundary edges through vertices that touch exactly two of them.
  std::unordered_map<Index, std::vector<std::size_t>> at;
  for (std::size_t e = 0; e < boundary.size(); ++e)
    for (Index v : edge_vertices(boundary[e])) at[v].push_back(e);
  std::vector<bool> used(boundary.size(), false);
  const auto other = [&](std::size_t e, Index v) {
    const auto ab = edge_vertices(boundary[e]);
    return ab[0] == v ? ab[1] : ab[0];
  };
  const auto extend = [&](std::size_t e, Index v) {
    // Walk from edge e out through v until the chain ends or closes.
    for (;;) {
      const auto& inc = at[v];
      if (inc.size() != 2) return;
      const std::size_t next = inc[0] == e ? inc[1] : inc[0];
      if (used[next]) return;
      used[next] = true;
      v = other(next, v);
      e = next;
    }
  };
  for (std::size_t e = 0; e < boundary.size(); ++e) {
    if (used[e]) continue;
    used[e] = true;
    ++report.boundary_loop_count;
    const auto ab = edge_vertices(boundary[e]);
    extend(e, ab[1]);
    extend(e, ab[0]);
  }

  report.is_closed_manifold =
      report.boundary_edge_count == 0 && report.nonmanifold_edge_count == 0;
  return report;
}

}  // namespace shelltok
