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

#include "shelltok/shell_tokenizer.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "shelltok/quantize.hpp"

namespace shelltok {
namespace {

// One unvisited face around the center, seen as the directed ring edge
// from -> to of its stored winding (center, from, to).
struct RingEdge {
  Index face;
  Index from;
  Index to;
};

struct Fan {
  std::vector<Index> faces;
  std::vector<Index> ring;
  bool closed = false;
};

Index highest_degree_vertex(const AdjacencyIndex& adj, const Face& f) {
  Index best = f[0];
  for (Index v : f)
    if (adj.degree(v) > adj.degree(best) || (adj.degree(v) == adj.degree(best) && v < best))
      best = v;
  return best;
}

Index restart_center(const AdjacencyIndex& adj) {
  return highest_degree_vertex(adj, adj.face(adj.first_unvisited_face()));
}

// Number of faces whose stored winding matches (center, ring[i], ring[i+1]).
Index winding_agreement(const std::vector<RingEdge>& edges, const std::vector<int>& path,
                        const std::vector<Index>& ring) {
  Index agree = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const RingEdge& e = edges[static_cast<std::size_t>(path[i])];
    if (e.from == ring[i] && e.to == ring[i + 1]) ++agree;
  }
  return agree;
}

class FanBuilder {
 public:
  FanBuilder(const AdjacencyIndex& adj, Index center) {
    for (Index f : adj.incident_faces(center)) {
      if (adj.visited(f)) continue;
      const Face& t = adj.face(f);
      const int k = t[0] == center ? 0 : (t[1] == center ? 1 : 2);
      edges_.push_back({f, t[(k + 1) % 3], t[(k + 2) % 3]});
    }
    for (const RingEdge& e : edges_) {
      verts_.push_back(e.from);
      verts_.push_back(e.to);
    }
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    incident_.resize(verts_.size());
    // edges_ ascend by face id, so every incidence list does too.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[local(edges_[i].from)].push_back(static_cast<int>(i));
      incident_[local(edges_[i].to)].push_back(static_cast<int>(i));
    }
  }

  Fan build(Index preferred) {
    const bool has_preferred = contains(preferred);
    const std::size_t seed = has_preferred ? local(preferred) : 0;
    collect_component(seed);

    bool unambiguous = true;
    for (std::size_t v : comp_verts_)
      if (incident_[v].size() > 2) unambiguous = false;
    const bool cycle = comp_edges_.size() == comp_verts_.size();
    if (cycle && comp_edges_.size() < 3) unambiguous = false;

    if (!unambiguous) return run(has_preferred ? preferred : lowest_component_vertex());
    if (cycle) return closed_fan(has_preferred ? preferred : lowest_component_vertex());
    return open_fan(preferred);
  }

 private:
  std::size_t local(Index v) const {
    return static_cast<std::size_t>(std::lower_bound(verts_.begin(), verts_.end(), v) -
                                    verts_.begin());
  }
  bool contains(Index v) const { return std::binary_search(verts_.begin(), verts_.end(), v); }
  Index other(int e, Index v) const {
    const RingEdge& r = edges_[static_cast<std::size_t>(e)];
    return r.from == v ? r.to : r.from;
  }

  void collect_component(std::size_t seed) {
    std::vector<bool> seen_v(verts_.size(), false), seen_e(edges_.size(), false);
    std::vector<std::size_t> stack{seed};
    seen_v[seed] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp_verts_.push_back(v);
      for (int e : incident_[v]) {
        if (!seen_e[static_cast<std::size_t>(e)]) {
          seen_e[static_cast<std::size_t>(e)] = true;
          comp_edges_.push_back(e);
        }
        const std::size_t w = local(other(e, verts_[v]));
        if (!seen_v[w]) {
          seen_v[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp_verts_.begin(), comp_verts_.end());
    std::sort(comp_edges_.begin(), comp_edges_.end());
  }

  Index lowest_component_vertex() const { return verts_[comp_verts_.front()]; }

  // Walks a path or cycle whose vertices all have at most two incidences.
  void walk(Index start, int first_edge, std::vector<Index>& ring, std::vector<int>& path) const {
    ring = {start};
    path.clear();
    Index cur = start;
    int e = first_edge;
    for (;;) {
      path.push_back(e);
      const Index next = other(e, cur);
      ring.push_back(next);
      if (next == start) return;
      const auto& inc = incident_[local(next)];
      if (inc.size() < 2) return;
      e = inc[0] == e ? inc[1] : inc[0];
      cur = next;
    }
  }

  Fan finish(std::vector<Index> ring, const std::vector<int>& path, bool closed) const {
    Fan fan;
    fan.ring = std::move(ring);
    fan.closed = closed;
    for (int e : path) fan.faces.push_back(edges_[static_cast<std::size_t>(e)].face);
    return fan;
  }

  Fan closed_fan(Index start) const {
    std::vector<Index> ring;
    std::vector<int> path;
    walk(start, incident_[local(start)][0], ring, path);
    const Index forward = winding_agreement(edges_, path, ring);
    const Index backward = static_cast<Index>(path.size()) - forward;
    bool keep = forward > backward;
    if (forward == backward) {
      const RingEdge& lowest = edges_[static_cast<std::size_t>(comp_edges_.front())];
      const auto at = std::find(path.begin(), path.end(), comp_edges_.front()) - path.begin();
      keep = lowest.from == ring[static_cast<std::size_t>(at)];
    }
    if (!keep) {
      std::reverse(ring.begin(), ring.end());
      std::reverse(path.begin(), path.end());
    }
    return finish(std::move(ring), path, true);
  }

  Fan open_fan(Index preferred) const {
    std::vector<Index> ends;
    for (std::size_t v : comp_verts_)
      if (incident_[v].size() == 1) ends.push_back(verts_[v]);
    // comp_verts_ is ascending, so ends[0] is the lower end.
    std::vector<Index> ring;
    std::vector<int> path;
    walk(ends[0], incident_[local(ends[0])][0], ring, path);
    const Index forward = winding_agreement(edges_, path, ring);
    const Index backward = static_cast<Index>(path.size()) - forward;
    bool keep = forward > backward;
    if (forward == backward) keep = preferred != ends[1];
    if (!keep) {
      std::reverse(ring.begin(), ring.end());
      std::reverse(path.begin(), path.end());
    }
    return finish(std::move(ring), path, false);
  }

  // Longest run through `start` of equally wound faces whose inner ring
  // vertices have exactly two incidences.
  Fan run(Index start) const {
    const int first = incident_[local(start)][0];
    const RingEdge& e0 = edges_[static_cast<std::size_t>(first)];
    std::deque<Index> chain{e0.from, e0.to};
    std::deque<int> path{first};
    const auto in_chain = [&](Index v) { return std::find(chain.begin(), chain.end(), v) != chain.end(); };

    for (;;) {
      const auto& inc = incident_[local(chain.back())];
      if (inc.size() != 2) break;
      const int g = inc[0] == path.back() ? inc[1] : inc[0];
      const RingEdge& r = edges_[static_cast<std::size_t>(g)];
      if (g == path.back() || r.from != chain.back() || in_chain(r.to)) break;
      chain.push_back(r.to);
      path.push_back(g);
    }
    for (;;) {
      const auto& inc = incident_[local(chain.front())];
      if (inc.size() != 2) break;
      const int g = inc[0] == path.front() ? inc[1] : inc[0];
      const RingEdge& r = edges_[static_cast<std::size_t>(g)];
      if (g == path.front() || r.to != chain.front() || in_chain(r.from)) break;
      chain.push_front(r.from);
      path.push_front(g);
    }
    return finish(std::vector<Index>(chain.begin(), chain.end()),
                  std::vector<int>(path.begin(), path.end()), false);
  }

  std::vector<RingEdge> edges_;
  std::vector<Index> verts_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::size_t> comp_verts_;
  std::vector<int> comp_edges_;
};

}  // namespace

std::vector<Shell> build_shells(const QuantizedMesh& mesh, AdjacencyIndex& adj) {
  if (adj.num_faces() != mesh.num_faces() || adj.num_vertices() != mesh.num_vertices())
    throw Error("adjacency index does not match the mesh");
  if (adj.remaining_faces() != adj.num_faces())
    throw Error("adjacency index has already been traversed");

  std::vector<Shell> shells;
  if (adj.remaining_faces() == 0) return shells;

  Index center = restart_center(adj);
  Index preferred = -1;
  while (adj.remaining_faces() > 0) {
    Fan fan = FanBuilder(adj, center).build(preferred);
    adj.mark_visited(fan.faces);
    preferred = fan.ring.back();
    shells.push_back({center, std::move(fan.ring), fan.closed});
    if (adj.remaining_faces() == 0) break;

    Index best = -1;
    for (Index w : adj.unvisited_neighbors(preferred))
      if (best < 0 || adj.degree(w) > adj.degree(best)) best = w;
    center = best >= 0 && adj.degree(best) > 4 ? best : restart_center(adj);
  }
  return shells;
}

TokenSequence encode(std::span<const Shell> shells, const QuantizedMesh& mesh,
                     const TokenLayout& layout) {
  if (layout.resolution() != static_cast<std::uint32_t>(mesh.resolution))
    throw Error("layout resolution " + std::to_string(layout.resolution()) +
                " does not match mesh resolution " + std::to_string(mesh.resolution));
  const auto point = [&](Index v) -> UV {
    if (v < 0 || v >= mesh.num_vertices())
      throw Error("shell references missing vertex " + std::to_string(v));
    return compress_coords(mesh.vertices(v, 0), mesh.vertices(v, 1), mesh.vertices(v, 2), layout);
  };

  TokenSequence seq{layout, {}};
  std::size_t entries = 0;
  for (const Shell& s : shells) entries += static_cast<std::size_t>(s.entry_count());
  seq.tokens.reserve(2 * entries + 2);
  seq.tokens.push_back(layout.sos());
  for (const Shell& s : shells) {
    if (s.ring.size() < 2) throw Error("shell with fewer than two ring vertices");
    const UV c = point(s.center);
    seq.tokens.push_back(c.u + layout.center_u_offset());
    seq.tokens.push_back(c.v + layout.v_offset());
    for (Index r : s.ring) {
      const UV p = point(r);
      seq.tokens.push_back(p.u + layout.ring_u_offset());
      seq.tokens.push_back(p.v + layout.v_offset());
    }
  }
  seq.tokens.push_back(layout.eos());
  return seq;
}

DecodedMesh decode(const TokenSequence& sequence) {
  const TokenLayout& layout = sequence.layout;
  const auto& tok = sequence.tokens;
  const std::size_t n = tok.size();

  if (n == 0) throw DecodeError("empty stream", 0);
  if (tok[0] != layout.sos()) throw DecodeError("stream must begin with sos", 0);

  struct RawShell {
    LatticePoint center;
    std::vector<LatticePoint> ring;
    std::size_t start;
  };
  std::vector<RawShell> raw;

  const auto classify_range = [&](std::size_t i) {
    if (tok[i] >= layout.vocabulary_size())
      throw DecodeError("token id " + std::to_string(tok[i]) + " outside the vocabulary", i);
  };
  // Reads a (u, v) pair starting at i; the u token was already classified.
  const auto read_point = [&](std::size_t i, Token u) {
    if (i + 1 >= n) throw DecodeError("truncated stream: missing v token", n);
    classify_range(i + 1);
    if (!layout.is_v(tok[i + 1]))
      throw DecodeError("expected a v token after a u token", i + 1);
    try {
      return decompress_coords(u, tok[i + 1] - layout.v_offset(), layout);
    } catch (const Error& e) {
      throw DecodeError(e.what(), i);
    }
  };

  std::size_t i = 1;
  bool ended = false;
  while (i < n) {
    classify_range(i);
    const Token t = tok[i];
    if (t == layout.eos()) {
      if (raw.empty()) throw DecodeError("no shells", i);
      if (i + 1 != n) throw DecodeError("tokens after eos", i + 1);
      ended = true;
      break;
    }
    if (!layout.is_center_u(t)) throw DecodeError("expected a shell center (u^O token)", i);
    RawShell shell{read_point(i, t - layout.center_u_offset()), {}, i};
    i += 2;
    while (i < n) {
      classify_range(i);
      if (!layout.is_ring_u(tok[i])) break;
      shell.ring.push_back(read_point(i, tok[i]));
      i += 2;
    }
    if (shell.ring.size() < 2)
      throw DecodeError("shell has fewer than two ring vertices", i < n ? i : n);
    if (i < n && !layout.is_center_u(tok[i]) && tok[i] != layout.eos())
      throw DecodeError(layout.is_v(tok[i]) ? "v token without a preceding u token"
                                            : "unexpected token inside a shell",
                        i);
    raw.push_back(std::move(shell));
  }
  if (!ended) throw DecodeError("truncated stream: missing eos", n);

  for (const RawShell& s : raw) {
    for (std::size_t k = 0; k < s.ring.size(); ++k) {
      const std::size_t at = s.start + 2 * (k + 1);
      if (s.ring[k] == s.center) throw DecodeError("ring vertex equals the shell center", at);
      if (k > 0 && s.ring[k] == s.ring[k - 1])
        throw DecodeError("consecutive identical ring vertices (degenerate face)", at);
    }
  }

  // Vertex ids follow the canonical (z, y, x) order.
  std::vector<LatticePoint> points;
  for (const RawShell& s : raw) {
    points.push_back(s.center);
    points.insert(points.end(), s.ring.begin(), s.ring.end());
  }
  const auto zyx = [](const LatticePoint& a, const LatticePoint& b) {
    return std::tie(a[2], a[1], a[0]) < std::tie(b[2], b[1], b[0]);
  };
  std::sort(points.begin(), points.end(), zyx);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const auto id = [&](const LatticePoint& p) {
    return static_cast<Index>(std::lower_bound(points.begin(), points.end(), p, zyx) - points.begin());
  };

  DecodedMesh out;
  out.mesh.resolution = static_cast<std::int32_t>(layout.resolution());
  out.mesh.vertices.resize(static_cast<Eigen::Index>(points.size()), 3);
  for (std::size_t v = 0; v < points.size(); ++v)
    for (int k = 0; k < 3; ++k) out.mesh.vertices(static_cast<Eigen::Index>(v), k) = points[v][static_cast<std::size_t>(k)];

  std::size_t face_count = 0;
  for (const RawShell& s : raw) {
    Shell shell;
    shell.center = id(s.center);
    for (const LatticePoint& p : s.ring) shell.ring.push_back(id(p));
    shell.closed = shell.ring.size() >= 4 && shell.ring.front() == shell.ring.back();
    face_count += shell.ring.size() - 1;
    out.shells.push_back(std::move(shell));
  }
  out.mesh.faces.resize(static_cast<Eigen::Index>(face_count), 3);
  Eigen::Index row = 0;
  for (const Shell& s : out.shells) {
    for (std::size_t k = 0; k + 1 < s.ring.size(); ++k, ++row) {
      out.mesh.faces(row, 0) = s.center;
      out.mesh.faces(row, 1) = s.ring[k];
      out.mesh.faces(row, 2) = s.ring[k + 1];
    }
  }
  return out;
}

Tokenization tokenize_detailed(const QuantizedMesh& mesh, const TokenLayout& layout) {
  validate(mesh);
  if (layout.resolution() != static_cast<std::uint32_t>(mesh.resolution))
    throw Error("layout resolution " + std::to_string(layout.resolution()) +
                " does not match mesh resolution " + std::to_string(mesh.resolution));
  Tokenization out;
  if (mesh.num_faces() == 0) throw Error("cannot tokenize a mesh without faces");
  std::vector<bool> used(static_cast<std::size_t>(mesh.num_vertices()), false);
  for (Index f = 0; f < mesh.num_faces(); ++f)
    for (int k = 0; k < 3; ++k) used[static_cast<std::size_t>(mesh.faces(f, k))] = true;
  const auto stray = std::find(used.begin(), used.end(), false);
  if (stray != used.end())
    throw Error("vertex " + std::to_string(stray - used.begin()) +
                " is not used by any face and cannot be encoded");
  out.sorted = canonical_sort(mesh);
  AdjacencyIndex adj = build_adjacency(out.sorted);
  out.shells = build_shells(out.sorted, adj);
  out.sequence = encode(out.shells, out.sorted, layout);
  return out;
}

std::vector<Occurrence> shell_occurrences(std::span<const Shell> shells) {
  std::vector<Occurrence> out;
  std::size_t position = 0;
  for (const Shell& s : shells) {
    out.push_back({s.center, position});
    position += 2;
    for (Index r : s.ring) {
      out.push_back({r, position});
      position += 2;
    }
  }
  return out;
}

}  // namespace shelltok
