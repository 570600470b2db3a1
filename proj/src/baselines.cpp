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

#include "shelltok/baselines.hpp"

#include "shelltok/adjacency.hpp"

namespace shelltok {
namespace {

class VertexWriter {
 public:
  VertexWriter(const QuantizedMesh& mesh, CoordEncoding encoding,
               const std::optional<TokenLayout>& layout, BaselineTokenSequence& out)
      : mesh_(mesh),
        layout_(layout ? *layout
                       : TokenLayout(static_cast<std::uint32_t>(mesh.resolution), 2048)),
        out_(out) {
    validate(mesh);
    if (layout_.resolution() != static_cast<std::uint32_t>(mesh.resolution))
      throw Error("layout resolution does not match mesh resolution");
    out_.encoding = encoding;
  }

  void emit(Index v) {
    out_.occurrences.push_back({v, out_.tokens.size()});
    if (out_.encoding == CoordEncoding::raw) {
      for (int k = 0; k < 3; ++k) out_.tokens.push_back(static_cast<Token>(mesh_.vertices(v, k)));
    } else {
      const UV p = compress_coords(mesh_.vertices(v, 0), mesh_.vertices(v, 1), mesh_.vertices(v, 2),
                                   layout_);
      out_.tokens.push_back(p.u);
      out_.tokens.push_back(p.v + layout_.v_offset());
    }
  }

 private:
  const QuantizedMesh& mesh_;
  TokenLayout layout_;
  BaselineTokenSequence& out_;
};

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::nautilus: return "nautilus";
    case Scheme::naive9n: return "naive9n";
    case Scheme::strip: return "strip";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::nautilus, Scheme::naive9n, Scheme::strip})
    if (scheme_name(s) == name) return s;
  return std::nullopt;
}

BaselineTokenSequence naive_tokenize(const QuantizedMesh& mesh, CoordEncoding encoding,
                                     const std::optional<TokenLayout>& layout) {
  BaselineTokenSequence out;
  out.scheme = Scheme::naive9n;
  VertexWriter writer(mesh, encoding, layout, out);
  for (Index f = 0; f < mesh.num_faces(); ++f)
    for (Index v : mesh.face(f)) writer.emit(v);
  return out;
}

BaselineTokenSequence strip_tokenize(const QuantizedMesh& mesh, CoordEncoding encoding,
                                     const std::optional<TokenLayout>& layout) {
  BaselineTokenSequence out;
  out.scheme = Scheme::strip;
  VertexWriter writer(mesh, encoding, layout, out);
  const AdjacencyIndex adj(mesh);
  std::vector<bool> visited(static_cast<std::size_t>(mesh.num_faces()), false);

  for (Index start = 0; start < mesh.num_faces(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    Index cur = start;
    visited[static_cast<std::size_t>(cur)] = true;
    for (Index v : adj.face(cur)) writer.emit(v);
    for (;;) {
      const Face& t = adj.face(cur);
      Index next = -1;
      for (int k = 0; k < 3; ++k)
        for (Index g : adj.edge_faces(t[k], t[(k + 1) % 3]))
          if (!visited[static_cast<std::size_t>(g)] && (next < 0 || g < next)) next = g;
      if (next < 0) break;
      visited[static_cast<std::size_t>(next)] = true;
      for (Index v : adj.face(next))
        if (v != t[0] && v != t[1] && v != t[2]) writer.emit(v);
      cur = next;
    }
  }
  return out;
}

}  // namespace shelltok
