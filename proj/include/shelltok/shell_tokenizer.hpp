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

#include <cstddef>
#include <span>
#include <vector>

#include "shelltok/adjacency.hpp"
#include "shelltok/mesh.hpp"
#include "shelltok/token_layout.hpp"

namespace shelltok {

/// A center vertex and the ordered ring around it. Each consecutive ring pair
/// forms the face (center, ring[i], ring[i+1]). A closed shell repeats its
/// first ring vertex at the end.
struct Shell {
  Index center = -1;
  std::vector<Index> ring;
  bool closed = false;

  Index face_count() const { return static_cast<Index>(ring.size()) - 1; }
  /// Center plus ring entries; each entry becomes two tokens.
  Index entry_count() const { return static_cast<Index>(ring.size()) + 1; }

  friend bool operator==(const Shell&, const Shell&) = default;
};

struct TokenSequence {
  TokenLayout layout;
  std::vector<Token> tokens;

  /// Token count without the start and end markers.
  std::size_t body_length() const { return tokens.size() < 2 ? 0 : tokens.size() - 2; }

  friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

/// A malformed token stream. `token_index()` points at the offending token
/// (the stream length when the stream is truncated).
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t token_index)
      : Error("token " + std::to_string(token_index) + ": " + what), index_(token_index) {}
  std::size_t token_index() const { return index_; }

 private:
  std::size_t index_;
};

/// Partitions every face of a canonically sorted mesh into shells.
///
/// Starts at the highest-degree vertex of the first face. Each step takes the
/// unvisited faces around the current center, orders one edge-connected fan of
/// them into a ring and marks them visited. The next center is the
/// highest-degree unvisited neighbor of the last ring vertex if its degree
/// exceeds 4, otherwise the highest-degree vertex of the first unvisited face.
/// Degree ties go to the lowest vertex id.
///
/// Fan rules:
///  - with several fans around the center, the one touching the previous
///    shell's last ring vertex is taken, else the one holding the lowest id;
///  - ring direction follows the stored winding of the majority of the fan's
///    faces (ties: the winding of the lowest face id), so consistently oriented
///    input keeps its orientation;
///  - a closed fan starts at the previous last ring vertex when it lies on the
///    ring, else at its lowest id; an open fan whose two directions score
///    equally starts at the previous last ring vertex when that is an end,
///    else at the lower end id;
///  - where an edge (center, x) has more than two unvisited faces, or two faces
///    share both ring vertices, only a maximal run of unambiguous, equally
///    wound faces is emitted, down to single-face shells.
///
/// Every face lands in exactly one shell. `adj` must be fresh for `mesh`; it
/// ends with every face visited.
std::vector<Shell> build_shells(const QuantizedMesh& mesh, AdjacencyIndex& adj);

/// Emits sos, then for each shell its center as (u + center offset, v + v
/// offset) followed by each ring entry as (u, v + v offset), then eos.
TokenSequence encode(std::span<const Shell> shells, const QuantizedMesh& mesh,
                     const TokenLayout& layout);

struct DecodedMesh {
  std::vector<Shell> shells;
  /// Vertices ordered by (z, y, x); faces in shell order.
  QuantizedMesh mesh;
};

/// Parses and validates a token stream. Throws DecodeError.
DecodedMesh decode(const TokenSequence& sequence);

struct Tokenization {
  QuantizedMesh sorted;
  std::vector<Shell> shells;
  TokenSequence sequence;
};

/// canonical_sort, build_adjacency, build_shells and encode in one call.
/// The layout resolution must equal the mesh resolution.
Tokenization tokenize_detailed(const QuantizedMesh& mesh, const TokenLayout& layout);

inline TokenSequence tokenize(const QuantizedMesh& mesh, const TokenLayout& layout) {
  return tokenize_detailed(mesh, layout).sequence;
}

inline QuantizedMesh detokenize(const TokenSequence& sequence) {
  return decode(sequence).mesh;
}

/// Body token index of every vertex occurrence in a shell list, in emission
/// order: (vertex, 2 * entry position).
struct Occurrence {
  Index vertex;
  std::size_t position;
};
std::vector<Occurrence> shell_occurrences(std::span<const Shell> shells);

}  // namespace shelltok
