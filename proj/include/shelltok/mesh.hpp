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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace shelltok {

using Index = std::int32_t;

/// Row-major N x 3 vertex positions, templated on the scalar type.
template <typename Scalar>
using PositionMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 3, Eigen::RowMajor>;

/// Integer lattice coordinates, one vertex per row.
using LatticeMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 3, Eigen::RowMajor>;

/// Triangle faces as vertex-index triples. The row order of the three indices
/// is the face's winding and is never rearranged by the library.
using FaceMatrix = Eigen::Matrix<Index, Eigen::Dynamic, 3, Eigen::RowMajor>;

using Face = std::array<Index, 3>;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  /// `line` is 1-based, 0 when the error is not tied to a line. `source`
  /// names the file, if known.
  ParseError(const std::string& what, std::size_t line, const std::string& source = {})
      : Error(format(what, line, source)), message_(what), line_(line) {}
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(const std::string& what, std::size_t line, const std::string& source) {
    if (!source.empty()) return source + ":" + (line ? std::to_string(line) + ":" : "") + " " + what;
    return line ? "line " + std::to_string(line) + ": " + what : what;
  }

  std::string message_;
  std::size_t line_;
};

class ResolutionCollapse : public Error {
 public:
  using Error::Error;
};

/// Real-valued triangle mesh as read from disk.
template <typename Scalar = double>
struct RawMesh {
  PositionMatrix<Scalar> vertices;
  FaceMatrix faces;

  Index num_vertices() const { return static_cast<Index>(vertices.rows()); }
  Index num_faces() const { return static_cast<Index>(faces.rows()); }
};

/// Mesh on the integer lattice [0, resolution)^3. Vertices are unique, every
/// vertex is referenced by a face and no face repeats an index.
struct QuantizedMesh {
  std::int32_t resolution = 128;
  LatticeMatrix vertices;
  FaceMatrix faces;

  Index num_vertices() const { return static_cast<Index>(vertices.rows()); }
  Index num_faces() const { return static_cast<Index>(faces.rows()); }
  Face face(Index f) const { return {faces(f, 0), faces(f, 1), faces(f, 2)}; }
};

inline std::uint64_t edge_key(Index a, Index b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

inline std::array<Index, 2> edge_vertices(std::uint64_t key) {
  return {static_cast<Index>(key >> 32), static_cast<Index>(key & 0xffffffffu)};
}

/// Checks coordinate range, index bounds, face non-degeneracy and that no two
/// vertices share a coordinate. Throws Error on violation.
void validate(const QuantizedMesh& mesh);

}  // namespace shelltok
