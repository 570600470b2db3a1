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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "shelltok/mesh.hpp"

namespace shelltok {

/// Records skipped while reading a Wavefront OBJ file.
struct ObjNotes {
  std::vector<std::string> lines;
};

/// Reads the `v` and `f` records of a Wavefront OBJ stream. Polygons are
/// fan-triangulated from their first corner, texture/normal references are
/// ignored and every other record is skipped with a note. Indices are 1-based;
/// negative (relative) indices are rejected. Throws ParseError.
RawMesh<double> parse_obj(std::istream& in, ObjNotes* notes = nullptr);

RawMesh<double> load_obj(const std::filesystem::path& path,
                         ObjNotes* notes = nullptr);

void write_obj(std::ostream& out, const QuantizedMesh& mesh);
void write_obj(std::ostream& out, const RawMesh<double>& mesh);

}  // namespace shelltok
