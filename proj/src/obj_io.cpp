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

#include "shelltok/obj_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace shelltok {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_real(std::string_view tok, std::size_t line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("malformed coordinate '" + std::string(tok) + "'", line);
  return value;
}

long long parse_corner(std::string_view tok, std::size_t line) {
  // "i", "i/t", "i//n" or "i/t/n": only the position index matters.
  std::string_view head = tok.substr(0, tok.find('/'));
  long long value = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
  if (ec != std::errc() || ptr != head.data() + head.size() || head.empty())
    throw ParseError("malformed face index '" + std::string(tok) + "'", line);
  if (value < 0)
    throw ParseError("negative face index " + std::to_string(value) +
                         " is not supported",
                     line);
  if (value == 0) throw ParseError("face index 0 is invalid (OBJ is 1-based)", line);
  return value;
}

}  // namespace

RawMesh<double> parse_obj(std::istream& in, ObjNotes* notes) {
  std::vector<std::array<double, 3>> positions;
  struct PendingFace {
    Face corners;
    std::size_t line;
  };
  std::vector<PendingFace> faces;

  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view line(text);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "v") {
      if (tok.size() < 4 || tok.size() > 5)
        throw ParseError("vertex record needs 3 coordinates", line_no);
      positions.push_back({parse_real(tok[1], line_no), parse_real(tok[2], line_no),
                           parse_real(tok[3], line_no)});
    } else if (tok[0] == "f") {
      if (tok.size() < 4) throw ParseError("face record needs at least 3 corners", line_no);
      std::vector<long long> corners;
      for (std::size_t i = 1; i < tok.size(); ++i)
        corners.push_back(parse_corner(tok[i], line_no));
      for (std::size_t i = 1; i + 1 < corners.size(); ++i) {
        Face f{static_cast<Index>(corners[0] - 1), static_cast<Index>(corners[i] - 1),
               static_cast<Index>(corners[i + 1] - 1)};
        for (long long c : {corners[0], corners[i], corners[i + 1]}) {
          if (c > static_cast<long long>(INT32_MAX))
            throw ParseError("face index " + std::to_string(c) + " out of range", line_no);
        }
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
          if (notes)
            notes->lines.push_back("line " + std::to_string(line_no) +
                                   ": dropped triangle with repeated index");
          continue;
        }
        faces.push_back({f, line_no});
      }
    } else if (notes) {
      notes->lines.push_back("line " + std::to_string(line_no) + ": skipped '" +
                             std::string(tok[0]) + "' record");
    }
  }

  for (const auto& pf : faces) {
    for (Index c : pf.corners) {
      if (c >= static_cast<Index>(positions.size()))
        throw ParseError("face index " + std::to_string(c + 1) + " out of range (" +
                             std::to_string(positions.size()) + " vertices)",
                         pf.line);
    }
  }
  if (faces.empty()) throw ParseError("mesh has no faces", 0);

  RawMesh<double> mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(positions.size()), 3);
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (int k = 0; k < 3; ++k) mesh.vertices(static_cast<Eigen::Index>(i), k) = positions[i][k];
  mesh.faces.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int k = 0; k < 3; ++k) mesh.faces(static_cast<Eigen::Index>(i), k) = faces[i].corners[k];
  return mesh;
}

RawMesh<double> load_obj(const std::filesystem::path& path, ObjNotes* notes) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return parse_obj(in, notes);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), path.string());
  }
}

void write_obj(std::ostream& out, const QuantizedMesh& mesh) {
  for (Index v = 0; v < mesh.num_vertices(); ++v)
    out << "v " << mesh.vertices(v, 0) << ' ' << mesh.vertices(v, 1) << ' '
        << mesh.vertices(v, 2) << '\n';
  for (Index f = 0; f < mesh.num_faces(); ++f)
    out << "f " << mesh.faces(f, 0) + 1 << ' ' << mesh.faces(f, 1) + 1 << ' '
        << mesh.faces(f, 2) + 1 << '\n';
}

void write_obj(std::ostream& out, const RawMesh<double>& mesh) {
  std::ostringstream line;
  line.precision(17);
  for (Index v = 0; v < mesh.num_vertices(); ++v)
    line << "v " << mesh.vertices(v, 0) << ' ' << mesh.vertices(v, 1) << ' '
         << mesh.vertices(v, 2) << '\n';
  for (Index f = 0; f < mesh.num_faces(); ++f)
    line << "f " << mesh.faces(f, 0) + 1 << ' ' << mesh.faces(f, 1) + 1 << ' '
         << mesh.faces(f, 2) + 1 << '\n';
  out << line.str();
}

}  // namespace shelltok
