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

#include "shelltok/token_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace shelltok {
namespace {

constexpr char kMagic[4] = {'N', 'T', 'K', '1'};
constexpr std::size_t kHeader = 16;

void put_u32(std::string& out, std::uint32_t x) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((x >> (8 * k)) & 0xff));
}

std::uint32_t get_u32(const std::string& in, std::size_t at) {
  std::uint32_t x = 0;
  for (int k = 0; k < 4; ++k)
    x |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[at + static_cast<std::size_t>(k)])) << (8 * k);
  return x;
}

}  // namespace

TokenFile to_token_file(const TokenSequence& sequence) {
  return {Scheme::nautilus, CoordEncoding::compressed, sequence.layout.resolution(),
          sequence.layout.multiplier(), sequence.tokens};
}

TokenFile to_token_file(const BaselineTokenSequence& sequence, const TokenLayout& layout) {
  return {sequence.scheme, sequence.encoding, layout.resolution(), layout.multiplier(),
          sequence.tokens};
}

TokenSequence to_token_sequence(const TokenFile& file) {
  if (file.scheme != Scheme::nautilus)
    throw Error("token file holds a '" + std::string(scheme_name(file.scheme)) +
                "' baseline stream, not a shell-codec stream");
  return {TokenLayout(file.resolution, file.multiplier), file.tokens};
}

std::string encode_ntk(const TokenFile& file) {
  if (file.resolution >= (1u << 24)) throw Error("resolution does not fit the .ntk header");
  std::uint32_t tag = static_cast<std::uint32_t>(file.scheme);
  if (file.scheme != Scheme::nautilus && file.encoding == CoordEncoding::compressed) tag |= 0x80;
  std::string out(kMagic, sizeof kMagic);
  put_u32(out, file.resolution | (tag << 24));
  put_u32(out, file.multiplier);
  put_u32(out, static_cast<std::uint32_t>(file.tokens.size()));
  out.reserve(kHeader + 2 * file.tokens.size());
  for (std::size_t i = 0; i < file.tokens.size(); ++i) {
    const Token t = file.tokens[i];
    if (t > 0xffff)
      throw Error("token " + std::to_string(i) + " (id " + std::to_string(t) +
                  ") does not fit the 16-bit .ntk payload");
    out.push_back(static_cast<char>(t & 0xff));
    out.push_back(static_cast<char>(t >> 8));
  }
  return out;
}

TokenFile decode_ntk(const std::string& bytes) {
  if (bytes.size() < kHeader) throw ParseError("token file shorter than its 16-byte header", 0);
  if (!std::equal(kMagic, kMagic + 4, bytes.begin())) throw ParseError("bad magic, expected NTK1", 0);
  TokenFile file;
  const std::uint32_t word = get_u32(bytes, 4);
  file.resolution = word & 0xffffff;
  const std::uint32_t tag = word >> 24;
  const std::uint32_t scheme = tag & 0x7f;
  if (scheme > 2) throw ParseError("unknown scheme tag " + std::to_string(scheme), 0);
  file.scheme = static_cast<Scheme>(scheme);
  file.encoding = (file.scheme == Scheme::nautilus || (tag & 0x80)) ? CoordEncoding::compressed
                                                                     : CoordEncoding::raw;
  if (file.scheme == Scheme::nautilus && (tag & 0x80))
    throw ParseError("shell-codec stream with a baseline encoding flag", 0);
  file.multiplier = get_u32(bytes, 8);
  const std::uint32_t count = get_u32(bytes, 12);
  if (bytes.size() != kHeader + 2 * std::size_t{count})
    throw ParseError("payload holds " + std::to_string((bytes.size() - kHeader) / 2) +
                         " tokens, header declares " + std::to_string(count),
                     0);
  file.tokens.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    file.tokens[i] = static_cast<unsigned char>(bytes[kHeader + 2 * i]) |
                     (static_cast<Token>(static_cast<unsigned char>(bytes[kHeader + 2 * i + 1])) << 8);
  return file;
}

nlohmann::json to_json(const TokenFile& file) {
  nlohmann::json j;
  j["format"] = "ntk";
  j["version"] = 1;
  j["scheme"] = std::string(scheme_name(file.scheme));
  j["coords"] = file.encoding == CoordEncoding::raw ? "raw" : "compressed";
  j["resolution"] = file.resolution;
  j["multiplier"] = file.multiplier;
  j["tokens"] = file.tokens;
  return j;
}

TokenFile token_file_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format") != "ntk") throw ParseError("JSON token file: format must be \"ntk\"", 0);
    TokenFile file;
    const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (!scheme) throw ParseError("JSON token file: unknown scheme", 0);
    file.scheme = *scheme;
    file.encoding = j.value("coords", "compressed") == "raw" ? CoordEncoding::raw
                                                             : CoordEncoding::compressed;
    file.resolution = j.at("resolution").get<std::uint32_t>();
    file.multiplier = j.at("multiplier").get<std::uint32_t>();
    file.tokens = j.at("tokens").get<std::vector<Token>>();
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON token file: ") + e.what(), 0);
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace shelltok
