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

#include <nlohmann/json.hpp>

#include "shelltok/baselines.hpp"
#include "shelltok/shell_tokenizer.hpp"

namespace shelltok {

/// Contents of a ".ntk" token file.
///
/// Binary layout, all integers little-endian:
///
///   bytes 0-3    "NTK1"
///   bytes 4-7    u32: resolution in bits 0-23; bits 24-31 hold the scheme
///                (0 shell codec, 1 naive9n, 2 strip) with bit 31 set when a
///                baseline uses compressed (u, v) coordinates
///   bytes 8-11   u32 multiplier
///   bytes 12-15  u32 token count
///   then         u16 per token
///
/// Shell-codec files therefore carry the plain resolution in bytes 4-7.
/// Shell-codec streams include sos/eos; baseline streams are bare bodies.
struct TokenFile {
  Scheme scheme = Scheme::nautilus;
  CoordEncoding encoding = CoordEncoding::compressed;
  std::uint32_t resolution = 128;
  std::uint32_t multiplier = 2048;
  std::vector<Token> tokens;

  friend bool operator==(const TokenFile&, const TokenFile&) = default;
};

TokenFile to_token_file(const TokenSequence& sequence);
TokenFile to_token_file(const BaselineTokenSequence& sequence, const TokenLayout& layout);
/// Throws Error unless the file holds a shell-codec stream.
TokenSequence to_token_sequence(const TokenFile& file);

/// Throws Error when a token does not fit 16 bits.
std::string encode_ntk(const TokenFile& file);
/// Throws ParseError on a bad magic, header or truncated payload.
TokenFile decode_ntk(const std::string& bytes);

nlohmann::json to_json(const TokenFile& file);
TokenFile token_file_from_json(const nlohmann::json& j);

/// Writes through a temporary sibling and renames it into place, so readers
/// never see a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace shelltok
