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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shelltok/baselines.hpp"

// Batch commands behind the command-line tool. Each returns a JSON report
// plus a plain-text table; per-file failures never abort a run.

namespace shelltok {

namespace fs = std::filesystem;

/// Bad flags or unusable input (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { kSuccess = 0, kPartialFailure = 1, kUsageError = 2 };

struct CommandOptions {
  std::uint32_t resolution = 128;
  std::uint32_t multiplier = 2048;
  Scheme scheme = Scheme::nautilus;
  /// Baselines only: (u, v) pairs instead of raw coordinates.
  bool compress_coords = false;
  /// Token files: "ntk" or "json".
  std::string token_format = "ntk";
  std::uint64_t seed = 0;
  std::size_t samples = 1024;
  std::size_t window = 100;
  std::size_t bucket_width = 500;
  unsigned jobs = 1;
};

struct CommandResult {
  nlohmann::json report;
  std::string table;
  int exit_code = kSuccess;
};

/// Files under `input` (a file or a directory, searched recursively) whose
/// extension is in `extensions`, sorted by path. Throws UsageError when there
/// are none.
std::vector<fs::path> collect_inputs(const fs::path& input, const std::vector<std::string>& extensions);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// One token file per OBJ mesh, mirroring the input tree under `out_dir`.
CommandResult cmd_tokenize(const fs::path& input, const fs::path& out_dir, const CommandOptions& opts);

/// One lattice OBJ per shell-codec token file (.ntk or .json).
CommandResult cmd_detokenize(const fs::path& input, const fs::path& out_dir, const CommandOptions& opts);

/// OBJ inputs: quantize, tokenize, detokenize and compare. Token files:
/// decode, re-tokenize, decode again and compare.
CommandResult cmd_roundtrip(const fs::path& input, const CommandOptions& opts);

/// Compression and local ratio for every scheme plus topology quality.
CommandResult cmd_compare(const fs::path& input, const CommandOptions& opts);

/// Face-count histogram of a corpus.
CommandResult cmd_stats(const fs::path& input, const CommandOptions& opts);

/// Chamfer/Hausdorff between two surfaces and the quality report of the second.
CommandResult cmd_metrics(const fs::path& mesh_a, const fs::path& mesh_b, const CommandOptions& opts);

}  // namespace shelltok
