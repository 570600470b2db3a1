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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "shelltok/corpus.hpp"
#include "shelltok/token_io.hpp"

namespace {

using namespace shelltok;

struct Cli {
  CommandOptions opts;
  std::string scheme = "nautilus";
  std::string report = "table";
  std::string out;
  std::string input;
  std::string output_dir;
  std::string mesh_a, mesh_b;
  bool verbose = false;
};

void common_flags(CLI::App* cmd, Cli& cli) {
  cmd->add_option("--resolution", cli.opts.resolution, "Quantization levels per axis")
      ->check(CLI::Range(2u, 1u << 20));
  cmd->add_option("--multiplier", cli.opts.multiplier, "Coordinate compression multiplier")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs,-j", cli.opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--report", cli.report, "Report format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", cli.out, "Write the report here instead of stdout");
  cmd->add_flag("--verbose,-v", cli.verbose, "Log per-file failures to stderr");
}

void emit(const Cli& cli, const CommandResult& result) {
  const std::string text = cli.report == "json" ? result.report.dump(2) + "\n" : result.table;
  if (cli.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(cli.out, text);
  }
  if (cli.verbose && result.report.contains("failures"))
    for (const auto& f : result.report["failures"])
      std::cerr << "shelltok: " << f["path"].get<std::string>() << ": " << f["error"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shell-based mesh tokenizer"};
  app.require_subcommand(1);
  Cli cli;

  auto* tokenize = app.add_subcommand("tokenize", "Tokenize OBJ meshes into token files");
  tokenize->add_option("input", cli.input, "OBJ file or directory")->required();
  tokenize->add_option("-o,--output-dir", cli.output_dir, "Output directory")->required();
  tokenize->add_option("--scheme", cli.scheme, "Tokenization scheme")
      ->check(CLI::IsMember({"nautilus", "naive9n", "strip"}));
  tokenize->add_flag("--compress-coords", cli.opts.compress_coords, "Baselines: emit (u, v) coordinate pairs");
  tokenize->add_option("--format", cli.opts.token_format, "Token file format")
      ->check(CLI::IsMember({"ntk", "json"}));
  common_flags(tokenize, cli);

  auto* detokenize = app.add_subcommand("detokenize", "Decode token files into lattice OBJ meshes");
  detokenize->add_option("input", cli.input, "Token file or directory")->required();
  detokenize->add_option("-o,--output-dir", cli.output_dir, "Output directory")->required();
  common_flags(detokenize, cli);

  auto* roundtrip = app.add_subcommand("roundtrip", "Verify lossless tokenize/detokenize");
  roundtrip->add_option("input", cli.input, "OBJ/token file or directory")->required();
  common_flags(roundtrip, cli);

  auto* compare = app.add_subcommand("compare", "Compare tokenization schemes over a corpus");
  compare->add_option("input", cli.input, "OBJ file or directory")->required();
  compare->add_option("--window", cli.opts.window, "Local ratio window in tokens")->check(CLI::PositiveNumber);
  compare->add_flag("--compress-coords", cli.opts.compress_coords, "Baselines: emit (u, v) coordinate pairs");
  common_flags(compare, cli);

  auto* stats = app.add_subcommand("stats", "Face-count histogram of a corpus");
  stats->add_option("input", cli.input, "OBJ file or directory")->required();
  stats->add_option("--bucket-width", cli.opts.bucket_width, "Histogram bucket width in faces")
      ->check(CLI::PositiveNumber);
  common_flags(stats, cli);

  auto* metrics = app.add_subcommand("metrics", "Surface distances and topology quality");
  metrics->add_option("mesh_a", cli.mesh_a, "Reference OBJ mesh")->required();
  metrics->add_option("mesh_b", cli.mesh_b, "Candidate OBJ mesh")->required();
  metrics->add_option("--samples", cli.opts.samples, "Surface samples per mesh")->check(CLI::PositiveNumber);
  metrics->add_option("--seed", cli.opts.seed, "Sampling seed");
  common_flags(metrics, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    cli.opts.scheme = *parse_scheme(cli.scheme);
    CommandResult result;
    if (*tokenize) {
      result = cmd_tokenize(cli.input, cli.output_dir, cli.opts);
    } else if (*detokenize) {
      result = cmd_detokenize(cli.input, cli.output_dir, cli.opts);
    } else if (*roundtrip) {
      result = cmd_roundtrip(cli.input, cli.opts);
    } else if (*compare) {
      result = cmd_compare(cli.input, cli.opts);
    } else if (*stats) {
      result = cmd_stats(cli.input, cli.opts);
    } else {
      result = cmd_metrics(cli.mesh_a, cli.mesh_b, cli.opts);
    }
    emit(cli, result);
    return result.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "shelltok: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "shelltok: " << e.what() << "\n";
    return kPartialFailure;
  }
}
