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

#include "shelltok/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "shelltok/distance.hpp"
#include "shelltok/mesh_compare.hpp"
#include "shelltok/metrics.hpp"
#include "shelltok/obj_io.hpp"
#include "shelltok/quantize.hpp"
#include "shelltok/sampling.hpp"
#include "shelltok/shell_tokenizer.hpp"
#include "shelltok/token_io.hpp"

namespace shelltok {
namespace {

using nlohmann::json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string display_name(const fs::path& root, const fs::path& file) {
  if (fs::is_regular_file(root)) return file.filename().generic_string();
  return fs::relative(file, root).generic_string();
}

double mean(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

/// Left-aligned first column, right-aligned others.
std::string render(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  const auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      if (c == 0)
        out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      else
        out << std::right << std::setw(static_cast<int>(width[c])) << r[c];
    }
    out << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

struct Failure {
  std::string path;
  std::string reason;
};

json failures_json(const std::vector<std::optional<Failure>>& failures) {
  json out = json::array();
  for (const auto& f : failures)
    if (f) out.push_back({{"path", f->path}, {"error", f->reason}});
  return out;
}

std::string failures_table(const json& failures) {
  std::string out;
  for (const auto& f : failures)
    out += "FAILED " + f["path"].get<std::string>() + ": " + f["error"].get<std::string>() + "\n";
  return out;
}

TokenLayout layout_of(const CommandOptions& opts) {
  try {
    return TokenLayout(opts.resolution, opts.multiplier);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

TokenFile read_token_file(const fs::path& path) {
  if (lower(path.extension().string()) == ".json") {
    json j;
    try {
      j = json::parse(read_file(path));
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": " + e.what(), 0);
    }
    return token_file_from_json(j);
  }
  return decode_ntk(read_file(path));
}

fs::path output_path(const fs::path& root, const fs::path& file, const fs::path& out_dir,
                     const std::string& extension) {
  fs::path rel = fs::is_regular_file(root) ? file.filename() : fs::relative(file, root);
  rel.replace_extension(extension);
  return out_dir / rel;
}

}  // namespace

std::vector<fs::path> collect_inputs(const fs::path& input, const std::vector<std::string>& extensions) {
  const auto wanted = [&](const fs::path& p) {
    const std::string ext = lower(p.extension().string());
    return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
  };
  std::vector<fs::path> files;
  if (fs::is_regular_file(input)) {
    files.push_back(input);
  } else if (fs::is_directory(input)) {
    for (const auto& entry : fs::recursive_directory_iterator(input))
      if (entry.is_regular_file() && wanted(entry.path())) files.push_back(entry.path());
  } else {
    throw UsageError("input " + input.string() + " does not exist");
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("no meshes found under " + input.string());
  return files;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

CommandResult cmd_tokenize(const fs::path& input, const fs::path& out_dir, const CommandOptions& opts) {
  const TokenLayout layout = layout_of(opts);
  if (opts.token_format != "ntk" && opts.token_format != "json")
    throw UsageError("token format must be 'ntk' or 'json'");
  const auto files = collect_inputs(input, {".obj"});
  std::vector<json> rows(files.size());
  std::vector<std::optional<Failure>> failures(files.size());

  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    const std::string name = display_name(input, files[i]);
    try {
      const QuantizedMesh q = quantize(load_obj(files[i]), static_cast<std::int32_t>(opts.resolution));
      TokenFile file;
      std::size_t body = 0;
      json row;
      if (opts.scheme == Scheme::nautilus) {
        const Tokenization t = tokenize_detailed(q, layout);
        file = to_token_file(t.sequence);
        body = t.sequence.body_length();
        row["shells"] = t.shells.size();
      } else {
        const QuantizedMesh sorted = canonical_sort(q);
        const auto enc = opts.compress_coords ? CoordEncoding::compressed : CoordEncoding::raw;
        const BaselineTokenSequence b = opts.scheme == Scheme::naive9n
                                            ? naive_tokenize(sorted, enc, layout)
                                            : strip_tokenize(sorted, enc, layout);
        file = to_token_file(b, layout);
        body = b.tokens.size();
      }
      const fs::path out = output_path(input, files[i], out_dir, "." + opts.token_format);
      fs::create_directories(out.parent_path());
      write_file_atomic(out, opts.token_format == "ntk" ? encode_ntk(file) : to_json(file).dump() + "\n");

      row["path"] = name;
      row["output"] = display_name(out_dir, out);
      row["faces"] = q.num_faces();
      row["vertices"] = q.num_vertices();
      row["tokens"] = file.tokens.size();
      row["body_tokens"] = body;
      row["comp_ratio"] = compression_ratio(body, static_cast<std::size_t>(q.num_faces()));
      rows[i] = std::move(row);
    } catch (const std::exception& e) {
      failures[i] = Failure{name, e.what()};
    }
  });

  CommandResult result;
  json meshes = json::array();
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    if (r.is_null()) continue;
    meshes.push_back(r);
    table.push_back({r["path"].get<std::string>(), std::to_string(r["faces"].get<int>()),
                     std::to_string(r["tokens"].get<std::size_t>()), fixed(r["comp_ratio"].get<double>())});
  }
  result.report = {{"command", "tokenize"},
                   {"scheme", std::string(scheme_name(opts.scheme))},
                   {"resolution", opts.resolution},
                   {"multiplier", opts.multiplier},
                   {"meshes", meshes},
                   {"failures", failures_json(failures)}};
  result.table = render({"mesh", "faces", "tokens", "comp_ratio"}, table) +
                 failures_table(result.report["failures"]);
  result.exit_code = result.report["failures"].empty() ? kSuccess : kPartialFailure;
  return result;
}

CommandResult cmd_detokenize(const fs::path& input, const fs::path& out_dir, const CommandOptions& opts) {
  const auto files = collect_inputs(input, {".ntk", ".json"});
  std::vector<json> rows(files.size());
  std::vector<std::optional<Failure>> failures(files.size());
  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    const std::string name = display_name(input, files[i]);
    try {
      const QuantizedMesh mesh = detokenize(to_token_sequence(read_token_file(files[i])));
      const fs::path out = output_path(input, files[i], out_dir, ".obj");
      fs::create_directories(out.parent_path());
      std::ostringstream obj;
      write_obj(obj, mesh);
      write_file_atomic(out, obj.str());
      rows[i] = {{"path", name},
                 {"output", display_name(out_dir, out)},
                 {"faces", mesh.num_faces()},
                 {"vertices", mesh.num_vertices()}};
    } catch (const std::exception& e) {
      failures[i] = Failure{name, e.what()};
    }
  });
  CommandResult result;
  json meshes = json::array();
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    if (r.is_null()) continue;
    meshes.push_back(r);
    table.push_back({r["path"].get<std::string>(), std::to_string(r["faces"].get<int>()),
                     std::to_string(r["vertices"].get<int>())});
  }
  result.report = {{"command", "detokenize"}, {"meshes", meshes}, {"failures", failures_json(failures)}};
  result.table = render({"tokens", "faces", "vertices"}, table) + failures_table(result.report["failures"]);
  result.exit_code = result.report["failures"].empty() ? kSuccess : kPartialFailure;
  return result;
}

CommandResult cmd_roundtrip(const fs::path& input, const CommandOptions& opts) {
  const TokenLayout layout = layout_of(opts);
  const auto files = collect_inputs(input, {".obj", ".ntk", ".json"});
  std::vector<json> rows(files.size());

  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    json row{{"path", display_name(input, files[i])}};
    try {
      QuantizedMesh original;
      TokenLayout mesh_layout = layout;
      if (lower(files[i].extension().string()) == ".obj") {
        original = quantize(load_obj(files[i]), static_cast<std::int32_t>(opts.resolution));
      } else {
        const TokenSequence stored = to_token_sequence(read_token_file(files[i]));
        mesh_layout = stored.layout;
        original = detokenize(stored);
      }
      const Tokenization t = tokenize_detailed(original, mesh_layout);
      const QuantizedMesh restored = detokenize(t.sequence);
      const MeshComparison c = compare_meshes(original, restored);
      row["pass"] = c.lossless();
      row["orientation_preserved"] = c.oriented_faces_equal;
      row["faces"] = original.num_faces();
      row["tokens"] = t.sequence.tokens.size();
      if (!c.divergence.empty()) row["divergence"] = c.divergence;
    } catch (const DecodeError& e) {
      row["pass"] = false;
      row["error"] = e.what();
      row["token_index"] = e.token_index();
    } catch (const std::exception& e) {
      row["pass"] = false;
      row["error"] = e.what();
    }
    rows[i] = std::move(row);
  });

  CommandResult result;
  std::size_t passed = 0, flagged = 0;
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    const bool pass = r["pass"].get<bool>();
    passed += pass;
    std::string note;
    if (r.contains("error")) {
      note = r["error"].get<std::string>();
    } else if (!r["orientation_preserved"].get<bool>()) {
      note = "orientation not preserved";
      ++flagged;
    }
    table.push_back({r["path"].get<std::string>(), pass ? "pass" : "FAIL", note});
  }
  result.report = {{"command", "roundtrip"},
                   {"meshes", rows},
                   {"passed", passed},
                   {"failed", rows.size() - passed},
                   {"orientation_flagged", flagged}};
  result.table = render({"mesh", "result", "note"}, table);
  result.exit_code = passed == rows.size() ? kSuccess : kPartialFailure;
  return result;
}

CommandResult cmd_compare(const fs::path& input, const CommandOptions& opts) {
  const TokenLayout layout = layout_of(opts);
  const auto files = collect_inputs(input, {".obj"});
  std::vector<json> rows(files.size());
  std::vector<std::optional<Failure>> failures(files.size());
  const auto enc = opts.compress_coords ? CoordEncoding::compressed : CoordEncoding::raw;

  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    const std::string name = display_name(input, files[i]);
    try {
      const QuantizedMesh q = quantize(load_obj(files[i]), static_cast<std::int32_t>(opts.resolution));
      const Tokenization t = tokenize_detailed(q, layout);
      const auto n = static_cast<std::size_t>(t.sorted.num_faces());
      const auto scheme_row = [&](std::size_t body, std::span<const Occurrence> occ) {
        return json{{"comp_ratio", compression_ratio(body, n)},
                    {"local_ratio", local_ratio(occ, t.sorted, opts.window)},
                    {"tokens", body}};
      };
      const auto occ = shell_occurrences(t.shells);
      const BaselineTokenSequence naive = naive_tokenize(t.sorted, enc, layout);
      const BaselineTokenSequence strip = strip_tokenize(t.sorted, enc, layout);
      const QualityReport quality = quality_report(t.sorted);
      rows[i] = {{"path", name},
                 {"faces", n},
                 {"vertices", t.sorted.num_vertices()},
                 {"shells", t.shells.size()},
                 {"nautilus", scheme_row(t.sequence.body_length(), occ)},
                 {"naive9n", scheme_row(naive.tokens.size(), naive.occurrences)},
                 {"strip", scheme_row(strip.tokens.size(), strip.occurrences)},
                 {"quality",
                  {{"surface_holes", quality.surface_hole_count},
                   {"intersecting_pairs", quality.intersecting_pair_count},
                   {"nonmanifold_edges", quality.nonmanifold_edge_count},
                   {"manifold", quality.is_manifold_result}}}};
    } catch (const std::exception& e) {
      failures[i] = Failure{name, e.what()};
    }
  });

  const std::vector<std::string> schemes{"naive9n", "strip", "nautilus"};
  json meshes = json::array();
  std::map<std::string, std::vector<double>> comp, local;
  std::size_t holes = 0, inters = 0, nonmanifold = 0, manifold = 0;
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    if (r.is_null()) continue;
    meshes.push_back(r);
    std::vector<std::string> line{r["path"].get<std::string>(), std::to_string(r["faces"].get<std::size_t>())};
    for (const auto& s : schemes) {
      comp[s].push_back(r[s]["comp_ratio"].get<double>());
      local[s].push_back(r[s]["local_ratio"].get<double>());
      line.push_back(fixed(r[s]["comp_ratio"].get<double>()));
      line.push_back(fixed(r[s]["local_ratio"].get<double>()));
    }
    const auto& q = r["quality"];
    holes += q["surface_holes"].get<int>() > 0;
    inters += q["intersecting_pairs"].get<std::int64_t>() > 0;
    nonmanifold += q["nonmanifold_edges"].get<int>() > 0;
    manifold += q["manifold"].get<bool>();
    table.push_back(std::move(line));
  }
  json aggregate = json::object();
  std::vector<std::string> mean_line{"mean", ""}, median_line{"median", ""};
  for (const auto& s : schemes) {
    aggregate[s] = {{"comp_ratio_mean", mean(comp[s])},
                    {"comp_ratio_median", median(comp[s])},
                    {"local_ratio_mean", mean(local[s])},
                    {"local_ratio_median", median(local[s])}};
    mean_line.push_back(fixed(mean(comp[s])));
    mean_line.push_back(fixed(mean(local[s])));
    median_line.push_back(fixed(median(comp[s])));
    median_line.push_back(fixed(median(local[s])));
  }
  const double count = static_cast<double>(meshes.size());
  const auto pct = [&](std::size_t k) { return count > 0 ? 100.0 * static_cast<double>(k) / count : 0.0; };
  aggregate["defects_percent"] = {{"surface_holes", pct(holes)},
                                  {"intersecting_faces", pct(inters)},
                                  {"nonmanifold_edges", pct(nonmanifold)},
                                  {"manifold", pct(manifold)}};

  CommandResult result;
  result.report = {{"command", "compare"},
                   {"resolution", opts.resolution},
                   {"multiplier", opts.multiplier},
                   {"window", opts.window},
                   {"coords", opts.compress_coords ? "compressed" : "raw"},
                   {"meshes", meshes},
                   {"aggregate", aggregate},
                   {"failures", failures_json(failures)}};
  table.push_back(mean_line);
  table.push_back(median_line);
  std::vector<std::string> header{"mesh", "faces"};
  for (const auto& s : schemes) {
    header.push_back(s + ".comp");
    header.push_back(s + ".local");
  }
  std::ostringstream defects;
  defects << "surface holes " << fixed(pct(holes), 1) << "%, intersecting faces " << fixed(pct(inters), 1)
          << "%, non-manifold edges " << fixed(pct(nonmanifold), 1) << "%, manifold " << fixed(pct(manifold), 1)
          << "%\n";
  result.table = render(header, table) + defects.str() + failures_table(result.report["failures"]);
  result.exit_code = result.report["failures"].empty() ? kSuccess : kPartialFailure;
  return result;
}

CommandResult cmd_stats(const fs::path& input, const CommandOptions& opts) {
  if (opts.bucket_width == 0) throw UsageError("bucket width must be positive");
  const auto files = collect_inputs(input, {".obj"});
  std::vector<std::optional<std::size_t>> counts(files.size());
  std::vector<std::optional<Failure>> failures(files.size());
  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    try {
      counts[i] = static_cast<std::size_t>(load_obj(files[i]).num_faces());
    } catch (const std::exception& e) {
      failures[i] = Failure{display_name(input, files[i]), e.what()};
    }
  });

  std::map<std::size_t, std::size_t> buckets;
  std::vector<double> values;
  json meshes = json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!counts[i]) continue;
    ++buckets[*counts[i] / opts.bucket_width];
    values.push_back(static_cast<double>(*counts[i]));
    meshes.push_back({{"path", display_name(input, files[i])}, {"faces", *counts[i]}});
  }
  json histogram = json::array();
  std::vector<std::vector<std::string>> table;
  for (const auto& [b, n] : buckets) {
    const std::size_t lo = b * opts.bucket_width, hi = lo + opts.bucket_width;
    histogram.push_back({{"min_faces", lo}, {"max_faces_exclusive", hi}, {"count", n}});
    table.push_back({"[" + std::to_string(lo) + ", " + std::to_string(hi) + ")", std::to_string(n)});
  }
  CommandResult result;
  json summary = json::object();
  if (!values.empty()) {
    summary = {{"count", values.size()},
               {"min", *std::min_element(values.begin(), values.end())},
               {"max", *std::max_element(values.begin(), values.end())},
               {"mean", mean(values)},
               {"median", median(values)}};
  }
  result.report = {{"command", "stats"},
                   {"bucket_width", opts.bucket_width},
                   {"meshes", meshes},
                   {"histogram", histogram},
                   {"summary", summary},
                   {"failures", failures_json(failures)}};
  std::ostringstream tail;
  if (!values.empty())
    tail << "meshes " << values.size() << ", faces min " << summary["min"].get<double>() << " max "
         << summary["max"].get<double>() << " mean " << fixed(mean(values), 2) << "\n";
  result.table = render({"faces", "meshes"}, table) + tail.str() + failures_table(result.report["failures"]);
  result.exit_code = result.report["failures"].empty() ? kSuccess : kPartialFailure;
  return result;
}

CommandResult cmd_metrics(const fs::path& mesh_a, const fs::path& mesh_b, const CommandOptions& opts) {
  if (opts.samples == 0) throw UsageError("sample count must be positive");
  for (const auto& p : {mesh_a, mesh_b})
    if (!fs::is_regular_file(p)) throw UsageError("input " + p.string() + " does not exist");
  const RawMesh<double> a = load_obj(mesh_a), b = load_obj(mesh_b);
  const SurfaceSample sa = sample_surface(a.vertices, a.faces, opts.samples, opts.seed);
  const SurfaceSample sb = sample_surface(b.vertices, b.faces, opts.samples, opts.seed);
  DistanceMetrics d = chamfer_hausdorff(sa.points, sb.points);
  d.sample_count = opts.samples;
  d.seed = opts.seed;
  const QualityReport q = quality_report(quantize(b, static_cast<std::int32_t>(opts.resolution)));

  CommandResult result;
  result.report = {{"command", "metrics"},
                   {"mesh_a", mesh_a.filename().generic_string()},
                   {"mesh_b", mesh_b.filename().generic_string()},
                   {"distance",
                    {{"chamfer", d.chamfer},
                     {"hausdorff", d.hausdorff},
                     {"samples", d.sample_count},
                     {"seed", d.seed}}},
                   {"quality",
                    {{"surface_holes", q.surface_hole_count},
                     {"intersecting_pairs", q.intersecting_pair_count},
                     {"nonmanifold_edges", q.nonmanifold_edge_count},
                     {"manifold", q.is_manifold_result}}}};
  std::ostringstream s;
  s << std::setprecision(17);
  s << "chamfer            " << d.chamfer << "\n"
    << "hausdorff          " << d.hausdorff << "\n"
    << "samples            " << d.sample_count << " (seed " << d.seed << ")\n"
    << "surface holes      " << q.surface_hole_count << "\n"
    << "intersecting pairs " << q.intersecting_pair_count << "\n"
    << "non-manifold edges " << q.nonmanifold_edge_count << "\n"
    << "manifold           " << (q.is_manifold_result ? "yes" : "no") << "\n";
  result.table = s.str();
  return result;
}

}  // namespace shelltok
