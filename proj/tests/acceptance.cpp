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

// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "shelltok/adjacency.hpp"
#include "shelltok/baselines.hpp"
#include "shelltok/distance.hpp"
#include "shelltok/intersection.hpp"
#include "shelltok/mesh_compare.hpp"
#include "shelltok/metrics.hpp"
#include "shelltok/quantize.hpp"
#include "shelltok/sampling.hpp"
#include "shelltok/shell_tokenizer.hpp"
#include "shelltok/token_io.hpp"

using namespace shelltok;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  failures += !pass;
}

// Runs one criterion, turning an escaped exception into a failure line.
template <typename Fn>
void criterion(const std::string& name, Fn fn) {
  try {
    fn(name);
  } catch (const std::exception& e) {
    report(name, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << std::fixed << x;
  return s.str();
}

void roundtrip(const std::string& name) {
  const auto t0 = Clock::now();
  const auto corpus = fixtures::roundtrip_corpus();
  std::size_t passed = 0;
  std::string first_failure;
  for (const auto& [id, mesh] : corpus) {
    const QuantizedMesh restored = detokenize(tokenize(mesh, TokenLayout(static_cast<std::uint32_t>(mesh.resolution), 2048)));
    const MeshComparison c = compare_meshes(mesh, restored);
    if (c.vertices_equal && c.oriented_faces_equal) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = ", first failure " + id + " (" + c.divergence + ")";
    }
  }
  const double elapsed = seconds_since(t0);
  report(name, corpus.size() >= 200 && passed == corpus.size() && elapsed < 60.0,
         std::to_string(passed) + "/" + std::to_string(corpus.size()) + " meshes lossless with orientation, " +
             fmt(elapsed, 2) + " s (limit 60 s)" + first_failure);
}

void bijection(const std::string& name) {
  const TokenLayout layout;
  const auto t0 = Clock::now();
  std::uint64_t bad = 0;
  for (std::int32_t x = 0; x < 128; ++x)
    for (std::int32_t y = 0; y < 128; ++y)
      for (std::int32_t z = 0; z < 128; ++z) {
        const UV uv = compress_coords(x, y, z, layout);
        const LatticePoint p = decompress_coords(uv.u, uv.v, layout);
        bad += p != LatticePoint{x, y, z};
      }
  const double elapsed = seconds_since(t0);
  // Independent arithmetic on a sparse sample, outside the timed loop.
  std::uint64_t mismatched = 0;
  for (std::int32_t x = 0; x < 128; x += 7)
    for (std::int32_t y = 0; y < 128; y += 5)
      for (std::int32_t z = 0; z < 128; z += 3) {
        const UV uv = compress_coords(x, y, z, layout);
        const auto ref = oracles::lattice_index_pair(x, y, z, 128, 2048);
        mismatched += uv.u != ref[0] || uv.v != ref[1];
      }
  report(name, bad == 0 && mismatched == 0 && elapsed < 10.0,
         "2097152 lattice points, " + std::to_string(bad) + " failures, " + std::to_string(mismatched) +
             " index mismatches, " + fmt(elapsed, 3) + " s (limit 10 s)");
}

void token_count(const std::string& name) {
  std::size_t checked = 0, bad = 0;
  for (const auto& [id, mesh] : fixtures::roundtrip_corpus()) {
    const Tokenization t = tokenize_detailed(mesh, TokenLayout(static_cast<std::uint32_t>(mesh.resolution), 2048));
    const std::size_t n = static_cast<std::size_t>(mesh.num_faces()), s = t.shells.size();
    const std::size_t body = t.sequence.body_length();
    const double ratio = compression_ratio(body, n);
    const double closed_form = 2.0 / 9.0 + 4.0 * static_cast<double>(s) / (9.0 * static_cast<double>(n));
    const bool ok = body == 2 * (n + 2 * s) &&
                    ratio == static_cast<double>(2 * n + 4 * s) / (9.0 * static_cast<double>(n)) &&
                    std::abs(ratio - closed_form) <= 4 * std::numeric_limits<double>::epsilon();
    bad += !ok;
    ++checked;
  }
  report(name, bad == 0,
         std::to_string(checked) + " tokenizations, " + std::to_string(bad) + " violate body = 2(N + 2S)");
}

void golden(const std::string& name) {
  std::ifstream in(std::string(SHELLTOK_GOLDEN_DIR) + "/tetrahedron.json");
  const nlohmann::json g = nlohmann::json::parse(in);
  std::vector<Shell> expected;
  for (const auto& s : g["shells"])
    expected.push_back({s["center"].get<Index>(), s["ring"].get<std::vector<Index>>(), s["closed"].get<bool>()});

  const Tokenization t = tokenize_detailed(canonical_sort(fixtures::canonical_tetrahedron()), TokenLayout());
  const double ratio = compression_ratio(t.sequence.body_length(), 4);
  const bool ok = t.shells == expected && t.sequence.body_length() == 16 && ratio == 16.0 / 36.0 &&
                  t.sequence.tokens == g["tokens"].get<std::vector<Token>>();
  std::ostringstream d;
  d << t.shells.size() << " shells";
  for (const Shell& s : t.shells) {
    d << " [" << s.center << ":";
    for (Index v : s.ring) d << " " << v;
    d << (s.closed ? " closed]" : " open]");
  }
  d << ", " << t.sequence.body_length() << " body tokens, ratio " << t.sequence.body_length() << "/36";
  report(name, ok, d.str());
}

void table_one(const std::string& name) {
  const auto corpus = fixtures::closed_manifold_corpus();
  double comp_shell = 0, comp_strip = 0, comp_naive = 0, local_shell = 0, local_naive = 0;
  const TokenLayout layout;
  for (const auto& [id, mesh] : corpus) {
    const Tokenization t = tokenize_detailed(mesh, layout);
    const auto n = static_cast<std::size_t>(t.sorted.num_faces());
    const auto naive = naive_tokenize(t.sorted);
    const auto strip = strip_tokenize(t.sorted);
    comp_shell += compression_ratio(t.sequence.body_length(), n);
    comp_strip += compression_ratio(strip.tokens.size(), n);
    comp_naive += compression_ratio(naive.tokens.size(), n);
    local_shell += local_ratio(shell_occurrences(t.shells), t.sorted);
    local_naive += local_ratio(naive.occurrences, t.sorted);
  }
  const double k = static_cast<double>(corpus.size());
  comp_shell /= k;
  comp_strip /= k;
  comp_naive /= k;
  local_shell /= k;
  local_naive /= k;
  report(name,
         comp_shell < comp_strip && comp_strip < comp_naive && comp_naive == 1.0 && comp_shell <= 0.40 &&
             local_shell > local_naive,
         std::to_string(corpus.size()) + " closed meshes, mean comp ratio shell " + fmt(comp_shell) + " < strip " +
             fmt(comp_strip) + " < naive9n " + fmt(comp_naive) + " (shell limit 0.40), mean local ratio shell " +
             fmt(local_shell) + " > naive9n " + fmt(local_naive));
}

void topology(const std::string& name) {
  const TopologyReport hole = topology_report(fixtures::cube_with_hole());
  const std::int64_t crossing = count_self_intersections(fixtures::crossing_triangles());
  const QuantizedMesh cube = quantize(fixtures::cube(), 128);
  const TopologyReport cube_topo = topology_report(cube);
  const std::int64_t cube_pairs = count_self_intersections(cube);
  int agree = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const QuantizedMesh soup = fixtures::triangle_soup(40 + static_cast<int>(seed), seed);
    agree += count_self_intersections(soup) == oracles::brute_intersections(soup);
  }
  report(name,
         hole.boundary_loop_count == 1 && crossing == 1 && cube_topo.boundary_loop_count == 0 && cube_pairs == 0 &&
             agree == 20,
         "holed cube " + std::to_string(hole.boundary_loop_count) + " loop, crossing triangles " +
             std::to_string(crossing) + " pair, cube " + std::to_string(cube_topo.boundary_loop_count) + "/" +
             std::to_string(cube_pairs) + ", grid equals all-pairs on " + std::to_string(agree) + "/20 soups");
}

void distances(const std::string& name) {
  int exact = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    PositionMatrix<double> a(50, 3), b(50, 3);
    for (int i = 0; i < 50; ++i)
      for (int c = 0; c < 3; ++c) {
        a(i, c) = unit_draw(rng) * 2 - 1;
        b(i, c) = unit_draw(rng) * 2 - 1;
      }
    const DistanceMetrics m = chamfer_hausdorff(a, b);
    const oracles::BruteDistances ref = oracles::brute_distances(a, b);
    exact += m.chamfer == ref.chamfer && m.hausdorff == ref.hausdorff;
  }

  const auto sphere = fixtures::icosphere(2);
  const SurfaceSample s1 = sample_surface(sphere.vertices, sphere.faces, 1024, 7);
  const SurfaceSample s2 = sample_surface(sphere.vertices, sphere.faces, 1024, 7);
  const DistanceMetrics self = chamfer_hausdorff(s1.points, s2.points);

  PositionMatrix<double> p(1, 3), q(1, 3);
  p << 0, 0, 0;
  q << 1, 0, 0;
  const DistanceMetrics single = chamfer_hausdorff(p, q);
  report(name, exact == 20 && self.chamfer == 0 && self.hausdorff == 0 && single.chamfer == 2.0 &&
                   single.hausdorff == 1.0,
         "brute-force exact on " + std::to_string(exact) + "/20 50-point sets, identical surfaces (" +
             fmt(self.chamfer) + ", " + fmt(self.hausdorff) + "), single point (" + fmt(single.chamfer, 1) +
             ", " + fmt(single.hausdorff, 1) + ")");
}

int run(const std::string& args) {
  const std::string cmd = std::string(SHELLTOK_CLI) + " " + args + " >/dev/null 2>&1";
  return std::system(cmd.c_str());
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

void determinism(const std::string& name) {
  const fs::path dir = fixtures::scratch_dir("acceptance_det");
  for (std::uint64_t s = 0; s < 6; ++s)
    fixtures::write_obj_file(dir / "in" / ("fuzzed" + std::to_string(s) + ".obj"), fixtures::fuzzed_manifold(s));
  fixtures::write_obj_file(dir / "in" / "patch.obj", fixtures::grid_patch(7, 6, 3));
  int status = 0;
  for (const std::string run_id : {"1", "2"}) {
    status |= run("tokenize " + q(dir / "in") + " -o " + q(dir / ("tok" + run_id)) + " --report json --out " +
                  q(dir / ("tokenize" + run_id + ".json")));
    status |= run("compare " + q(dir / "in") + " --report json --out " + q(dir / ("compare" + run_id + ".json")));
  }
  std::size_t compared = 0, differing = 0;
  const auto same = [&](const fs::path& a, const fs::path& b) {
    ++compared;
    differing += read_file(a) != read_file(b);
  };
  same(dir / "tokenize1.json", dir / "tokenize2.json");
  same(dir / "compare1.json", dir / "compare2.json");
  for (const auto& e : fs::directory_iterator(dir / "tok1")) same(e.path(), dir / "tok2" / e.path().filename());
  fs::remove_all(dir);
  report(name, status == 0 && differing == 0 && compared == 9,
         std::to_string(compared) + " outputs compared across two runs, " + std::to_string(differing) +
             " differ, exit status " + std::to_string(status));
}

}  // namespace

int main() {
  criterion("round-trip losslessness", roundtrip);
  criterion("coordinate compression bijection", bijection);
  criterion("token-count identity", token_count);
  criterion("tetrahedron golden trace", golden);
  criterion("scheme comparison ordering", table_one);
  criterion("topology validators", topology);
  criterion("distance metrics", distances);
  criterion("determinism", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
