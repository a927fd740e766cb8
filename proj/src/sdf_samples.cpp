// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include "sketchflow/sdf_samples.hpp"

#include <cmath>

#include "sketchflow/common.hpp"
#include "sketchflow/rng.hpp"

namespace sketchflow {

namespace {

// Positions only; values are filled in by the caller's evaluator.
std::vector<Vec3> sample_positions(const TriangleMesh& surface, const SdfSamplingParams& params,
                                   uint64_t rng_seed, int64_t* n_surface_out) {
  RandomStream rng(rng_seed);
  double std1 = params.as_variance ? std::sqrt(params.sigma1) : params.sigma1;
  double std2 = params.as_variance ? std::sqrt(params.sigma2) : params.sigma2;

  std::vector<Vec3> positions;
  positions.reserve(static_cast<size_t>(2 * params.n_surface + params.n_uniform));

  if (params.n_surface > 0) {
    auto base = sample_surface(surface, params.n_surface, rng.fork("surface").seed());
    auto noise = rng.fork("noise");
    for (const auto& p : base) {
      positions.push_back(
          {p.x + noise.normal(0, std1), p.y + noise.normal(0, std1), p.z + noise.normal(0, std1)});
      positions.push_back(
          {p.x + noise.normal(0, std2), p.y + noise.normal(0, std2), p.z + noise.normal(0, std2)});
    }
  }
  auto ubox = rng.fork("uniform");
  for (int64_t i = 0; i < params.n_uniform; ++i)
    positions.push_back({ubox.uniform(-0.5, 0.5), ubox.uniform(-0.5, 0.5), ubox.uniform(-0.5, 0.5)});

  *n_surface_out = params.n_surface;
  return positions;
}

}  // namespace

SdfSampleSet generate_sdf_samples(const AnalyticSdf& sdf, const TriangleMesh& surface,
                                  const std::string& shape_id, const SdfSamplingParams& params,
                                  uint64_t rng_seed) {
  SdfSampleSet set;
  set.shape_id = shape_id;
  auto positions = sample_positions(surface, params, rng_seed, &set.n_surface);
  set.n_uniform = params.n_uniform;
  auto values = eval_analytic_sdf(sdf, positions);
  set.samples.resize(positions.size());
  for (size_t i = 0; i < positions.size(); ++i) set.samples[i] = {positions[i], values[i]};
  return set;
}

SdfSampleSet generate_sdf_samples(const TriangleMesh& mesh, const std::string& shape_id,
                                  const SdfSamplingParams& params, uint64_t rng_seed) {
  SdfSampleSet set;
  set.shape_id = shape_id;
  auto positions = sample_positions(mesh, params, rng_seed, &set.n_surface);
  set.n_uniform = params.n_uniform;
  auto result = mesh_sdf(mesh, positions);
  set.samples.resize(positions.size());
  for (size_t i = 0; i < positions.size(); ++i) set.samples[i] = {positions[i], result.values[i]};
  return set;
}

std::vector<SdfSample> draw_training_subset(const SdfSampleSet& set, int64_t m, uint64_t rng_seed) {
  if (m > set.total()) throw IoError("subset larger than sample set");
  RandomStream rng(rng_seed);
  auto idx = rng.sample_without_replacement(static_cast<size_t>(set.total()),
                                            static_cast<size_t>(m));
  std::vector<SdfSample> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(set.samples[i]);
  return out;
}

PointCloud make_point_cloud(const TriangleMesh& mesh, int64_t n_raw, int64_t n_final,
                            uint64_t rng_seed) {
  if (n_final > n_raw) throw IoError("n_final exceeds n_raw");
  PointCloud raw;
  raw.points = sample_surface(mesh, n_raw, rng_seed);
  return farthest_point_sample(raw, n_final, 0);
}

PointCloud make_point_cloud(const std::vector<std::vector<Vec3>>& polylines, int64_t n_raw,
                            int64_t n_final, uint64_t rng_seed) {
  if (n_final > n_raw) throw IoError("n_final exceeds n_raw");
  struct Segment {
    Vec3 a, b;
  };
  std::vector<Segment> segments;
  std::vector<double> cum;
  double total = 0.0;
  for (const auto& line : polylines) {
    for (size_t i = 0; i + 1 < line.size(); ++i) {
      double len = (line[i + 1] - line[i]).norm();
      if (len <= 0.0) continue;
      segments.push_back({line[i], line[i + 1]});
      total += len;
      cum.push_back(total);
    }
  }
  if (segments.empty() || total <= 0.0) throw IoError("empty stroke source");

  RandomStream rng(rng_seed);
  PointCloud raw;
  raw.points.reserve(static_cast<size_t>(n_raw));
  for (int64_t i = 0; i < n_raw; ++i) {
    double u = rng.uniform() * total;
    size_t s = static_cast<size_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (s >= segments.size()) s = segments.size() - 1;
    double t = rng.uniform();
    raw.points.push_back(segments[s].a + (segments[s].b - segments[s].a) * t);
  }
  return farthest_point_sample(raw, n_final, 0);
}

void save_sample_set(const SdfSampleSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_magic(out, "SFS1");
  write_pod<uint32_t>(out, static_cast<uint32_t>(set.n_surface));
  write_pod<uint32_t>(out, static_cast<uint32_t>(set.n_uniform));
  write_pod<uint32_t>(out, static_cast<uint32_t>(set.total()));
  for (const auto& s : set.samples) {
    write_pod<float>(out, static_cast<float>(s.position.x));
    write_pod<float>(out, static_cast<float>(s.position.y));
    write_pod<float>(out, static_cast<float>(s.position.z));
    write_pod<float>(out, static_cast<float>(s.value));
  }
  if (!out) throw IoError("write failed: " + path.string());
}

SdfSampleSet load_sample_set(const std::filesystem::path& path, const std::string& shape_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  expect_magic(in, "SFS1", path.string());
  SdfSampleSet set;
  set.shape_id = shape_id;
  set.n_surface = read_pod<uint32_t>(in);
  set.n_uniform = read_pod<uint32_t>(in);
  auto total = read_pod<uint32_t>(in);
  set.samples.resize(total);
  for (auto& s : set.samples) {
    s.position.x = read_pod<float>(in);
    s.position.y = read_pod<float>(in);
    s.position.z = read_pod<float>(in);
    s.value = read_pod<float>(in);
  }
  return set;
}

}  // namespace sketchflow
