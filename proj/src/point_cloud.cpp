// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include "sketchflow/point_cloud.hpp"

#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include "sketchflow/common.hpp"

namespace sketchflow {

Vec3 PointCloud::centroid() const {
  Vec3 c;
  for (const auto& p : points) c += p;
  return points.empty() ? c : c / static_cast<double>(points.size());
}

Aabb PointCloud::bounds() const {
  Aabb box;
  for (const auto& p : points) box.expand(p);
  return box;
}

void save_point_cloud(const PointCloud& cloud, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_magic(out, "SFP1");
  write_pod<uint32_t>(out, static_cast<uint32_t>(cloud.points.size()));
  for (const auto& p : cloud.points) {
    write_pod<float>(out, static_cast<float>(p.x));
    write_pod<float>(out, static_cast<float>(p.y));
    write_pod<float>(out, static_cast<float>(p.z));
  }
  if (!out) throw IoError("write failed: " + path.string());
}

PointCloud load_point_cloud(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  expect_magic(in, "SFP1", path.string());
  auto n = read_pod<uint32_t>(in);
  PointCloud cloud;
  cloud.points.resize(n);
  for (auto& p : cloud.points) {
    p.x = read_pod<float>(in);
    p.y = read_pod<float>(in);
    p.z = read_pod<float>(in);
  }
  return cloud;
}

void save_point_cloud_ascii(const PointCloud& cloud, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  char buf[128];
  for (const auto& p : cloud.points) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x, p.y, p.z);
    out << buf;
  }
}

PointCloud load_point_cloud_ascii(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  PointCloud cloud;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Vec3 p;
    ls >> p.x >> p.y >> p.z;
    cloud.points.push_back(p);
  }
  return cloud;
}

std::vector<int64_t> farthest_point_sample_indices(const std::vector<Vec3>& points, int64_t k,
                                                   int64_t start_index) {
  const int64_t n = static_cast<int64_t>(points.size());
  if (k < 1 || k > n) throw IoError("insufficient points");
  if (start_index < 0 || start_index >= n) throw IoError("fps start index out of range");

  std::vector<int64_t> chosen;
  chosen.reserve(static_cast<size_t>(k));
  std::vector<double> min_d2(static_cast<size_t>(n), std::numeric_limits<double>::infinity());

  int64_t current = start_index;
  for (int64_t round = 0; round < k; ++round) {
    chosen.push_back(current);
    const Vec3& c = points[static_cast<size_t>(current)];
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
      double d2 = (points[static_cast<size_t>(i)] - c).norm2();
      if (d2 < min_d2[static_cast<size_t>(i)]) min_d2[static_cast<size_t>(i)] = d2;
    }
    // strict > keeps the lowest index on ties
    double best = -1.0;
    int64_t best_i = 0;
    for (int64_t i = 0; i < n; ++i) {
      if (min_d2[static_cast<size_t>(i)] > best) {
        best = min_d2[static_cast<size_t>(i)];
        best_i = i;
      }
    }
    current = best_i;
  }
  return chosen;
}

PointCloud farthest_point_sample(const PointCloud& cloud, int64_t k, int64_t start_index) {
  auto idx = farthest_point_sample_indices(cloud.points, k, start_index);
  PointCloud out;
  out.points.reserve(idx.size());
  for (int64_t i : idx) out.points.push_back(cloud.points[static_cast<size_t>(i)]);
  return out;
}

}  // namespace sketchflow
