// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "sketchflow/vec3.hpp"

namespace sketchflow {

struct PointCloud {
  std::vector<Vec3> points;

  int64_t size() const { return static_cast<int64_t>(points.size()); }
  bool empty() const { return points.empty(); }
  Vec3 centroid() const;
  Aabb bounds() const;
};

// Binary: magic SFP1, u32 count, f32 x,y,z per point.
void save_point_cloud(const PointCloud& cloud, const std::filesystem::path& path);
PointCloud load_point_cloud(const std::filesystem::path& path);

// ASCII variant, one `x y z` line per point.
void save_point_cloud_ascii(const PointCloud& cloud, const std::filesystem::path& path);
PointCloud load_point_cloud_ascii(const std::filesystem::path& path);

// Greedy max-min selection: each chosen point maximizes the distance to the
// already-chosen set; ties break toward the lowest index. Output order is
// selection order, so a k-prefix equals the k-point result.
PointCloud farthest_point_sample(const PointCloud& points, int64_t k, int64_t start_index = 0);

// Same selection, returning indices into the input.
std::vector<int64_t> farthest_point_sample_indices(const std::vector<Vec3>& points, int64_t k,
                                                   int64_t start_index = 0);

}  // namespace sketchflow
