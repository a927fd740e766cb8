// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "sketchflow/mesh.hpp"
#include "sketchflow/vec3.hpp"

namespace sketchflow {

// Regular scalar lattice over an axis-aligned box. Values are stored
// x-fastest. Default bounds give the unit box a 10% margin so surfaces
// touching the box boundary close properly under marching cubes.
struct Grid3 {
  std::array<int, 3> res{2, 2, 2};
  Vec3 lo{-0.55, -0.55, -0.55};
  Vec3 hi{0.55, 0.55, 0.55};
  std::vector<double> values;  // res[0]*res[1]*res[2], x-fastest

  Grid3() = default;
  Grid3(std::array<int, 3> resolution, const Vec3& lo_, const Vec3& hi_);

  int64_t node_count() const {
    return static_cast<int64_t>(res[0]) * res[1] * res[2];
  }
  int64_t index(int i, int j, int k) const {
    return static_cast<int64_t>(k) * res[1] * res[0] + static_cast<int64_t>(j) * res[0] + i;
  }
  Vec3 position(int i, int j, int k) const;
  double& at(int i, int j, int k) { return values[static_cast<size_t>(index(i, j, k))]; }
  double at(int i, int j, int k) const { return values[static_cast<size_t>(index(i, j, k))]; }

  void validate() const;
};

// Binary dump: magic SFG1, 3x u32 resolution, 6x f64 bounds, f32 values
// x-fastest.
void save_grid(const Grid3& grid, const std::filesystem::path& path);
Grid3 load_grid(const std::filesystem::path& path);

// Standard 256-case lookup with linear interpolation along cell edges.
// Shared-edge vertices are welded; degenerate triangles are dropped. A field
// entirely above or below iso yields an empty mesh. Ambiguous faces are not
// specially resolved (no asymptotic decider), which is acceptable at the
// resolutions used here.
TriangleMesh marching_cubes(const Grid3& grid, double iso = 0.0);

}  // namespace sketchflow
