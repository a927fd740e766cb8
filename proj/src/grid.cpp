// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include "sketchflow/grid.hpp"

#include <cmath>

#include "sketchflow/common.hpp"

namespace sketchflow {

Grid3::Grid3(std::array<int, 3> resolution, const Vec3& lo_, const Vec3& hi_)
    : res(resolution), lo(lo_), hi(hi_) {
  if (res[0] < 2 || res[1] < 2 || res[2] < 2) throw IoError("grid resolution must be >= 2 per axis");
  values.assign(static_cast<size_t>(node_count()), 0.0);
}

Vec3 Grid3::position(int i, int j, int k) const {
  Vec3 e = hi - lo;
  return {lo.x + e.x * (static_cast<double>(i) / (res[0] - 1)),
          lo.y + e.y * (static_cast<double>(j) / (res[1] - 1)),
          lo.z + e.z * (static_cast<double>(k) / (res[2] - 1))};
}

void Grid3::validate() const {
  if (res[0] < 2 || res[1] < 2 || res[2] < 2) throw IoError("grid resolution must be >= 2 per axis");
  if (static_cast<int64_t>(values.size()) != node_count()) throw IoError("grid value count mismatch");
  for (double v : values)
    if (!std::isfinite(v)) throw IoError("grid contains non-finite value");
}

void save_grid(const Grid3& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_magic(out, "SFG1");
  for (int axis = 0; axis < 3; ++axis) write_pod<uint32_t>(out, static_cast<uint32_t>(grid.res[axis]));
  write_pod<double>(out, grid.lo.x);
  write_pod<double>(out, grid.lo.y);
  write_pod<double>(out, grid.lo.z);
  write_pod<double>(out, grid.hi.x);
  write_pod<double>(out, grid.hi.y);
  write_pod<double>(out, grid.hi.z);
  for (double v : grid.values) write_pod<float>(out, static_cast<float>(v));
  if (!out) throw IoError("write failed: " + path.string());
}

Grid3 load_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  expect_magic(in, "SFG1", path.string());
  Grid3 grid;
  for (int axis = 0; axis < 3; ++axis) grid.res[axis] = static_cast<int>(read_pod<uint32_t>(in));
  grid.lo.x = read_pod<double>(in);
  grid.lo.y = read_pod<double>(in);
  grid.lo.z = read_pod<double>(in);
  grid.hi.x = read_pod<double>(in);
  grid.hi.y = read_pod<double>(in);
  grid.hi.z = read_pod<double>(in);
  grid.values.resize(static_cast<size_t>(grid.node_count()));
  for (auto& v : grid.values) v = static_cast<double>(read_pod<float>(in));
  grid.validate();
  return grid;
}

}  // namespace sketchflow
