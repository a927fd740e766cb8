// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "sketchflow/rng.hpp"
#include "sketchflow/vec3.hpp"

namespace sketchflow {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;

  bool empty() const { return triangles.empty(); }
  double triangle_area(int t) const;
  double surface_area() const;
  Aabb bounds() const;

  // Index ranges, finite coordinates, non-degenerate triangles (area > 1e-12).
  void validate() const;

  // Closed-surface check: every undirected edge shared by exactly two
  // triangles.
  bool watertight() const;
};

// ASCII OBJ, `v x y z` / `f i j k` with 1-based indices. Coordinates are
// written with round-trip precision so exports hash deterministically.
void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path);
TriangleMesh load_obj(const std::filesystem::path& path);

// n points drawn area-weighted over triangles, uniform within each triangle.
// Deterministic for a fixed seed. Throws on an empty mesh.
std::vector<Vec3> sample_surface(const TriangleMesh& mesh, int64_t n, uint64_t rng_seed);

struct MeshSdfResult {
  std::vector<double> values;
  bool watertight = true;  // sign is unreliable when false
};

// Unsigned distance is the exact point-to-triangle minimum; the sign comes
// from ray-crossing parity, majority over 3 fixed ray directions. Assumes a
// closed surface; a non-watertight input is flagged, not rejected.
MeshSdfResult mesh_sdf(const TriangleMesh& mesh, const std::vector<Vec3>& points);

// Simple icosphere, test fixture quality.
TriangleMesh make_icosphere(double radius, int subdivisions);

}  // namespace sketchflow
