// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>

#include "sketchflow/mesh.hpp"

namespace sketchflow {

// Closest point on triangle abc to p (Voronoi-region walk).
static Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 ab = b - a, ac = c - a, ap = p - a;
  double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  Vec3 bp = p - b;
  double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    double v = d1 / (d1 - d3);
    return a + ab * v;
  }

  Vec3 cp = p - c;
  double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    double w = d2 / (d2 - d6);
    return a + ac * w;
  }

  double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return b + (c - b) * w;
  }

  double denom = 1.0 / (va + vb + vc);
  double v = vb * denom, w = vc * denom;
  return a + ab * v + ac * w;
}

// Moller-Trumbore; returns true with t > eps for a forward hit.
static bool ray_hits_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                              const Vec3& c) {
  constexpr double kEps = 1e-12;
  Vec3 e1 = b - a, e2 = c - a;
  Vec3 h = dir.cross(e2);
  double det = e1.dot(h);
  if (std::abs(det) < kEps) return false;
  double inv = 1.0 / det;
  Vec3 s = origin - a;
  double u = s.dot(h) * inv;
  if (u < 0.0 || u > 1.0) return false;
  Vec3 q = s.cross(e1);
  double v = dir.dot(q) * inv;
  if (v < 0.0 || u + v > 1.0) return false;
  double t = e2.dot(q) * inv;
  return t > kEps;
}

MeshSdfResult mesh_sdf(const TriangleMesh& mesh, const std::vector<Vec3>& points) {
  MeshSdfResult result;
  result.watertight = mesh.watertight();
  result.values.resize(points.size());

  // Fixed irrational-ish directions so grazing edge hits cannot fool all
  // three parity votes at once.
  const Vec3 dirs[3] = {Vec3{0.5320886651214669, 0.6783458045867588, 0.5066290543051191},
                        Vec3{-0.7419758751907425, 0.2826231876352204, 0.6079284369379885},
                        Vec3{0.1133893967347034, -0.8342451016168087, 0.5396366771456034}};

#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < static_cast<int64_t>(points.size()); ++i) {
    const Vec3& p = points[static_cast<size_t>(i)];
    double best_sq = std::numeric_limits<double>::infinity();
    int crossings[3] = {0, 0, 0};
    for (const auto& tri : mesh.triangles) {
      const Vec3& a = mesh.vertices[static_cast<size_t>(tri[0])];
      const Vec3& b = mesh.vertices[static_cast<size_t>(tri[1])];
      const Vec3& c = mesh.vertices[static_cast<size_t>(tri[2])];
      Vec3 q = closest_point_on_triangle(p, a, b, c);
      best_sq = std::min(best_sq, (p - q).norm2());
      for (int d = 0; d < 3; ++d)
        if (ray_hits_triangle(p, dirs[d], a, b, c)) crossings[d]++;
    }
    int inside_votes = (crossings[0] & 1) + (crossings[1] & 1) + (crossings[2] & 1);
    double sign = inside_votes >= 2 ? -1.0 : 1.0;
    result.values[static_cast<size_t>(i)] = sign * std::sqrt(best_sq);
  }
  return result;
}

}  // namespace sketchflow
