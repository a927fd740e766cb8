// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sketchflow/vec3.hpp"

namespace sketchflow {

// Exact signed distance primitives, negative inside / positive outside.
struct SdfPrimitive {
  enum class Kind { Sphere, Box, Cylinder };

  Kind kind = Kind::Sphere;
  Vec3 a;        // sphere/box center, cylinder endpoint A
  Vec3 b;        // cylinder endpoint B
  Vec3 half;     // box half-extents
  double r = 0;  // sphere/cylinder radius

  static SdfPrimitive sphere(const Vec3& center, double radius);
  static SdfPrimitive box(const Vec3& center, const Vec3& half_extents);
  static SdfPrimitive cylinder(const Vec3& end_a, const Vec3& end_b, double radius);

  double eval(const Vec3& p) const;
  Aabb bounds() const;

  // Similarity transform p -> p*scale + offset applied to the primitive
  // itself; exactness of the SDF is preserved (distances scale by `scale`).
  SdfPrimitive transformed(double scale, const Vec3& offset) const;
};

// Union (pointwise min) of primitives. Inside overlap regions the min is a
// lower bound on the true distance, not the exact value; the zero level set
// is exact everywhere, which is what surface extraction and the sketch
// losses depend on.
struct AnalyticSdf {
  std::vector<SdfPrimitive> prims;

  double eval(const Vec3& p) const;
  Aabb bounds() const;
  AnalyticSdf transformed(double scale, const Vec3& offset) const;
};

// Batch evaluation, parallel over points.
std::vector<double> eval_analytic_sdf(const AnalyticSdf& sdf, const std::vector<Vec3>& points);

}  // namespace sketchflow
