// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include "sketchflow/analytic_sdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sketchflow {

SdfPrimitive SdfPrimitive::sphere(const Vec3& center, double radius) {
  SdfPrimitive p;
  p.kind = Kind::Sphere;
  p.a = center;
  p.r = radius;
  return p;
}

SdfPrimitive SdfPrimitive::box(const Vec3& center, const Vec3& half_extents) {
  SdfPrimitive p;
  p.kind = Kind::Box;
  p.a = center;
  p.half = half_extents;
  return p;
}

SdfPrimitive SdfPrimitive::cylinder(const Vec3& end_a, const Vec3& end_b, double radius) {
  SdfPrimitive p;
  p.kind = Kind::Cylinder;
  p.a = end_a;
  p.b = end_b;
  p.r = radius;
  return p;
}

static double sd_sphere(const Vec3& p, const Vec3& c, double r) { return (p - c).norm() - r; }

static double sd_box(const Vec3& p, const Vec3& c, const Vec3& h) {
  Vec3 d = p - c;
  Vec3 q{std::abs(d.x) - h.x, std::abs(d.y) - h.y, std::abs(d.z) - h.z};
  Vec3 qpos{std::max(q.x, 0.0), std::max(q.y, 0.0), std::max(q.z, 0.0)};
  return qpos.norm() + std::min(std::max({q.x, q.y, q.z}), 0.0);
}

// Exact capped cylinder between endpoints a and b.
static double sd_cylinder(const Vec3& p, const Vec3& a, const Vec3& b, double r) {
  Vec3 ba = b - a;
  Vec3 pa = p - a;
  double baba = ba.dot(ba);
  double paba = pa.dot(ba);
  double x = (pa * baba - ba * paba).norm() - r * baba;
  double y = std::abs(paba - baba * 0.5) - baba * 0.5;
  double x2 = x * x;
  double y2 = y * y * baba;
  double d;
  if (std::max(x, y) < 0.0) {
    d = -std::min(x2, y2);
  } else {
    d = (x > 0.0 ? x2 : 0.0) + (y > 0.0 ? y2 : 0.0);
  }
  double s = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
  return s * std::sqrt(std::abs(d)) / baba;
}

double SdfPrimitive::eval(const Vec3& p) const {
  switch (kind) {
    case Kind::Sphere:
      return sd_sphere(p, a, r);
    case Kind::Box:
      return sd_box(p, a, half);
    case Kind::Cylinder:
      return sd_cylinder(p, a, b, r);
  }
  return std::numeric_limits<double>::infinity();
}

Aabb SdfPrimitive::bounds() const {
  Aabb box;
  switch (kind) {
    case Kind::Sphere:
      box.expand(a - Vec3{r, r, r});
      box.expand(a + Vec3{r, r, r});
      break;
    case Kind::Box:
      box.expand(a - half);
      box.expand(a + half);
      break;
    case Kind::Cylinder: {
      // Exact AABB: per-axis cap-disc extent is r*sqrt(1 - (ba_i^2/|ba|^2)).
      Vec3 ba = b - a;
      double baba = std::max(ba.norm2(), 1e-300);
      Vec3 e{r * std::sqrt(std::max(0.0, 1.0 - ba.x * ba.x / baba)),
             r * std::sqrt(std::max(0.0, 1.0 - ba.y * ba.y / baba)),
             r * std::sqrt(std::max(0.0, 1.0 - ba.z * ba.z / baba))};
      box.expand(min(a, b) - e);
      box.expand(max(a, b) + e);
      break;
    }
  }
  return box;
}

SdfPrimitive SdfPrimitive::transformed(double scale, const Vec3& offset) const {
  SdfPrimitive out = *this;
  out.a = a * scale + offset;
  out.b = b * scale + offset;
  out.half = half * scale;
  out.r = r * scale;
  return out;
}

double AnalyticSdf::eval(const Vec3& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& prim : prims) best = std::min(best, prim.eval(p));
  return best;
}

Aabb AnalyticSdf::bounds() const {
  Aabb box;
  for (const auto& prim : prims) box.expand(prim.bounds());
  return box;
}

AnalyticSdf AnalyticSdf::transformed(double scale, const Vec3& offset) const {
  AnalyticSdf out;
  out.prims.reserve(prims.size());
  for (const auto& prim : prims) out.prims.push_back(prim.transformed(scale, offset));
  return out;
}

std::vector<double> eval_analytic_sdf(const AnalyticSdf& sdf, const std::vector<Vec3>& points) {
  std::vector<double> values(points.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < static_cast<int64_t>(points.size()); ++i)
    values[static_cast<size_t>(i)] = sdf.eval(points[static_cast<size_t>(i)]);
  return values;
}

}  // namespace sketchflow
