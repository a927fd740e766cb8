// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include "sketchflow/mesh.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "sketchflow/common.hpp"

namespace sketchflow {

double TriangleMesh::triangle_area(int t) const {
  const auto& tri = triangles[static_cast<size_t>(t)];
  Vec3 e1 = vertices[static_cast<size_t>(tri[1])] - vertices[static_cast<size_t>(tri[0])];
  Vec3 e2 = vertices[static_cast<size_t>(tri[2])] - vertices[static_cast<size_t>(tri[0])];
  return 0.5 * e1.cross(e2).norm();
}

double TriangleMesh::surface_area() const {
  double area = 0.0;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) area += triangle_area(t);
  return area;
}

Aabb TriangleMesh::bounds() const {
  Aabb box;
  for (const auto& v : vertices) box.expand(v);
  return box;
}

void TriangleMesh::validate() const {
  const int nv = static_cast<int>(vertices.size());
  for (const auto& v : vertices)
    if (!v.finite()) throw IoError("mesh vertex not finite");
  for (size_t t = 0; t < triangles.size(); ++t) {
    for (int k = 0; k < 3; ++k)
      if (triangles[t][k] < 0 || triangles[t][k] >= nv)
        throw IoError("triangle index out of range");
    if (triangle_area(static_cast<int>(t)) <= 1e-12) throw IoError("degenerate triangle");
  }
}

bool TriangleMesh::watertight() const {
  std::map<std::pair<int, int>, int> edge_use;
  for (const auto& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      int a = tri[k], b = tri[(k + 1) % 3];
      edge_use[{std::min(a, b), std::max(a, b)}]++;
    }
  }
  for (const auto& [edge, uses] : edge_use)
    if (uses != 2) return false;
  return !triangles.empty();
}

void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

TriangleMesh load_obj(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  TriangleMesh mesh;
  std::string line;
  while (std::getline(in, line)) {
    if (line.size() < 2) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 v;
      ls >> v.x >> v.y >> v.z;
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> t{};
      std::string tok;
      for (int k = 0; k < 3; ++k) {
        ls >> tok;
        t[static_cast<size_t>(k)] = std::stoi(tok.substr(0, tok.find('/'))) - 1;
      }
      mesh.triangles.push_back(t);
    }
  }
  return mesh;
}

std::vector<Vec3> sample_surface(const TriangleMesh& mesh, int64_t n, uint64_t rng_seed) {
  if (mesh.empty()) throw IoError("no surface");
  std::vector<double> cum(mesh.triangles.size());
  double total = 0.0;
  for (size_t t = 0; t < mesh.triangles.size(); ++t) {
    total += mesh.triangle_area(static_cast<int>(t));
    cum[t] = total;
  }
  if (total <= 0.0) throw IoError("no surface");

  RandomStream rng(rng_seed);
  std::vector<Vec3> points;
  points.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    double u = rng.uniform() * total;
    size_t t = static_cast<size_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (t >= cum.size()) t = cum.size() - 1;
    const auto& tri = mesh.triangles[t];
    const Vec3& a = mesh.vertices[static_cast<size_t>(tri[0])];
    const Vec3& b = mesh.vertices[static_cast<size_t>(tri[1])];
    const Vec3& c = mesh.vertices[static_cast<size_t>(tri[2])];
    // sqrt trick gives uniform density over the triangle
    double su = std::sqrt(rng.uniform());
    double v = rng.uniform();
    points.push_back(a * (1.0 - su) + b * (su * (1.0 - v)) + c * (su * v));
  }
  return points;
}

TriangleMesh make_icosphere(double radius, int subdivisions) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {{-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (auto& v : verts) v = v.normalized();

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 m = ((verts[static_cast<size_t>(a)] + verts[static_cast<size_t>(b)]) * 0.5).normalized();
      verts.push_back(m);
      int idx = static_cast<int>(verts.size()) - 1;
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  TriangleMesh mesh;
  mesh.vertices.reserve(verts.size());
  for (const auto& v : verts) mesh.vertices.push_back(v * radius);
  mesh.triangles = std::move(faces);
  return mesh;
}

}  // namespace sketchflow
