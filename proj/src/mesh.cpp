// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ringcap/errors.hpp"

namespace ringcap {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

RingDomain::RingDomain(ConvexBody inner_body, ConvexBody outer_body)
    : RingDomain(std::move(inner_body), std::move(outer_body), Vec2{}) {
  ref = inner.centroid();
}

RingDomain::RingDomain(ConvexBody inner_body, ConvexBody outer_body,
                       Vec2 ref_point)
    : inner(std::move(inner_body)),
      outer(std::move(outer_body)),
      ref(ref_point) {}

double radial_parametrization(const ConvexBody& body, double phi, Vec2 ref) {
  return body.boundary_distance(ref, phi);
}

double TriMesh::triangle_area(std::int32_t t) const {
  const auto p = triangle_points(t);
  return 0.5 * cross(p[1] - p[0], p[2] - p[0]);
}

std::array<Vec2, 3> TriMesh::triangle_points(std::int32_t t) const {
  const Triangle& tri = triangles[t];
  return {vertices[tri.v[0]], vertices[tri.v[1]], vertices[tri.v[2]]};
}

std::optional<TriMesh::Location> TriMesh::locate(Vec2 z) const {
  // Structured guess: angular column from atan2, radial layer from the blend
  // fraction, then a local barycentric search with a full-scan fallback.
  const Vec2 d = z - domain.ref;
  double phi = std::atan2(d.y, d.x);
  if (phi < 0.0) phi += 2.0 * kPi;
  const int col = std::clamp(
      static_cast<int>(phi / (2.0 * kPi) * n_phi), 0, n_phi - 1);
  const double r_in = domain.inner.boundary_distance(domain.ref, phi);
  const double r_out = domain.outer.boundary_distance(domain.ref, phi);
  const double sigma =
      std::clamp((norm(d) - r_in) / std::max(r_out - r_in, 1e-300), 0.0, 1.0);
  const int layer = std::clamp(
      static_cast<int>(std::pow(sigma, 1.0 / grading) * n_s), 0, n_s - 1);

  auto test = [&](std::int32_t t) -> std::optional<Location> {
    const auto p = triangle_points(t);
    const double a2 = cross(p[1] - p[0], p[2] - p[0]);
    const double l0 = cross(p[1] - z, p[2] - z) / a2;
    const double l1 = cross(p[2] - z, p[0] - z) / a2;
    const double l2 = cross(p[0] - z, p[1] - z) / a2;
    const double eps = -1e-12;
    if (l0 >= eps && l1 >= eps && l2 >= eps)
      return Location{t, {l0, l1, l2}};
    return std::nullopt;
  };

  for (int dj = -2; dj <= 2; ++dj) {
    const int j = layer + dj;
    if (j < 0 || j >= n_s) continue;
    for (int di = -2; di <= 2; ++di) {
      const int i = ((col + di) % n_phi + n_phi) % n_phi;
      const std::int32_t base = 2 * (j * n_phi + i);
      if (auto loc = test(base)) return loc;
      if (auto loc = test(base + 1)) return loc;
    }
  }
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(triangles.size());
       ++t)
    if (auto loc = test(t)) return loc;
  return std::nullopt;
}

TriMesh build_ring_mesh(const RingDomain& ring, int n_phi, int n_s,
                        double grading) {
  if (n_phi < 8 || n_phi % 2 != 0)
    throw DomainError("n_phi must be even and >= 8");
  if (n_s < 2) throw DomainError("n_s must be >= 2");
  if (!(grading > 0.0)) throw DomainError("grading must be positive");
  const double size = std::sqrt(ring.inner.area());
  if (!ring.inner.contains(ring.ref, 1e-12 * size))
    throw DomainError("reference point must be strictly inside the inner body");

  // Nesting check: inner boundary samples must be strictly inside the outer
  // body with a positive margin.
  const double outer_size = std::sqrt(ring.outer.area());
  for (int i = 0; i < 4 * n_phi; ++i) {
    const double phi = 2.0 * kPi * i / (4 * n_phi);
    const double ri = ring.inner.boundary_distance(ring.ref, phi);
    const Vec2 z = ring.ref + ri * Vec2{std::cos(phi), std::sin(phi)};
    if (!ring.outer.contains(z, 1e-9 * outer_size))
      throw DomainError("inner body is not strictly inside the outer body");
  }

  TriMesh mesh{{}, {}, {}, ring, n_phi, n_s, grading};
  mesh.vertices.resize(static_cast<std::size_t>(n_phi) * (n_s + 1));
  mesh.tags.assign(mesh.vertices.size(), BoundaryTag::Interior);

  for (int i = 0; i < n_phi; ++i) {
    const double phi = 2.0 * kPi * i / n_phi;
    const Vec2 dir = {std::cos(phi), std::sin(phi)};
    const double r_in = ring.inner.boundary_distance(ring.ref, phi);
    const double r_out = ring.outer.boundary_distance(ring.ref, phi);
    if (!(r_out > r_in)) throw DomainError("ring has zero width along a ray");
    for (int j = 0; j <= n_s; ++j) {
      const double sigma = std::pow(static_cast<double>(j) / n_s, grading);
      const double r = (1.0 - sigma) * r_in + sigma * r_out;
      mesh.vertices[mesh.vertex_id(i, j)] = ring.ref + r * dir;
      if (j == 0) mesh.tags[mesh.vertex_id(i, j)] = BoundaryTag::Inner;
      if (j == n_s) mesh.tags[mesh.vertex_id(i, j)] = BoundaryTag::Outer;
    }
  }

  mesh.triangles.reserve(static_cast<std::size_t>(2) * n_phi * n_s);
  for (int j = 0; j < n_s; ++j) {
    for (int i = 0; i < n_phi; ++i) {
      const int ip = (i + 1) % n_phi;
      const std::int32_t a = mesh.vertex_id(i, j);
      const std::int32_t b = mesh.vertex_id(ip, j);
      const std::int32_t c = mesh.vertex_id(ip, j + 1);
      const std::int32_t d = mesh.vertex_id(i, j + 1);
      // CCW in the plane: the (phi, r) frame is negatively oriented.
      mesh.triangles.push_back({{a, c, b}});
      mesh.triangles.push_back({{a, d, c}});
    }
  }

  for (std::int32_t t = 0; t < static_cast<std::int32_t>(mesh.triangles.size());
       ++t)
    if (!(mesh.triangle_area(t) > 0.0))
      throw DomainError("mesh construction produced an inverted triangle");
  return mesh;
}

MeshQuality mesh_quality(const TriMesh& mesh) {
  double min_angle = kPi;
  double max_aspect = 0.0;
  for (std::int32_t t = 0; t < static_cast<std::int32_t>(mesh.triangles.size());
       ++t) {
    const auto p = mesh.triangle_points(t);
    double emin = 1e300, emax = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Vec2 u = p[(k + 1) % 3] - p[k];
      const Vec2 v = p[(k + 2) % 3] - p[k];
      const double nu = norm(u), nv = norm(v);
      emin = std::min(emin, nu);
      emax = std::max(emax, nu);
      if (nu == 0.0 || nv == 0.0) {
        min_angle = 0.0;
        continue;
      }
      const double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
      min_angle = std::min(min_angle, std::acos(c));
    }
    if (mesh.triangle_area(t) <= 0.0) min_angle = 0.0;
    max_aspect = std::max(max_aspect, emin > 0.0 ? emax / emin : 1e300);
  }
  return {min_angle, max_aspect};
}

void dump_mesh_csv(const TriMesh& mesh, std::ostream& os) {
  os << "id,x,y,tag\n";
  const char* names[] = {"INTERIOR", "INNER", "OUTER"};
  char buf[128];
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%s\n", i,
                  mesh.vertices[i].x, mesh.vertices[i].y,
                  names[static_cast<int>(mesh.tags[i])]);
    os << buf;
  }
  os << "v0,v1,v2\n";
  for (const Triangle& t : mesh.triangles) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d\n", t.v[0], t.v[1], t.v[2]);
    os << buf;
  }
}

}  // namespace ringcap
