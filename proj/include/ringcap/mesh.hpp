// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ringcap/geometry.hpp"

namespace ringcap {

// Ring between two nested convex boundaries: the closure of `inner` is the
// compact plate, `outer` the surrounding open domain. `ref` must be interior
// to `inner`; rays from it parametrize both boundaries.
struct RingDomain {
  ConvexBody inner;
  ConvexBody outer;
  Vec2 ref;

  // ref defaults to the inner body's centroid.
  RingDomain(ConvexBody inner_body, ConvexBody outer_body);
  RingDomain(ConvexBody inner_body, ConvexBody outer_body, Vec2 ref_point);
};

enum class BoundaryTag : std::uint8_t { Interior = 0, Inner = 1, Outer = 2 };

struct Triangle {
  std::int32_t v[3];
};

// Structured transfinite triangulation of a ring: n_phi angular columns,
// n_s radial layers, vertex (i, j) at index j*n_phi + i.
struct TriMesh {
  std::vector<Vec2> vertices;
  std::vector<Triangle> triangles;
  std::vector<BoundaryTag> tags;
  RingDomain domain;
  int n_phi = 0;
  int n_s = 0;
  double grading = 1.0;

  std::int32_t vertex_id(int i, int j) const {
    return static_cast<std::int32_t>(j) * n_phi + i;
  }
  double triangle_area(std::int32_t t) const;
  std::array<Vec2, 3> triangle_points(std::int32_t t) const;

  // Triangle containing z together with barycentric coordinates, or nullopt
  // if z is outside the mesh.
  struct Location {
    std::int32_t triangle;
    std::array<double, 3> bary;
  };
  std::optional<Location> locate(Vec2 z) const;
};

// Distance from `ref` along direction phi to the boundary of `body`
// (bisection-free: closed forms / ray-edge intersection).
double radial_parametrization(const ConvexBody& body, double phi, Vec2 ref);

// Build the structured mesh. Layer j sits at blend sigma_j = (j/n_s)^grading
// between the inner and outer boundary along each ray. Requires n_phi >= 8
// even and n_s >= 2; throws DomainError when the ring nesting fails.
TriMesh build_ring_mesh(const RingDomain& ring, int n_phi, int n_s,
                        double grading = 1.0);

struct MeshQuality {
  double min_angle;   // radians
  double max_aspect;  // max edge / min edge over triangles
};
MeshQuality mesh_quality(const TriMesh& mesh);

// Debug dump: CSV of vertices (id,x,y,tag) then triangles (v0,v1,v2).
void dump_mesh_csv(const TriMesh& mesh, std::ostream& os);

}  // namespace ringcap
