// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace ringcap {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);
double dist(Vec2 a, Vec2 b);

enum class BodyKind { Disk, Ellipse, Polygon };

// Parametric convex plane set: disk, ellipse (semi-axes a >= b > 0 rotated by
// `rot`), or strictly convex counter-clockwise polygon. Default-constructs to
// the unit disk at the origin.
class ConvexBody {
 public:
  ConvexBody() = default;
  static ConvexBody disk(Vec2 center, double r);
  static ConvexBody ellipse(Vec2 center, double a, double b, double rot = 0.0);
  // Vertices must form a strictly convex CCW polygon (use convex_hull to
  // sanitize arbitrary point sets first).
  static ConvexBody polygon(std::vector<Vec2> vertices);

  BodyKind kind() const { return kind_; }
  Vec2 center() const { return center_; }
  double radius() const { return r_; }
  double semi_major() const { return a_; }
  double semi_minor() const { return b_; }
  double rotation() const { return rot_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }

  // Strictly inside by at least `margin`.
  bool contains(Vec2 z, double margin = 0.0) const;

  double area() const;
  double perimeter() const;
  Vec2 centroid() const;
  // Max / min distance from `ref` to the boundary.
  double circumradius(Vec2 ref) const;
  double inradius(Vec2 ref) const;
  // Distance along direction (cos phi, sin phi) from an interior point `ref`
  // to the boundary. Closed form for disk/ellipse, ray-edge for polygons.
  double boundary_distance(Vec2 ref, double phi) const;

  // Polygon with extra vertices inserted along each edge (identity for
  // disk/ellipse). The hull is unchanged; a denser vertex set makes the
  // discrete support-quadrature formulas applicable.
  ConvexBody densified(int points_per_edge) const;

  // Returns the body translated/rotated by z -> rot(angle) * z + shift
  // (rotation about the origin).
  ConvexBody transformed(double angle, Vec2 shift) const;
  // Body scaled by `factor` about `about`.
  ConvexBody scaled(double factor, Vec2 about) const;

 private:
  BodyKind kind_ = BodyKind::Disk;
  Vec2 center_;
  double r_ = 1.0;
  double a_ = 0.0, b_ = 0.0, rot_ = 0.0;
  std::vector<Vec2> vertices_;
};

struct SupportEval {
  double h;            // support value
  double h_prime;      // d h / d theta
  double curv_radius;  // h'' + h; 0 at polygon vertices, +inf on edges
};

// Support function of `body` about `ref` in direction theta. `ref` must be
// strictly interior.
SupportEval support_eval(const ConvexBody& body, double theta,
                         Vec2 ref = {0.0, 0.0});

// Uniform theta-grid of support values h(theta_i), theta_i = 2*pi*i/n.
struct SupportSamples {
  int n_theta = 0;
  std::vector<double> h;
  std::vector<double> h_prime;      // optional (empty if absent)
  std::vector<double> curv_radius;  // optional
};

SupportSamples sample_support(const ConvexBody& body, int n_theta,
                              Vec2 ref = {0.0, 0.0});

// Support samples of an arbitrary point cloud (used for level-curve
// polylines): h(theta_i) = max_j (p_j - ref) . (cos theta_i, sin theta_i).
SupportSamples sample_support_points(const std::vector<Vec2>& points,
                                     int n_theta, Vec2 ref);

// Area and boundary length from support samples: A = 1/2 (integral of
// h * (h'' + h)), L = integral of h, trapezoid rule on the periodic grid.
// Uses the samples' curv_radius array if present, otherwise a periodic
// second difference of h. Requires n_theta >= 8.
struct AreaLength {
  double area;
  double length;
};
AreaLength area_length_from_support(const SupportSamples& samples);

// CCW convex hull of a point set (collinear points dropped). Throws
// DomainError when fewer than 3 distinct non-collinear points remain.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

struct PolygonGeometry {
  ConvexBody hull;
  double area;
  double length;
};
// Hull + shoelace area + perimeter of the hull of `points`.
PolygonGeometry polygon_geometry(const std::vector<Vec2>& points);

// Shoelace area of a closed CCW polyline.
double polygon_area(const std::vector<Vec2>& loop);
double polyline_length_closed(const std::vector<Vec2>& loop);

// L^2 - 4*pi*A; nonnegative for convex bodies, 0 exactly for disks.
double isoperimetric_deficit(double area, double length);

// Complete elliptic integral of the second kind E(m), m = e^2, via AGM.
// Used for exact ellipse perimeters.
double elliptic_e(double m);

}  // namespace ringcap
