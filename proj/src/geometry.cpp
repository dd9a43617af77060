// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ringcap/errors.hpp"
#include "ringcap/kernels.hpp"

namespace ringcap {

namespace {
constexpr double kPi = 3.14159265358979323846;

Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}
}  // namespace

double norm(Vec2 a) { return std::hypot(a.x, a.y); }
double dist(Vec2 a, Vec2 b) { return norm(a - b); }

ConvexBody ConvexBody::disk(Vec2 center, double r) {
  if (!(r > 0.0)) throw DomainError("disk radius must be positive");
  ConvexBody b;
  b.kind_ = BodyKind::Disk;
  b.center_ = center;
  b.r_ = r;
  return b;
}

ConvexBody ConvexBody::ellipse(Vec2 center, double a, double b, double rot) {
  if (!(a >= b && b > 0.0))
    throw DomainError("ellipse semi-axes must satisfy a >= b > 0");
  ConvexBody e;
  e.kind_ = BodyKind::Ellipse;
  e.center_ = center;
  e.a_ = a;
  e.b_ = b;
  e.rot_ = rot;
  return e;
}

ConvexBody ConvexBody::polygon(std::vector<Vec2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw DomainError("polygon needs at least 3 vertices");
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
    const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (!(cross(e0, e1) > 0.0))
      throw DomainError("polygon must be strictly convex and CCW");
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - 2.0 * kPi) > 1e-9)
    throw DomainError("polygon winds more than once");
  ConvexBody p;
  p.kind_ = BodyKind::Polygon;
  p.vertices_ = std::move(vertices);
  return p;
}

bool ConvexBody::contains(Vec2 z, double margin) const {
  switch (kind_) {
    case BodyKind::Disk:
      return dist(z, center_) <= r_ - margin;
    case BodyKind::Ellipse: {
      const Vec2 w = rotate(z - center_, -rot_);
      const double q = std::hypot(w.x / a_, w.y / b_);
      // |grad q| <= 1/b, so q <= 1 - margin/b guarantees a Euclidean
      // clearance of at least `margin`.
      return q <= 1.0 - margin / b_;
    }
    case BodyKind::Polygon: {
      const std::size_t n = vertices_.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 e = vertices_[(i + 1) % n] - a;
        const Vec2 outward = {e.y, -e.x};
        const double len = norm(outward);
        if (dot(z - a, outward) / len > -margin) return false;
      }
      return true;
    }
  }
  return false;
}

double ConvexBody::area() const {
  switch (kind_) {
    case BodyKind::Disk:
      return kPi * r_ * r_;
    case BodyKind::Ellipse:
      return kPi * a_ * b_;
    case BodyKind::Polygon:
      return polygon_area(vertices_);
  }
  return 0.0;
}

double ConvexBody::perimeter() const {
  switch (kind_) {
    case BodyKind::Disk:
      return 2.0 * kPi * r_;
    case BodyKind::Ellipse: {
      const double m = 1.0 - (b_ / a_) * (b_ / a_);
      return 4.0 * a_ * elliptic_e(m);
    }
    case BodyKind::Polygon:
      return polyline_length_closed(vertices_);
  }
  return 0.0;
}

Vec2 ConvexBody::centroid() const {
  if (kind_ != BodyKind::Polygon) return center_;
  const std::size_t n = vertices_.size();
  double a2 = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = vertices_[i];
    const Vec2 q = vertices_[(i + 1) % n];
    const double w = cross(p, q);
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

double ConvexBody::circumradius(Vec2 ref) const {
  switch (kind_) {
    case BodyKind::Disk:
      return dist(ref, center_) + r_;
    case BodyKind::Ellipse: {
      double best = 0.0;
      for (int i = 0; i < 1024; ++i) {
        const double t = 2.0 * kPi * i / 1024;
        const Vec2 z = center_ + rotate({a_ * std::cos(t), b_ * std::sin(t)},
                                        rot_);
        best = std::max(best, dist(ref, z));
      }
      return best;
    }
    case BodyKind::Polygon: {
      double best = 0.0;
      for (const Vec2& v : vertices_) best = std::max(best, dist(ref, v));
      return best;
    }
  }
  return 0.0;
}

namespace {
double point_segment_distance(Vec2 z, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double t = std::clamp(dot(z - a, e) / dot(e, e), 0.0, 1.0);
  return dist(z, a + t * e);
}
}  // namespace

double ConvexBody::inradius(Vec2 ref) const {
  switch (kind_) {
    case BodyKind::Disk:
      return r_ - dist(ref, center_);
    case BodyKind::Ellipse: {
      double best = std::numeric_limits<double>::infinity();
      // Dense boundary sampling with a segment-distance correction; plenty
      // for the scaling decisions this feeds.
      Vec2 prev = center_ + rotate({a_, 0.0}, rot_);
      for (int i = 1; i <= 2048; ++i) {
        const double t = 2.0 * kPi * i / 2048;
        const Vec2 z = center_ + rotate({a_ * std::cos(t), b_ * std::sin(t)},
                                        rot_);
        best = std::min(best, point_segment_distance(ref, prev, z));
        prev = z;
      }
      return best;
    }
    case BodyKind::Polygon: {
      double best = std::numeric_limits<double>::infinity();
      const std::size_t n = vertices_.size();
      for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(ref, vertices_[i],
                                                     vertices_[(i + 1) % n]));
      return best;
    }
  }
  return 0.0;
}

double ConvexBody::boundary_distance(Vec2 ref, double phi) const {
  if (!contains(ref)) throw DomainError("reference point not inside body");
  const Vec2 d = {std::cos(phi), std::sin(phi)};
  switch (kind_) {
    case BodyKind::Disk: {
      const Vec2 u = ref - center_;
      const double ud = dot(u, d);
      const double disc = ud * ud + r_ * r_ - dot(u, u);
      return -ud + std::sqrt(std::max(disc, 0.0));
    }
    case BodyKind::Ellipse: {
      const Vec2 w0 = rotate(ref - center_, -rot_);
      const Vec2 dr = rotate(d, -rot_);
      const Vec2 w = {w0.x / a_, w0.y / b_};
      const Vec2 v = {dr.x / a_, dr.y / b_};
      const double wv = dot(w, v), vv = dot(v, v);
      const double disc = wv * wv + vv * (1.0 - dot(w, w));
      return (-wv + std::sqrt(std::max(disc, 0.0))) / vv;
    }
    case BodyKind::Polygon: {
      const std::size_t n = vertices_.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 e = vertices_[(i + 1) % n] - a;
        const double den = cross(d, e);
        if (den == 0.0) continue;
        const double t = cross(a - ref, e) / den;
        const double s = cross(a - ref, d) / den;
        if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12)
          best = std::min(best, t);
      }
      if (!std::isfinite(best))
        throw DomainError("ray does not hit polygon boundary");
      return best;
    }
  }
  return 0.0;
}

ConvexBody ConvexBody::densified(int points_per_edge) const {
  if (kind_ != BodyKind::Polygon || points_per_edge <= 1) return *this;
  std::vector<Vec2> dense;
  const std::size_t n = vertices_.size();
  dense.reserve(n * static_cast<std::size_t>(points_per_edge));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[(i + 1) % n];
    for (int k = 0; k < points_per_edge; ++k)
      dense.push_back(a + (static_cast<double>(k) / points_per_edge) *
                              (b - a));
  }
  ConvexBody p;
  p.kind_ = BodyKind::Polygon;
  p.vertices_ = std::move(dense);
  return p;
}

ConvexBody ConvexBody::transformed(double angle, Vec2 shift) const {
  ConvexBody out = *this;
  out.center_ = rotate(center_, angle) + shift;
  out.rot_ = rot_ + angle;
  for (Vec2& v : out.vertices_) v = rotate(v, angle) + shift;
  return out;
}

ConvexBody ConvexBody::scaled(double factor, Vec2 about) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  ConvexBody out = *this;
  out.center_ = about + factor * (center_ - about);
  out.r_ = r_ * factor;
  out.a_ = a_ * factor;
  out.b_ = b_ * factor;
  for (Vec2& v : out.vertices_) v = about + factor * (v - about);
  return out;
}

SupportEval support_eval(const ConvexBody& body, double theta, Vec2 ref) {
  const double size = std::sqrt(body.area());
  if (!body.contains(ref, 1e-12 * size))
    throw DomainError("support reference point must be strictly interior");
  const Vec2 nu = {std::cos(theta), std::sin(theta)};
  const Vec2 nu_perp = {-nu.y, nu.x};
  switch (body.kind()) {
    case BodyKind::Disk: {
      const Vec2 u = body.center() - ref;
      return {dot(u, nu) + body.radius(), dot(u, nu_perp), body.radius()};
    }
    case BodyKind::Ellipse: {
      const Vec2 u = body.center() - ref;
      const double a = body.semi_major(), b = body.semi_minor();
      const double phi = theta - body.rotation();
      const double cp = std::cos(phi), sp = std::sin(phi);
      const double w = std::sqrt(a * a * cp * cp + b * b * sp * sp);
      const double wp = (b * b - a * a) * sp * cp / w;
      const double rho = a * a * b * b / (w * w * w);
      return {dot(u, nu) + w, dot(u, nu_perp) + wp, rho};
    }
    case BodyKind::Polygon: {
      const auto& verts = body.vertices();
      std::size_t best = 0, second = 0;
      double hb = -std::numeric_limits<double>::infinity();
      double hs = hb;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const double d = dot(verts[i] - ref, nu);
        if (d > hb) {
          second = best;
          hs = hb;
          best = i;
          hb = d;
        } else if (d > hs) {
          second = i;
          hs = d;
        }
      }
      const Vec2 z = verts[best] - ref;
      // Two vertices supporting the same line means theta is an edge normal:
      // infinite radius of curvature there, zero at a vertex.
      const double scale = std::max(1.0, std::abs(hb));
      const bool on_edge =
          verts.size() > 1 && (hb - hs) <= 1e-12 * scale && second != best;
      const double rho =
          on_edge ? std::numeric_limits<double>::infinity() : 0.0;
      return {hb, dot(z, nu_perp), rho};
    }
  }
  return {};
}

SupportSamples sample_support(const ConvexBody& body, int n_theta, Vec2 ref) {
  SupportSamples s;
  s.n_theta = n_theta;
  s.h.resize(n_theta);
  s.h_prime.resize(n_theta);
  s.curv_radius.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    const SupportEval e = support_eval(body, 2.0 * kPi * i / n_theta, ref);
    s.h[i] = e.h;
    s.h_prime[i] = e.h_prime;
    s.curv_radius[i] = e.curv_radius;
  }
  return s;
}

SupportSamples sample_support_points(const std::vector<Vec2>& points,
                                     int n_theta, Vec2 ref) {
  if (points.empty()) throw DomainError("empty point set");
  std::vector<double> xs(points.size()), ys(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    xs[i] = points[i].x - ref.x;
    ys[i] = points[i].y - ref.y;
  }
  SupportSamples s;
  s.n_theta = n_theta;
  s.h.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    const double t = 2.0 * kPi * i / n_theta;
    s.h[i] = kernels::max_dot(xs.data(), ys.data(), points.size(),
                              std::cos(t), std::sin(t));
  }
  return s;
}

AreaLength area_length_from_support(const SupportSamples& samples) {
  const int n = samples.n_theta;
  if (n < 8) throw ResolutionError("need at least 8 support samples");
  const double dtheta = 2.0 * kPi / n;
  bool closed_form = samples.curv_radius.size() == samples.h.size();
  if (closed_form)
    for (double r : samples.curv_radius)
      if (!std::isfinite(r)) closed_form = false;

  double area2 = 0.0, length = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = samples.h[i];
    double rho;
    if (closed_form) {
      rho = samples.curv_radius[i];
    } else {
      const double hm = samples.h[(i + n - 1) % n];
      const double hp = samples.h[(i + 1) % n];
      rho = (hm - 2.0 * h + hp) / (dtheta * dtheta) + h;
    }
    area2 += h * rho;
    length += h;
  }
  return {0.5 * area2 * dtheta, length * dtheta};
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](Vec2 a, Vec2 b) {
                             return a.x == b.x && a.y == b.y;
                           }),
               points.end());
  const std::size_t n = points.size();
  if (n < 3) throw DomainError("need at least 3 distinct points");

  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 &&
           cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0)
      --k;
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0)
      --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DomainError("points are collinear");
  return hull;
}

PolygonGeometry polygon_geometry(const std::vector<Vec2>& points) {
  std::vector<Vec2> hull = convex_hull(points);
  const double area = polygon_area(hull);
  const double length = polyline_length_closed(hull);
  return {ConvexBody::polygon(std::move(hull)), area, length};
}

double polygon_area(const std::vector<Vec2>& loop) {
  double a2 = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) a2 += cross(loop[i], loop[(i + 1) % n]);
  return 0.5 * a2;
}

double polyline_length_closed(const std::vector<Vec2>& loop) {
  double len = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) len += dist(loop[i], loop[(i + 1) % n]);
  return len;
}

double isoperimetric_deficit(double area, double length) {
  if (!(area > 0.0) || !(length > 0.0))
    throw DomainError("area and length must be positive");
  return length * length - 4.0 * kPi * area;
}

double elliptic_e(double m) {
  if (m < 0.0 || m > 1.0) throw DomainError("elliptic_e expects 0 <= m <= 1");
  if (m == 1.0) return 1.0;
  double a = 1.0, b = std::sqrt(1.0 - m);
  double c = std::sqrt(m);
  double sum = 0.5 * c * c;
  double pow2 = 0.5;
  while (std::abs(c) > 1e-17) {
    c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return (kPi / (2.0 * a)) * (1.0 - sum);
}

}  // namespace ringcap
