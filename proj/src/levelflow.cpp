// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/levelflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "ringcap/errors.hpp"
#include "ringcap/parallel.hpp"

namespace ringcap {

namespace {

using EdgeKey = std::pair<std::int32_t, std::int32_t>;

EdgeKey edge_key(std::int32_t a, std::int32_t b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

Vec2 edge_crossing(const TriMesh& mesh, const std::vector<double>& u,
                   std::int32_t a, std::int32_t b, double t) {
  // Evaluate in a fixed vertex order so shared edges produce identical points.
  if (a > b) std::swap(a, b);
  const double s = (t - u[a]) / (u[b] - u[a]);
  return mesh.vertices[a] + s * (mesh.vertices[b] - mesh.vertices[a]);
}

}  // namespace

std::vector<LevelSegment> level_segments(const TriMesh& mesh,
                                         const ScalarField& field, double t) {
  const std::vector<double>& u = field.values;
  std::vector<LevelSegment> segs;
  for (std::int32_t tri = 0;
       tri < static_cast<std::int32_t>(mesh.triangles.size()); ++tri) {
    const Triangle& tr = mesh.triangles[tri];
    int above = 0;
    for (int k = 0; k < 3; ++k) above += u[tr.v[k]] >= t ? 1 : 0;
    if (above == 0 || above == 3) continue;
    // The lone vertex on its own side determines the two crossed edges.
    int lone = -1;
    const bool lone_above = above == 1;
    for (int k = 0; k < 3; ++k)
      if ((u[tr.v[k]] >= t) == lone_above) lone = k;
    const std::int32_t vl = tr.v[lone];
    const std::int32_t v1 = tr.v[(lone + 1) % 3];
    const std::int32_t v2 = tr.v[(lone + 2) % 3];
    segs.push_back({edge_crossing(mesh, u, vl, v1, t),
                    edge_crossing(mesh, u, vl, v2, t), tri});
  }
  return segs;
}

double level_flux(const TriMesh& mesh, const ScalarField& field, double p,
                  double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("level must lie in (0, 1)");
  const auto segs = level_segments(mesh, field, t);
  if (segs.empty()) throw TopologyError("level set is empty");
  const auto grads = triangle_gradients(mesh, field.values);
  double flux = 0.0;
  for (const LevelSegment& s : segs)
    flux += std::pow(norm(grads[s.triangle]), p - 1.0) * dist(s.a, s.b);
  return flux;
}

namespace {

// Chain marching segments into one closed loop via the crossed-edge keys.
std::vector<Vec2> chain_segments(const TriMesh& mesh,
                                 const std::vector<double>& u, double t,
                                 const std::vector<LevelSegment>& segs) {
  // Recover each segment's two edge keys by re-classifying its triangle.
  struct Ends {
    EdgeKey e0, e1;
  };
  std::vector<Ends> ends(segs.size());
  std::map<EdgeKey, std::vector<std::int32_t>> incidence;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Triangle& tr = mesh.triangles[segs[i].triangle];
    int lone = -1;
    int above = 0;
    for (int k = 0; k < 3; ++k) above += u[tr.v[k]] >= t ? 1 : 0;
    const bool lone_above = above == 1;
    for (int k = 0; k < 3; ++k)
      if ((u[tr.v[k]] >= t) == lone_above) lone = k;
    ends[i].e0 = edge_key(tr.v[lone], tr.v[(lone + 1) % 3]);
    ends[i].e1 = edge_key(tr.v[lone], tr.v[(lone + 2) % 3]);
    incidence[ends[i].e0].push_back(static_cast<std::int32_t>(i));
    incidence[ends[i].e1].push_back(static_cast<std::int32_t>(i));
  }
  for (const auto& [key, owners] : incidence)
    if (owners.size() != 2)
      throw TopologyError("level curve is not closed (boundary crossing)");

  std::vector<bool> used(segs.size(), false);
  std::vector<Vec2> loop;
  loop.reserve(segs.size());
  std::int32_t current = 0;
  EdgeKey entry = ends[0].e0;
  for (std::size_t step = 0; step < segs.size(); ++step) {
    used[current] = true;
    const bool entered_at_e0 = entry == ends[current].e0;
    loop.push_back(entered_at_e0 ? segs[current].a : segs[current].b);
    const EdgeKey exit = entered_at_e0 ? ends[current].e1 : ends[current].e0;
    const auto& owners = incidence[exit];
    const std::int32_t next = owners[0] == current ? owners[1] : owners[0];
    if (used[next]) {
      if (step + 1 != segs.size())
        throw TopologyError("level set splits into multiple loops");
      break;
    }
    entry = exit;
    current = next;
  }
  // Drop zero-length duplicates from crossings that hit mesh vertices.
  std::vector<Vec2> clean;
  clean.reserve(loop.size());
  for (const Vec2& z : loop)
    if (clean.empty() || dist(clean.back(), z) > 0.0) clean.push_back(z);
  while (clean.size() > 1 && dist(clean.front(), clean.back()) == 0.0)
    clean.pop_back();
  if (clean.size() < 3) throw TopologyError("degenerate level curve");
  return clean;
}

double distance_to_polygon_boundary(const std::vector<Vec2>& poly, Vec2 z) {
  double best = 1e300;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 e = poly[(i + 1) % n] - a;
    const double s = std::clamp(dot(z - a, e) / dot(e, e), 0.0, 1.0);
    best = std::min(best, dist(z, a + s * e));
  }
  return best;
}

}  // namespace

LevelCurve extract_level(const TriMesh& mesh, const ScalarField& field,
                         double t, int n_theta_support) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("level must lie in (0, 1)");
  const auto segs = level_segments(mesh, field, t);
  if (segs.empty()) throw TopologyError("level set is empty");
  std::vector<Vec2> loop = chain_segments(mesh, field.values, t, segs);
  if (polygon_area(loop) < 0.0) std::reverse(loop.begin(), loop.end());

  std::vector<Vec2> hull = convex_hull(loop);
  double diameter = 0.0;
  for (const Vec2& z : hull)
    diameter = std::max(diameter, dist(z, hull.front()));
  double deviation = 0.0;
  if (hull.size() != loop.size())
    for (const Vec2& z : loop)
      deviation = std::max(deviation, distance_to_polygon_boundary(hull, z));

  LevelCurve curve;
  curve.t = t;
  curve.convex_hulled = deviation > 1e-9 * diameter;
  curve.area = polygon_area(hull);
  curve.length = polyline_length_closed(hull);
  curve.support =
      sample_support_points(hull, n_theta_support, mesh.domain.ref);
  curve.polyline = std::move(hull);
  return curve;
}

LevelProfile sweep_levels(const TriMesh& mesh, const ScalarField& field,
                          int n_t) {
  if (n_t < 9) throw ResolutionError("need at least 9 levels");
  LevelProfile prof;
  prof.t.resize(n_t + 2);
  prof.A.resize(n_t + 2);
  prof.L.resize(n_t + 2);
  prof.t[0] = 0.0;
  prof.A[0] = mesh.domain.outer.area();
  prof.L[0] = mesh.domain.outer.perimeter();
  prof.t[n_t + 1] = 1.0;
  prof.A[n_t + 1] = mesh.domain.inner.area();
  prof.L[n_t + 1] = mesh.domain.inner.perimeter();
  parallel_for(n_t, [&](std::size_t k) {
    const double t = static_cast<double>(k + 1) / (n_t + 1);
    const LevelCurve curve = extract_level(mesh, field, t);
    prof.t[k + 1] = t;
    prof.A[k + 1] = curve.area;
    prof.L[k + 1] = curve.length;
  });
  return prof;
}

namespace {

void check_uniform(const std::vector<double>& t) {
  const double h = t[1] - t[0];
  for (std::size_t i = 1; i + 1 < t.size(); ++i)
    if (std::abs(t[i + 1] - t[i] - h) > 1e-9 * h)
      throw DomainError("derivative estimation needs a uniform t-grid");
}

std::vector<double> fd1(const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  std::vector<double> d(n);
  d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
  return d;
}

std::vector<double> fd2(const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  const double h2 = h * h;
  std::vector<double> d(n);
  d[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / h2;
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h2;
  d[n - 1] = (2.0 * y[n - 1] - 5.0 * y[n - 2] + 4.0 * y[n - 3] - y[n - 4]) / h2;
  return d;
}

std::vector<double> fd3(const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  const double h3 = 2.0 * h * h * h;
  std::vector<double> d(n);
  d[0] = (-5.0 * y[0] + 18.0 * y[1] - 24.0 * y[2] + 14.0 * y[3] - 3.0 * y[4]) /
         h3;
  d[1] = (-3.0 * y[0] + 10.0 * y[1] - 12.0 * y[2] + 6.0 * y[3] - y[4]) / h3;
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (-y[i - 2] + 2.0 * y[i - 1] - 2.0 * y[i + 1] + y[i + 2]) / h3;
  d[n - 2] = (3.0 * y[n - 1] - 10.0 * y[n - 2] + 12.0 * y[n - 3] -
              6.0 * y[n - 4] + y[n - 5]) /
             h3;
  d[n - 1] = (5.0 * y[n - 1] - 18.0 * y[n - 2] + 24.0 * y[n - 3] -
              14.0 * y[n - 4] + 3.0 * y[n - 5]) /
             h3;
  return d;
}

// Dense LU with partial pivoting; the smoothing-spline systems are tiny.
struct Lu {
  std::vector<double> a;
  std::vector<int> piv;
  int n;

  explicit Lu(std::vector<double> m, int size) : a(std::move(m)), piv(size), n(size) {
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int k = 0; k < n; ++k) {
      int best = k;
      for (int i = k + 1; i < n; ++i)
        if (std::abs(a[i * n + k]) > std::abs(a[best * n + k])) best = i;
      if (best != k) {
        for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[best * n + j]);
        std::swap(piv[k], piv[best]);
      }
      const double d = a[k * n + k];
      for (int i = k + 1; i < n; ++i) {
        const double f = a[i * n + k] / d;
        a[i * n + k] = f;
        for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      }
    }
  }

  std::vector<double> solve(const std::vector<double>& rhs) const {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[piv[i]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= a[i * n + j] * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= a[i * n + j] * x[j];
      x[i] /= a[i * n + i];
    }
    return x;
  }
};

// One smoothing-spline solve at fixed lambda. gamma holds the spline's second
// derivatives at the interior nodes; fitted = y - lambda * Q * gamma.
struct SplineSolve {
  std::vector<double> fitted;
  std::vector<double> gamma_full;  // second derivatives, natural ends = 0
  double gcv;
};

SplineSolve spline_solve(const std::vector<double>& y, double h,
                         double lambda) {
  const int n = static_cast<int>(y.size());
  const int m = n - 2;
  // Qt y (m entries): second differences / h.
  auto qt_apply = [&](const std::vector<double>& v) {
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i)
      out[i] = (v[i] - 2.0 * v[i + 1] + v[i + 2]) / h;
    return out;
  };
  // Build M = R + lambda Qt Q (dense m x m).
  std::vector<double> M(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [&](int i, int j) -> double& { return M[i * m + j]; };
  for (int i = 0; i < m; ++i) {
    at(i, i) = 2.0 * h / 3.0 + lambda * 6.0 / (h * h);
    if (i + 1 < m) {
      at(i, i + 1) = h / 6.0 - lambda * 4.0 / (h * h);
      at(i + 1, i) = at(i, i + 1);
    }
    if (i + 2 < m) {
      at(i, i + 2) = lambda * 1.0 / (h * h);
      at(i + 2, i) = at(i, i + 2);
    }
  }
  const Lu lu(std::move(M), m);
  const std::vector<double> gamma = lu.solve(qt_apply(y));

  std::vector<double> fitted = y;
  auto q_scatter = [&](const std::vector<double>& g, std::vector<double>& out,
                       double scale) {
    for (int i = 0; i < m; ++i) {
      out[i] += scale * g[i] / h;
      out[i + 1] -= scale * 2.0 * g[i] / h;
      out[i + 2] += scale * g[i] / h;
    }
  };
  q_scatter(gamma, fitted, -lambda);

  // GCV: trace of the smoother via unit-vector solves on the factored system.
  double trace = 0.0;
  std::vector<double> e(n, 0.0);
  for (int i = 0; i < n; ++i) {
    e[i] = 1.0;
    std::vector<double> g = lu.solve(qt_apply(e));
    std::vector<double> col(n, 0.0);
    col[i] = 1.0;
    q_scatter(g, col, -lambda);
    trace += col[i];
    e[i] = 0.0;
  }
  double rss = 0.0;
  for (int i = 0; i < n; ++i) rss += (y[i] - fitted[i]) * (y[i] - fitted[i]);
  // Near-interpolating fits (residual degrees of freedom ~ 0) make the GCV
  // score meaningless; rule them out of the selection.
  const double dof = n - trace;
  const double gcv =
      dof < 0.5 ? std::numeric_limits<double>::infinity()
                : n * rss / (dof * dof);

  SplineSolve out;
  out.fitted = std::move(fitted);
  out.gamma_full.assign(n, 0.0);
  for (int i = 0; i < m; ++i) out.gamma_full[i + 1] = gamma[i];
  out.gcv = gcv;
  return out;
}

}  // namespace

SplineFit smoothing_spline(const std::vector<double>& t,
                           const std::vector<double>& y, double lambda) {
  if (t.size() != y.size() || t.size() < 5)
    throw ResolutionError("smoothing spline needs at least 5 points");
  check_uniform(t);
  const double h = t[1] - t[0];

  double chosen = lambda;
  if (lambda < 0.0) {
    const double base = h * h * h;
    double best_gcv = 1e300;
    std::vector<std::pair<double, double>> scan;
    for (int k = -10; k <= 6; ++k) {
      const double lam = base * std::pow(10.0, k);
      const double gcv = spline_solve(y, h, lam).gcv;
      scan.emplace_back(lam, gcv);
      best_gcv = std::min(best_gcv, gcv);
    }
    // Prefer the smoothest fit within 5% of the GCV optimum.
    chosen = scan.front().first;
    for (const auto& [lam, gcv] : scan)
      if (gcv <= 1.05 * best_gcv) chosen = lam;
  }

  const SplineSolve sol = spline_solve(y, h, chosen);
  const int n = static_cast<int>(y.size());
  SplineFit fit;
  fit.lambda = chosen;
  fit.value = sol.fitted;
  fit.d2 = sol.gamma_full;
  fit.d1.resize(n);
  fit.d3.resize(n);
  const auto& f = sol.fitted;
  const auto& g = sol.gamma_full;
  for (int i = 0; i + 1 < n; ++i)
    fit.d1[i] = (f[i + 1] - f[i]) / h - h * (2.0 * g[i] + g[i + 1]) / 6.0;
  fit.d1[n - 1] =
      (f[n - 1] - f[n - 2]) / h + h * (g[n - 2] + 2.0 * g[n - 1]) / 6.0;
  // Piecewise-constant third derivative, averaged at interior nodes.
  fit.d3[0] = (g[1] - g[0]) / h;
  for (int i = 1; i + 1 < n; ++i) fit.d3[i] = (g[i + 1] - g[i - 1]) / (2.0 * h);
  fit.d3[n - 1] = (g[n - 1] - g[n - 2]) / h;
  return fit;
}

LevelProfile profile_derivatives(LevelProfile profile,
                                 DerivativeMethod method) {
  if (profile.t.size() < 9)
    throw ResolutionError("need at least 9 levels for derivative estimates");
  check_uniform(profile.t);
  const double h = profile.t[1] - profile.t[0];
  if (method == DerivativeMethod::FiniteDiff) {
    profile.dA = fd1(profile.A, h);
    profile.d2A = fd2(profile.A, h);
    profile.d3A = fd3(profile.A, h);
    profile.dL = fd1(profile.L, h);
    profile.d2L = fd2(profile.L, h);
    profile.method = "finite_diff";
  } else {
    const SplineFit fa = smoothing_spline(profile.t, profile.A);
    const SplineFit fl = smoothing_spline(profile.t, profile.L);
    profile.dA = fa.d1;
    profile.d2A = fa.d2;
    profile.d3A = fa.d3;
    profile.dL = fl.d1;
    profile.d2L = fl.d2;
    profile.method = "smoothing_spline";
  }
  return profile;
}

}  // namespace ringcap
