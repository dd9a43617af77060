// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringcap/plaplace.hpp"

namespace ringcap {

// One marching-triangles segment of the level set {u = t}.
struct LevelSegment {
  Vec2 a;
  Vec2 b;
  std::int32_t triangle;
};

// Raw per-triangle crossings, unchained. Vertices with u >= t count as the
// upper side.
std::vector<LevelSegment> level_segments(const TriMesh& mesh,
                                         const ScalarField& field, double t);

struct LevelCurve {
  double t;
  std::vector<Vec2> polyline;  // closed CCW loop after convexification
  bool convex_hulled;          // hull moved a vertex by > 1e-9 relative
  double area;
  double length;
  SupportSamples support;
};

// Chains the marching segments of {u = t} into a single closed loop,
// convexifies it, and measures it. Throws TopologyError on open or multiple
// loops and DomainError for t outside (0, 1).
LevelCurve extract_level(const TriMesh& mesh, const ScalarField& field,
                         double t, int n_theta_support = 256);

// Flux integral of |grad u|^(p-1) along the raw (unhulled) level polyline,
// with the gradient taken from each segment's containing triangle. Equals the
// capacity for every t on an exact potential.
double level_flux(const TriMesh& mesh, const ScalarField& field, double p,
                  double t);

struct LevelProfile {
  std::vector<double> t;
  std::vector<double> A, L;
  std::vector<double> dA, d2A, d3A, dL, d2L;
  std::string method;  // derivative estimator tag (empty until estimated)
};

// Levels t_k = k/(n_t+1), k = 1..n_t, plus endpoint rows taken from the ring
// bodies themselves (t=0 outer, t=1 inner). Extractions run in parallel.
LevelProfile sweep_levels(const TriMesh& mesh, const ScalarField& field,
                          int n_t);

enum class DerivativeMethod { FiniteDiff, SmoothingSpline };

// Fills the derivative arrays on a uniform t-grid (>= 9 points). FiniteDiff
// uses centered stencils (one-sided at the ends, 5-point for d3A);
// SmoothingSpline fits a cubic smoothing spline with GCV-selected smoothing
// and differentiates it.
LevelProfile profile_derivatives(LevelProfile profile, DerivativeMethod method);

// Cubic smoothing spline on a uniform grid (natural boundary conditions).
// Returns fitted values and first/second/third derivatives at the nodes.
// lambda < 0 selects the smoothing parameter by generalized cross-validation.
struct SplineFit {
  std::vector<double> value, d1, d2, d3;
  double lambda;
};
SplineFit smoothing_spline(const std::vector<double>& t,
                           const std::vector<double>& y, double lambda = -1.0);

}  // namespace ringcap
