// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ringcap/checks.hpp"
#include "ringcap/green.hpp"
#include "ringcap/mesh.hpp"
#include "ringcap/plaplace.hpp"

namespace ringcap {

struct RingRunConfig {
  double p = 2.0;
  int n_phi = 128;
  int n_s = 32;
  double grading = 1.0;
  int n_t = 21;
  DerivativeMethod method = DerivativeMethod::SmoothingSpline;
  double t_probe = 0.5;
  SolveParams solve;  // p is copied from this struct's p on use
};

// Solve + measure one ring: capacity report and derivative-filled profile.
struct RingRun {
  TriMesh mesh;
  ScalarField field;
  CapacityReport cap;
  LevelProfile profile;
};
RingRun run_ring(const RingDomain& ring, const RingRunConfig& cfg);

// Tolerances from the matched radial oracle: an annulus with the
// area-equivalent radii of the given ring pushed through the identical
// pipeline; per-check noise scaled by the policy's safety factor. The
// returned policy covers the ring checks (and is exact-equality on the
// annulus itself).
TolerancePolicy calibrate_ring_tolerances(const RingDomain& ring,
                                          const RingRunConfig& cfg);

// Full verification suite on one ring: calibrate, solve, run every
// applicable check. Hypothesis flags are derived from the configuration
// (inner disk => circle hypothesis; concentric disk pair => constant outer
// gradient).
struct RingSuiteResult {
  CapacityReport cap;
  LevelProfile profile;
  std::vector<CheckResult> checks;
  TolerancePolicy tol;
  bool annulus_certified;
  bool inner_is_circle;
};
RingSuiteResult run_ring_suite(const RingDomain& ring,
                               const RingRunConfig& cfg);

// True for a concentric disk pair (certifies |grad u| constant on the outer
// boundary by symmetry).
bool is_concentric_annulus(const RingDomain& ring);

// Green verification suite: report + margins with a disk-matched tolerance
// policy.
struct GreenSuiteResult {
  GreenReport report;
  std::vector<CheckResult> checks;
  TolerancePolicy tol;
};
GreenSuiteResult run_green_suite(const ConvexBody& domain,
                                 const GreenParams& params);

// Reproducible adversarial ring family: outer = convex hull of seeded random
// points, inner = the outer scaled by 0.4 about its centroid.
RingDomain random_ring(std::uint64_t seed, int index);

}  // namespace ringcap
