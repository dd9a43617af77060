// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/suite.hpp"

#include <cmath>
#include <random>

namespace ringcap {

namespace {
constexpr double kPi = 3.14159265358979323846;

SolveParams solve_params(const RingRunConfig& cfg) {
  SolveParams sp = cfg.solve;
  sp.p = cfg.p;
  return sp;
}

std::vector<CheckResult> ring_checks(const RingRun& run,
                                     const RingDomain& ring, double p,
                                     bool annulus, bool inner_circle,
                                     const TolerancePolicy& tol) {
  std::vector<CheckResult> checks =
      check_longinetti(run.profile, p, tol);
  if (inner_circle || annulus) {
    auto thm22 = check_theorem22(run.profile, p, inner_circle, annulus, tol,
                                 &ring.inner);
    checks.insert(checks.end(), thm22.begin(), thm22.end());
  }
  auto iso = check_isoperimetry(run.profile, run.cap.cap_energy, p, annulus,
                                tol);
  checks.insert(checks.end(), iso.begin(), iso.end());
  return checks;
}

}  // namespace

RingRun run_ring(const RingDomain& ring, const RingRunConfig& cfg) {
  RingRun run{build_ring_mesh(ring, cfg.n_phi, cfg.n_s, cfg.grading),
              {}, {}, {}};
  run.field = solve_potential(run.mesh, solve_params(cfg));
  run.cap = capacity(run.mesh, run.field, cfg.p, cfg.t_probe);
  run.profile =
      profile_derivatives(sweep_levels(run.mesh, run.field, cfg.n_t),
                          cfg.method);
  return run;
}

bool is_concentric_annulus(const RingDomain& ring) {
  if (ring.inner.kind() != BodyKind::Disk ||
      ring.outer.kind() != BodyKind::Disk)
    return false;
  return dist(ring.inner.center(), ring.outer.center()) <=
         1e-12 * ring.outer.radius();
}

TolerancePolicy calibrate_ring_tolerances(const RingDomain& ring,
                                          const RingRunConfig& cfg) {
  const double r_cal = std::sqrt(ring.inner.area() / kPi);
  const double R_cal = std::sqrt(ring.outer.area() / kPi);
  const RingDomain annulus(ConvexBody::disk({0.0, 0.0}, r_cal),
                           ConvexBody::disk({0.0, 0.0}, R_cal));
  const RingRun run = run_ring(annulus, cfg);

  TolerancePolicy policy;
  const TolerancePolicy raw;  // measure margins with the fallback tolerance
  policy.absorb(ring_checks(run, annulus, cfg.p, true, true, raw));
  // The capacity-dependent margins must tolerate either capacity estimator;
  // absorb the flux route's noise as well.
  policy.absorb(
      check_isoperimetry(run.profile, run.cap.cap_flux, cfg.p, true, raw));
  return policy;
}

RingSuiteResult run_ring_suite(const RingDomain& ring,
                               const RingRunConfig& cfg) {
  RingSuiteResult res;
  res.annulus_certified = is_concentric_annulus(ring);
  res.inner_is_circle = ring.inner.kind() == BodyKind::Disk;
  res.tol = calibrate_ring_tolerances(ring, cfg);
  RingRun run = run_ring(ring, cfg);
  res.checks = ring_checks(run, ring, cfg.p, res.annulus_certified,
                           res.inner_is_circle, res.tol);
  res.cap = run.cap;
  res.profile = std::move(run.profile);
  return res;
}

GreenSuiteResult run_green_suite(const ConvexBody& domain,
                                 const GreenParams& params) {
  // Matched oracle: the area-equivalent disk with the pole at its center.
  const double r_eq = std::sqrt(domain.area() / kPi);
  GreenParams disk_params = params;
  disk_params.pole = {0.0, 0.0};
  const ConvexBody disk = ConvexBody::disk({0.0, 0.0}, r_eq);

  TolerancePolicy policy;
  {
    const LevelProfile oracle_prof = green_level_profile(disk, disk_params);
    policy.absorb(check_green(oracle_prof, params.p, TolerancePolicy{}));
  }

  GreenSuiteResult res;
  res.tol = policy;
  res.report = green_report(domain, params);
  res.checks = check_green(res.report.profile, params.p, policy);
  return res;
}

RingDomain random_ring(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL +
                      static_cast<std::uint64_t>(index) + 1);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Vec2> cloud(12);
  for (Vec2& z : cloud) {
    z.x = coord(rng);
    z.y = coord(rng);
  }
  ConvexBody outer = polygon_geometry(cloud).hull;
  const Vec2 c = outer.centroid();
  ConvexBody inner = outer.scaled(0.4, c);
  return RingDomain(std::move(inner), std::move(outer), c);
}

}  // namespace ringcap
