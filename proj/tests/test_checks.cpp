// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>

#include "ringcap/checks.hpp"
#include "ringcap/errors.hpp"
#include "ringcap/oracle.hpp"
#include "ringcap/suite.hpp"

using namespace ringcap;
namespace ro = ringcap::oracle;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> uniform_grid(int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<double>(i) / (n - 1);
  return t;
}

RingRunConfig quick_cfg(double p) {
  RingRunConfig cfg;
  cfg.p = p;
  cfg.n_phi = 96;
  cfg.n_s = 24;
  cfg.n_t = 15;
  return cfg;
}

const CheckResult& find(const std::vector<CheckResult>& v,
                        const std::string& name) {
  for (const CheckResult& c : v)
    if (c.name == name) return c;
  REQUIRE_MESSAGE(false, "missing check: " << name);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("analytic annulus profiles are equality cases everywhere") {
  for (const ro::RadialConfig cfg :
       {ro::RadialConfig{1.0, std::exp(1.0), 2.0},
        ro::RadialConfig{1.0, 4.0, 1.5}}) {
    const LevelProfile prof = ro::annulus_profile(cfg, uniform_grid(15));
    const double cap = ro::annulus_capacity(cfg);
    TolerancePolicy tight;
    tight.fallback = 1e-9;

    for (const auto& c : check_longinetti(prof, cfg.p, tight))
      CHECK(c.verdict == Verdict::EqualityCase);
    for (const auto& c : check_theorem22(prof, cfg.p, true, true, tight))
      CHECK(c.verdict == Verdict::EqualityCase);
    for (const auto& c : check_isoperimetry(prof, cap, cfg.p, true, tight))
      CHECK(c.verdict == Verdict::EqualityCase);
  }
}

TEST_CASE("theorem-2.2 precondition and hypothesis bookkeeping") {
  const LevelProfile prof =
      ro::annulus_profile({1.0, 2.0, 1.5}, uniform_grid(15));
  CHECK_THROWS_AS(check_theorem22(prof, 1.5, false, false), DomainError);

  const ConvexBody ellipse = ConvexBody::ellipse({0, 0}, 1.5, 1.0);
  const auto results =
      check_theorem22(prof, 1.5, true, false, TolerancePolicy{}, &ellipse);
  const CheckResult& lower = find(results, "thm22_circle_inner");
  CHECK(lower.notes.find("not a disk") != std::string::npos);
}

TEST_CASE("longinetti with too few levels") {
  LevelProfile prof;
  prof.t = {0.0, 0.5, 1.0};
  prof.A = {4.0, 2.0, 1.0};
  prof.L = {4.0, 2.0, 1.0};
  CHECK_THROWS_AS(check_longinetti(prof, 1.5), ResolutionError);
}

TEST_CASE("ring suite on an annulus: equality cases and certified flags") {
  const RingDomain ring(ConvexBody::disk({0, 0}, 1.0),
                        ConvexBody::disk({0, 0}, std::exp(1.0)));
  const RingSuiteResult res = run_ring_suite(ring, quick_cfg(2.0));
  CHECK(res.annulus_certified);
  CHECK(res.inner_is_circle);
  CHECK(all_passed(res.checks));
  for (const CheckResult& c : res.checks) {
    CAPTURE(c.name);
    CHECK(c.verdict == Verdict::EqualityCase);
  }
}

TEST_CASE("ring suite on a disk-in-ellipse ring passes") {
  const RingDomain ring(ConvexBody::disk({0, 0}, 0.5),
                        ConvexBody::ellipse({0, 0}, 2.0, 1.2));
  const RingSuiteResult res = run_ring_suite(ring, quick_cfg(2.0));
  CHECK_FALSE(res.annulus_certified);
  CHECK(res.inner_is_circle);
  CHECK(all_passed(res.checks));
  // With a disk inner and ellipse outer the deficit shrinks toward the inner
  // boundary: the uncertified monotonicity series must be informational.
  const CheckResult& deficit = find(res.checks, "iso_deficit_monotone");
  CHECK(deficit.informational);
  // (2.6) holds: circular inner boundary
  const CheckResult& lower = find(res.checks, "thm22_circle_inner");
  CHECK(lower.verdict != Verdict::Fail);
}

TEST_CASE("margins are invariant under rigid motions") {
  const RingDomain ring(ConvexBody::disk({0, 0}, 0.5),
                        ConvexBody::ellipse({0, 0}, 1.6, 1.1));
  const double angle = kPi / 6.0;
  const Vec2 shift{0.7, -0.3};
  const RingDomain moved(ring.inner.transformed(angle, shift),
                         ring.outer.transformed(angle, shift));
  const RingRunConfig cfg = quick_cfg(1.5);
  const RingSuiteResult a = run_ring_suite(ring, cfg);
  const RingSuiteResult b = run_ring_suite(moved, cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    REQUIRE(a.checks[i].margins.size() == b.checks[i].margins.size());
    for (std::size_t k = 0; k < a.checks[i].margins.size(); ++k)
      CHECK(std::abs(a.checks[i].margins[k] - b.checks[i].margins[k]) <=
            a.checks[i].tol);
  }
}

TEST_CASE("verdicts agree between energy and flux capacities") {
  const RingDomain ring(ConvexBody::disk({0, 0}, 1.0),
                        ConvexBody::disk({0, 0}, 3.0));
  RingRunConfig cfg = quick_cfg(1.5);
  cfg.n_phi = 128;
  cfg.n_s = 32;
  cfg.grading = 1.3;
  const RingRun run = run_ring(ring, cfg);
  CHECK(std::abs(run.cap.cap_energy - run.cap.cap_flux) /
            run.cap.cap_energy <
        0.02);
  const TolerancePolicy tol = calibrate_ring_tolerances(ring, cfg);
  const auto via_energy =
      check_isoperimetry(run.profile, run.cap.cap_energy, cfg.p, true, tol);
  const auto via_flux =
      check_isoperimetry(run.profile, run.cap.cap_flux, cfg.p, true, tol);
  REQUIRE(via_energy.size() == via_flux.size());
  for (std::size_t i = 0; i < via_energy.size(); ++i)
    CHECK((via_energy[i].verdict == Verdict::Fail) ==
          (via_flux[i].verdict == Verdict::Fail));
}

TEST_CASE("random rings produce no non-informational failures") {
  for (int i = 0; i < 3; ++i) {
    const RingDomain ring = random_ring(123, i);
    RingRunConfig cfg = quick_cfg(1.5);
    cfg.n_phi = 64;
    cfg.n_s = 16;
    cfg.n_t = 11;
    const RingSuiteResult res = run_ring_suite(ring, cfg);
    CAPTURE(i);
    CHECK(all_passed(res.checks));
  }
}

TEST_CASE("random rings are reproducible for a fixed seed") {
  const RingDomain a = random_ring(7, 2);
  const RingDomain b = random_ring(7, 2);
  REQUIRE(a.outer.vertices().size() == b.outer.vertices().size());
  for (std::size_t i = 0; i < a.outer.vertices().size(); ++i) {
    CHECK(a.outer.vertices()[i].x == b.outer.vertices()[i].x);
    CHECK(a.outer.vertices()[i].y == b.outer.vertices()[i].y);
  }
}
