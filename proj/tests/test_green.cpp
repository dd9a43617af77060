// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>

#include "ringcap/errors.hpp"
#include "ringcap/green.hpp"
#include "ringcap/oracle.hpp"

using namespace ringcap;
namespace ro = ringcap::oracle;

namespace {
constexpr double kPi = 3.14159265358979323846;

GreenParams quick_params(double p) {
  GreenParams gp;
  gp.p = p;
  gp.n_phi = 96;
  gp.n_s = 64;
  gp.grading = 3.0;
  gp.n_t = 11;
  return gp;
}
}  // namespace

TEST_CASE("k_p closed forms and inversion") {
  CHECK(k_p(1.0, 2.0) == doctest::Approx(0.0));
  CHECK(k_p(1.0, 1.5) ==
        doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));
  CHECK(k_p(std::exp(-2.0 * kPi), 2.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(k_p(-1.0, 1.5), DomainError);

  CHECK(k_p_inverse(0.0, 2.0) == doctest::Approx(1.0));
  CHECK(k_p_inverse(1.0 / (4.0 * kPi * kPi), 1.5) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (double p : {1.3, 1.5, 1.8, 2.0})
    CHECK(k_p_inverse(k_p(0.37, p), p) == doctest::Approx(0.37).epsilon(1e-12));
  CHECK_THROWS_AS(k_p_inverse(-1.0, 1.5), DomainError);
}

TEST_CASE("green approximation matches the radial closed form on disks") {
  const ConvexBody disk = ConvexBody::disk({0, 0}, 1.0);
  for (double p : {2.0, 1.5}) {
    GreenParams gp = quick_params(p);
    const GreenField gf = green_approx(disk, gp, 5e-3);
    const double expected = ro::disk_green(0.5, 1.0, p);
    const double got =
        gf.modulus * gf.potential.eval(gf.mesh, {0.5, 0.0});
    CHECK(std::abs(got - expected) / expected < 0.02);
  }
  GreenParams gp = quick_params(2.0);
  gp.pole = {5.0, 0.0};
  CHECK_THROWS_AS(green_approx(disk, gp, 1e-2), DomainError);
  CHECK_THROWS_AS(green_approx(disk, quick_params(2.0), 0.5), DomainError);
}

TEST_CASE("robin constant and p-harmonic radius on centered disks") {
  struct Case {
    double R, p, tau_exact;
  };
  const Case cases[] = {
      {1.0, 2.0, 0.0},
      {2.0, 2.0, -std::log(2.0) / (2.0 * kPi)},
      {1.0, 1.5, 1.0 / (4.0 * kPi * kPi)},
      {2.0, 1.5, 1.0 / (8.0 * kPi * kPi)},
  };
  for (const Case& c : cases) {
    CAPTURE(c.R);
    CAPTURE(c.p);
    const ConvexBody disk = ConvexBody::disk({0, 0}, c.R);
    const RobinEstimate est = robin_tau(disk, quick_params(c.p));
    CHECK(std::abs(est.tau - c.tau_exact) <
          std::max(0.02 * std::abs(c.tau_exact), 1e-2));
    const double rho = p_harmonic_radius(est.tau, c.p);
    CHECK(std::abs(rho - c.R) / c.R < 0.02);
  }
}

TEST_CASE("green fields for successive deltas agree where both exist") {
  const ConvexBody disk = ConvexBody::disk({0, 0}, 1.0);
  const GreenParams gp = quick_params(1.5);
  const GreenField coarse = green_approx(disk, gp, 2e-2);
  const GreenField fine = green_approx(disk, gp, 5e-3);
  double worst = 0.0;
  for (double s : {0.3, 0.5, 0.8}) {
    const double a = coarse.modulus * coarse.potential.eval(coarse.mesh, {s, 0.0});
    const double b = fine.modulus * fine.potential.eval(fine.mesh, {s, 0.0});
    worst = std::max(worst, std::abs(a - b));
  }
  CHECK(worst < 5e-3);
}

TEST_CASE("green level profile matches the closed form on the unit disk") {
  const ConvexBody disk = ConvexBody::disk({0, 0}, 1.0);
  SUBCASE("p = 2") {
    const LevelProfile prof = green_level_profile(disk, quick_params(2.0));
    CHECK(prof.A[0] == doctest::Approx(kPi));
    for (std::size_t i = 1; i < prof.t.size(); ++i) {
      const double exact = kPi * std::exp(-4.0 * kPi * prof.t[i]);
      CHECK(std::abs(prof.A[i] - exact) / exact < 0.02);
    }
  }
  SUBCASE("p = 1.5") {
    const LevelProfile prof = green_level_profile(disk, quick_params(1.5));
    for (std::size_t i = 1; i < prof.t.size(); ++i) {
      const double denom = 1.0 + 4.0 * kPi * kPi * prof.t[i];
      const double exact = kPi / (denom * denom);
      CHECK(std::abs(prof.A[i] - exact) / exact < 0.02);
    }
  }
}

TEST_CASE("green profile bounds") {
  CHECK(green_profile_bounds(kPi, 2.0 * kPi, 2.0, 0.0).A_bound ==
        doctest::Approx(kPi));
  // p=1.5 disk bound coincides with the closed-form area decay
  const double t = 1.0 / (4.0 * kPi * kPi);
  CHECK(green_profile_bounds(kPi, 2.0 * kPi, 1.5, t).A_bound ==
        doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(green_profile_bounds(kPi, 2.0 * kPi, 2.0, 0.1).L_bound ==
        doctest::Approx(2.0 * kPi * std::exp(-0.2 * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(green_profile_bounds(-1.0, 1.0, 1.5, 0.0), DomainError);
}

TEST_CASE("asymptotic slope diagnostic approaches gamma_p on disks") {
  const ConvexBody disk = ConvexBody::disk({0, 0}, 1.0);
  for (double p : {2.0, 1.5}) {
    const GreenReport rep = green_report(disk, quick_params(p));
    CHECK(std::abs(rep.gamma_ratio - 1.0) < 0.05);
    CHECK(std::abs(rep.rho_p - 1.0) < 0.02);
  }
}
