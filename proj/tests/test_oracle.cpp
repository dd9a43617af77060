// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "ringcap/errors.hpp"
#include "ringcap/green.hpp"
#include "ringcap/oracle.hpp"

using namespace ringcap;
namespace ro = ringcap::oracle;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> uniform_grid(int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<double>(i) / (n - 1);
  return t;
}
}  // namespace

TEST_CASE("annulus capacity closed forms") {
  CHECK(ro::annulus_capacity({1.0, std::exp(1.0), 2.0}) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(ro::annulus_capacity({1.0, 4.0, 1.5}) ==
        doctest::Approx(4.0 * kPi / std::sqrt(3.0)).epsilon(1e-13));
  // R -> infinity recovers the whole-plane disk capacity for p < 2.
  CHECK(ro::annulus_capacity({1.0, 1e9, 1.5}) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-4));
  CHECK_THROWS_AS(ro::annulus_capacity({2.0, 1.0, 1.5}), DomainError);
}

TEST_CASE("annulus potential closed forms") {
  const ro::RadialConfig p2{1.0, std::exp(1.0), 2.0};
  CHECK(ro::annulus_potential(1.0, p2) == doctest::Approx(1.0));
  CHECK(ro::annulus_potential(p2.R, p2) == doctest::Approx(0.0));
  CHECK(ro::annulus_potential(2.0, p2) ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-13));

  const ro::RadialConfig p15{1.0, 4.0, 1.5};
  CHECK(ro::annulus_potential(2.0, p15) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK_THROWS_AS(ro::annulus_potential(0.5, p15), DomainError);

  // level radius inverts the potential
  for (double t : {0.1, 1.0 / 3.0, 0.8}) {
    const double s = ro::annulus_level_radius(t, p15);
    CHECK(ro::annulus_potential(s, p15) == doctest::Approx(t).epsilon(1e-12));
  }
  CHECK(ro::annulus_level_radius(1.0 / 3.0, p15) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("flux of the exact potential reproduces the capacity everywhere") {
  for (const ro::RadialConfig cfg :
       {ro::RadialConfig{1.0, std::exp(1.0), 2.0},
        ro::RadialConfig{1.0, 4.0, 1.5},
        ro::RadialConfig{0.7, 3.1, 1.8}}) {
    const double cap = ro::annulus_capacity(cfg);
    for (double s : {cfg.r, 0.5 * (cfg.r + cfg.R), cfg.R}) {
      const double flux =
          2.0 * kPi * s *
          std::pow(ro::annulus_potential_slope(s, cfg), cfg.p - 1.0);
      CHECK(flux == doctest::Approx(cap).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact annulus profile satisfies the convexity identities") {
  for (const ro::RadialConfig cfg :
       {ro::RadialConfig{1.0, std::exp(1.0), 2.0},
        ro::RadialConfig{1.0, 4.0, 1.5}}) {
    const LevelProfile prof = ro::annulus_profile(cfg, uniform_grid(11));
    for (std::size_t i = 0; i < prof.t.size(); ++i) {
      // A'A''' = (2/p) A''^2 and L L'' = (p-1)^{-1} L'^2 exactly on annuli.
      const double lhs_a = prof.dA[i] * prof.d3A[i];
      const double rhs_a = (2.0 / cfg.p) * prof.d2A[i] * prof.d2A[i];
      CHECK(lhs_a == doctest::Approx(rhs_a).epsilon(1e-10));
      const double lhs_l = prof.L[i] * prof.d2L[i];
      const double rhs_l = prof.dL[i] * prof.dL[i] / (cfg.p - 1.0);
      CHECK(lhs_l == doctest::Approx(rhs_l).epsilon(1e-10));
      // circles have zero isoperimetric deficit
      CHECK(prof.L[i] * prof.L[i] - 4.0 * kPi * prof.A[i] ==
            doctest::Approx(0.0).scale(prof.L[i] * prof.L[i]).epsilon(1e-10));
    }
    CHECK(prof.A.front() == doctest::Approx(kPi * cfg.R * cfg.R));
    CHECK(prof.A.back() == doctest::Approx(kPi * cfg.r * cfg.r));
  }
  // spot value from the p=2 closed form
  const LevelProfile prof =
      ro::annulus_profile({1.0, std::exp(1.0), 2.0}, {0.5});
  CHECK(prof.A[0] == doctest::Approx(kPi * std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("derivative consistency of the analytic profile (finite diff)") {
  const ro::RadialConfig cfg{1.0, 4.0, 1.5};
  const std::vector<double> grid = uniform_grid(101);
  const LevelProfile prof = ro::annulus_profile(cfg, grid);
  const double h = grid[1] - grid[0];
  for (std::size_t i = 1; i + 1 < grid.size(); i += 7) {
    const double fd = (prof.A[i + 1] - prof.A[i - 1]) / (2.0 * h);
    CHECK(fd == doctest::Approx(prof.dA[i]).epsilon(1e-2));
    const double fd2 = (prof.A[i + 1] - 2.0 * prof.A[i] + prof.A[i - 1]) /
                       (h * h);
    CHECK(fd2 == doctest::Approx(prof.d2A[i]).epsilon(3e-2));
  }
}

TEST_CASE("disk green closed forms") {
  CHECK(ro::disk_green(1.0, 1.0, 2.0) == doctest::Approx(0.0));
  CHECK(ro::disk_green(0.5, 1.0, 2.0) ==
        doctest::Approx(std::log(2.0) / (2.0 * kPi)).epsilon(1e-13));
  CHECK(ro::disk_green(0.5, 1.0, 1.5) ==
        doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(ro::disk_green(2.0, 1.0, 2.0), DomainError);

  // tau of the centered-disk green function is k_p(R): the k_p(s) parts
  // cancel identically.
  for (double p : {1.5, 1.8, 2.0}) {
    for (double R : {1.0, 2.0}) {
      for (double s : {0.01, 0.1, 0.5}) {
        const double tau = k_p(s, p) - ro::disk_green(s, R, p);
        CHECK(tau == doctest::Approx(k_p(R, p)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("disk green level radius inverts the green value") {
  for (double p : {1.5, 2.0}) {
    for (double t : {0.0, 0.05, 0.3}) {
      const double s = ro::disk_green_level_radius(t, 1.0, p);
      CHECK(ro::disk_green(s, 1.0, p) == doctest::Approx(t).epsilon(1e-12));
    }
  }
}
