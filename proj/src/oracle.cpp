// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/oracle.hpp"

#include <cmath>

#include "ringcap/errors.hpp"

namespace ringcap::oracle {

namespace {
constexpr double kPi = 3.14159265358979323846;

void validate(const RadialConfig& cfg) {
  if (!(cfg.r > 0.0 && cfg.r < cfg.R))
    throw DomainError("annulus needs 0 < r < R");
  if (!(cfg.p > 1.0 && cfg.p <= 2.0))
    throw DomainError("exponent p must lie in (1, 2]");
}

// x^((p-2)/(p-1)) -- the radial power that drives every p < 2 formula.
double radial_pow(double x, double p) {
  return std::pow(x, (p - 2.0) / (p - 1.0));
}
}  // namespace

double annulus_capacity(const RadialConfig& cfg) {
  validate(cfg);
  if (cfg.p == 2.0) return 2.0 * kPi / std::log(cfg.R / cfg.r);
  const double a = (cfg.p - 1.0) / (2.0 - cfg.p);
  const double span = radial_pow(cfg.r, cfg.p) - radial_pow(cfg.R, cfg.p);
  return 2.0 * kPi * std::pow(a * span, 1.0 - cfg.p);
}

double annulus_potential(double s, const RadialConfig& cfg) {
  validate(cfg);
  if (!(s >= cfg.r && s <= cfg.R))
    throw DomainError("radius outside the annulus");
  if (cfg.p == 2.0)
    return std::log(cfg.R / s) / std::log(cfg.R / cfg.r);
  const double rq = radial_pow(cfg.r, cfg.p);
  const double Rq = radial_pow(cfg.R, cfg.p);
  return (radial_pow(s, cfg.p) - Rq) / (rq - Rq);
}

double annulus_level_radius(double t, const RadialConfig& cfg) {
  validate(cfg);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("level outside [0, 1]");
  if (cfg.p == 2.0)
    return cfg.R * std::exp(-t * std::log(cfg.R / cfg.r));
  const double rq = radial_pow(cfg.r, cfg.p);
  const double Rq = radial_pow(cfg.R, cfg.p);
  const double q = (cfg.p - 2.0) / (cfg.p - 1.0);
  return std::pow(Rq + t * (rq - Rq), 1.0 / q);
}

double annulus_potential_slope(double s, const RadialConfig& cfg) {
  validate(cfg);
  if (!(s >= cfg.r && s <= cfg.R))
    throw DomainError("radius outside the annulus");
  if (cfg.p == 2.0) return 1.0 / (s * std::log(cfg.R / cfg.r));
  const double q = (cfg.p - 2.0) / (cfg.p - 1.0);
  const double rq = radial_pow(cfg.r, cfg.p);
  const double Rq = radial_pow(cfg.R, cfg.p);
  return std::abs(q) * std::pow(s, q - 1.0) / (rq - Rq);
}

LevelProfile annulus_profile(const RadialConfig& cfg,
                             const std::vector<double>& t_grid) {
  validate(cfg);
  LevelProfile prof;
  prof.t = t_grid;
  const std::size_t n = t_grid.size();
  prof.A.resize(n);
  prof.L.resize(n);
  prof.dA.resize(n);
  prof.d2A.resize(n);
  prof.d3A.resize(n);
  prof.dL.resize(n);
  prof.d2L.resize(n);
  prof.method = "analytic";

  if (cfg.p == 2.0) {
    // s(t) = R e^{-kt}, k = ln(R/r).
    const double k = std::log(cfg.R / cfg.r);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = cfg.R * std::exp(-k * t_grid[i]);
      const double A = kPi * s * s;
      const double L = 2.0 * kPi * s;
      prof.A[i] = A;
      prof.L[i] = L;
      prof.dA[i] = -2.0 * k * A;
      prof.d2A[i] = 4.0 * k * k * A;
      prof.d3A[i] = -8.0 * k * k * k * A;
      prof.dL[i] = -k * L;
      prof.d2L[i] = k * k * L;
    }
    return prof;
  }

  // s(t)^q = Rq + t (rq - Rq) with q = (p-2)/(p-1); A = pi w^{2/q},
  // L = 2 pi w^{1/q} with w affine in t.
  const double q = (cfg.p - 2.0) / (cfg.p - 1.0);
  const double rq = radial_pow(cfg.r, cfg.p);
  const double Rq = radial_pow(cfg.R, cfg.p);
  const double beta = rq - Rq;
  const double ma = 2.0 / q;
  const double ml = 1.0 / q;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = Rq + t_grid[i] * beta;
    prof.A[i] = kPi * std::pow(w, ma);
    prof.dA[i] = kPi * ma * beta * std::pow(w, ma - 1.0);
    prof.d2A[i] = kPi * ma * (ma - 1.0) * beta * beta * std::pow(w, ma - 2.0);
    prof.d3A[i] = kPi * ma * (ma - 1.0) * (ma - 2.0) * beta * beta * beta *
                  std::pow(w, ma - 3.0);
    prof.L[i] = 2.0 * kPi * std::pow(w, ml);
    prof.dL[i] = 2.0 * kPi * ml * beta * std::pow(w, ml - 1.0);
    prof.d2L[i] =
        2.0 * kPi * ml * (ml - 1.0) * beta * beta * std::pow(w, ml - 2.0);
  }
  return prof;
}

double disk_green(double s, double R, double p) {
  if (!(s > 0.0 && s <= R)) throw DomainError("radius must lie in (0, R]");
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("exponent p must lie in (1, 2]");
  if (p == 2.0) return std::log(R / s) / (2.0 * kPi);
  const double a = (p - 1.0) / (2.0 - p);
  return a * std::pow(2.0 * kPi, 1.0 / (1.0 - p)) *
         (radial_pow(s, p) - radial_pow(R, p));
}

double disk_green_level_radius(double t, double R, double p) {
  if (!(t >= 0.0)) throw DomainError("level must be nonnegative");
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("exponent p must lie in (1, 2]");
  if (p == 2.0) return R * std::exp(-2.0 * kPi * t);
  const double a = (p - 1.0) / (2.0 - p);
  const double q = (p - 2.0) / (p - 1.0);
  const double sq =
      radial_pow(R, p) + t / (a * std::pow(2.0 * kPi, 1.0 / (1.0 - p)));
  return std::pow(sq, 1.0 / q);
}

}  // namespace ringcap::oracle
