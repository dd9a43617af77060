// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "ringcap/levelflow.hpp"

namespace ringcap::oracle {

// Concentric annulus r < R with exponent p in (1, 2].
struct RadialConfig {
  double r;
  double R;
  double p;
};

// Capacity of the annulus condenser (closed disk r inside open disk R).
// For p < 2: 2*pi * [ (p-1)/(2-p) * (r^((p-2)/(p-1)) - R^((p-2)/(p-1))) ]^(1-p)
// For p = 2: 2*pi / ln(R/r).
double annulus_capacity(const RadialConfig& cfg);

// Radial capacity potential u(s), s in [r, R]; u(r) = 1, u(R) = 0.
double annulus_potential(double s, const RadialConfig& cfg);

// Radius of the level curve {u = t} (inverse of annulus_potential).
double annulus_level_radius(double t, const RadialConfig& cfg);

// |u'(s)| of the radial potential (exact).
double annulus_potential_slope(double s, const RadialConfig& cfg);

// Exact level profile A(t) = pi s(t)^2, L(t) = 2 pi s(t) with analytic
// derivatives filled in on the given grid.
LevelProfile annulus_profile(const RadialConfig& cfg,
                             const std::vector<double>& t_grid);

// Value of the Green function of the disk D(0, R) with pole at the center,
// evaluated at radius s (0 < s <= R).
double disk_green(double s, double R, double p);

// Radius of the Green level set {g >= t} for the centered disk.
double disk_green_level_radius(double t, double R, double p);

}  // namespace ringcap::oracle
