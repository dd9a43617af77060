// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "ringcap/levelflow.hpp"
#include "ringcap/mesh.hpp"
#include "ringcap/plaplace.hpp"

namespace ringcap {

// Fundamental radial profile k_p(r): the Green function of the plane up to
// normalization. k_2(r) = ln(1/r)/(2 pi).
double k_p(double r, double p);

// Unique r with k_p(r) = v. For p = 2 any real v is admissible; for p < 2
// the value must be positive.
double k_p_inverse(double v, double p);

struct GreenParams {
  Vec2 pole;
  double p = 2.0;
  // Inner-disk radii as fractions of the domain inradius at the pole,
  // decreasing. Defaults to 4 geometric values 1e-1 .. 10^{-2.5}.
  std::vector<double> delta_fracs = {1e-1, 0.0316227766016838,
                                     1e-2, 0.00316227766016838};
  int n_phi = 128;
  int n_s = 96;
  double grading = 3.0;  // layers concentrate at the inner disk
  int n_t = 15;          // level count of the Green profile
  SolveParams solve;     // p is copied from this struct's p on use
};

// Green approximation for one shrinking-disk radius: the capacity potential
// of (closed disk delta at the pole, domain) rescaled by the p-modulus so the
// boundary flux integral of |grad g|^(p-1) is 1. Exact on centered disks.
struct GreenField {
  TriMesh mesh;
  ScalarField potential;  // the unscaled capacity potential u in [0, 1]
  double modulus;         // g = modulus * u
  double cap;             // condenser capacity of the delta-ring
};
GreenField green_approx(const ConvexBody& domain, const GreenParams& params,
                        double delta);

// Robin constant by the shrinking-disk capacity limit, extrapolated to
// delta -> 0 by a weighted linear fit in the disk-oracle leading-order
// variable (delta^((2-p)/(p-1)) for p < 2, 1/ln(1/delta) for p = 2).
struct RobinEstimate {
  double tau;
  bool conditioning_warning;  // quotient sequence not monotone within 1%
  std::vector<double> deltas;     // absolute radii used
  std::vector<double> quotients;  // per-delta limit quantity
};
RobinEstimate robin_tau(const ConvexBody& domain, const GreenParams& params);

// rho with k_p(rho) = tau.
double p_harmonic_radius(double tau, double p);

// Level profile of the Green approximation at the smallest delta:
// A_g(t) = area of {g >= t}, L_g(t) = length of {g = t} on a uniform t-grid
// from 0 (the domain itself) up to the level whose set has diameter ~ 10
// delta. Derivatives are filled with the smoothing-spline estimator.
LevelProfile green_level_profile(const ConvexBody& domain,
                                 const GreenParams& params);

// Right-hand sides of the area/length decay bounds for a Green profile
// starting at (Ag0, Lg0); equality holds for disks with centered pole.
struct GreenBounds {
  double A_bound;
  double L_bound;
};
GreenBounds green_profile_bounds(double Ag0, double Lg0, double p, double t);

// Exact asymptotic slope gamma_p = -(4 pi)^(p/(2p-2)) of
// A_g'(t) * A_g(t)^(p/(2-2p)).
double gamma_p(double p);

struct GreenReport {
  double p;
  double tau_p;
  double rho_p;
  double gamma_ratio;  // measured slope diagnostic / gamma_p at the last level
  bool conditioning_warning;
  LevelProfile profile;
};
GreenReport green_report(const ConvexBody& domain, const GreenParams& params);

}  // namespace ringcap
