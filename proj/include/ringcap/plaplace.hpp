// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "ringcap/mesh.hpp"

namespace ringcap {

// Piecewise-linear vertex field on a ring mesh. Capacity potentials carry
// their solver diagnostics along.
struct ScalarField {
  std::vector<double> values;
  int iterations = 0;        // nonlinear (fixed-point) steps taken
  double final_residual = 0.0;  // last relative energy change
  double eps_min = 0.0;      // smallest absolute regularization used

  // P1 interpolation at z; throws DomainError if z is outside the mesh.
  double eval(const TriMesh& mesh, Vec2 z) const;
};

struct SolveParams {
  double p = 2.0;
  // Regularization continuation, relative to the RMS gradient of the p=2
  // solve on the same mesh.
  std::vector<double> eps_schedule = {1e-2, 1e-3, 1e-4, 1e-5,
                                      1e-6, 1e-7, 1e-8};
  double tol = 1e-10;  // relative energy-change stopping threshold
  int max_iters = 200;  // fixed-point cap per regularization level
  double cg_tol = 1e-12;
  int cg_max_iters = 50000;
};

// Capacity potential of the meshed ring: u = 1 on the inner boundary, 0 on
// the outer one, p-harmonic in between. Fixed-point iteration on the
// gradient-frozen weight with regularization continuation; each step is one
// SPD solve. Throws ConvergenceError if the smallest regularization level
// fails to reach `tol` within `max_iters` steps.
ScalarField solve_potential(const TriMesh& mesh, const SolveParams& params);

struct CapacityReport {
  double p;
  double cap_energy;
  double cap_flux;
  double p_modulus;
  int iterations;
  double residual;
  double t_probe;
};

// Energy and flux estimates of the condenser capacity. The flux is taken on
// the extracted level curve {u = t_probe} with the gradient of the containing
// triangle.
CapacityReport capacity(const TriMesh& mesh, const ScalarField& field,
                        double p, double t_probe = 0.5);

// cap^(1/(1-p))
double p_modulus(double cap, double p);

// Per-triangle constant gradients of a vertex field.
std::vector<Vec2> triangle_gradients(const TriMesh& mesh,
                                     const std::vector<double>& values);

// Integral of (|grad u|^2 + eps^2)^(p/2) over the mesh.
double regularized_energy(const TriMesh& mesh,
                          const std::vector<double>& values, double p,
                          double eps);

}  // namespace ringcap
