// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "ringcap/geometry.hpp"
#include "ringcap/plaplace.hpp"

namespace ringcap {

// Whole-plane capacity of a disk of radius r. For p = 2 this is the
// logarithmic capacity (the disk radius).
double pcap_disk_plane(double r, double p);

// Normalized capacity combination F_p(K, R) built from cap(K, D(0,R)); a
// nonincreasing function of R whose limit defines pcap(K).
double f_p(double cap_KR, double R, double p);

struct PlaneCapRequest {
  ConvexBody K;
  double p = 2.0;
  // Outer radii (origin-centered disks). Empty selects 4 geometric values
  // from 4x to 32x the circumradius of K about the origin.
  std::vector<double> R_seq;
};

struct PlaneCapContext {
  int n_phi = 128;
  int n_s = 64;
  double grading = 2.0;
  SolveParams solve;  // p is copied from the request on use
};

struct PlaneCapReport {
  double pcap_plane;
  std::vector<double> F_sequence;
  std::vector<double> R_seq;
  std::string model;  // extrapolation model description
};

// Solves cap(K, D(0,R)) over the radius sweep (in parallel), maps through
// f_p, verifies the sequence is nonincreasing within 1%, and extrapolates
// R -> infinity (linear in R^((p-2)/(p-1)) for p < 2, in 1/ln R for p = 2).
// Throws ConvergenceError if the F-sequence increases beyond 1%.
PlaneCapReport pcap_plane(const PlaneCapRequest& req,
                          const PlaneCapContext& ctx);

// Residual margin of the isocapacitary-deficit inequality: right-hand side
// minus left-hand side; nonnegative means the inequality holds, zero exactly
// for concentric circular annuli.
double isocapacitary_check(double cap_KOmega, double cap_K, double cap_Omega,
                           double p);

}  // namespace ringcap
