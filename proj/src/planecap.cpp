// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/planecap.hpp"

#include <cmath>

#include "ringcap/errors.hpp"
#include "ringcap/mesh.hpp"
#include "ringcap/parallel.hpp"

namespace ringcap {

namespace {
constexpr double kPi = 3.14159265358979323846;

void validate_p(double p) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("exponent p must lie in (1, 2]");
}
}  // namespace

double pcap_disk_plane(double r, double p) {
  validate_p(p);
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  if (p == 2.0) return r;
  return 2.0 * kPi * std::pow((p - 1.0) / (2.0 - p), 1.0 - p) *
         std::pow(r, 2.0 - p);
}

double f_p(double cap_KR, double R, double p) {
  validate_p(p);
  if (!(cap_KR > 0.0) || !(R > 0.0))
    throw DomainError("f_p needs positive capacity and radius");
  const double pmod = std::pow(cap_KR, 1.0 / (1.0 - p));
  if (p == 2.0)
    return std::exp(-2.0 * kPi * (pmod + std::log(1.0 / R) / (2.0 * kPi)));
  const double normalizer = std::pow(2.0 * kPi, 1.0 / (1.0 - p)) *
                            ((p - 1.0) / (2.0 - p)) *
                            std::pow(R, (p - 2.0) / (p - 1.0));
  return std::pow(pmod + normalizer, 1.0 - p);
}

PlaneCapReport pcap_plane(const PlaneCapRequest& req,
                          const PlaneCapContext& ctx) {
  validate_p(req.p);
  PlaneCapReport rep;
  rep.R_seq = req.R_seq;
  if (rep.R_seq.empty()) {
    const double circ = req.K.circumradius({0.0, 0.0});
    for (double f : {4.0, 8.0, 16.0, 32.0}) rep.R_seq.push_back(f * circ);
  }
  for (std::size_t i = 0; i < rep.R_seq.size(); ++i) {
    if (!(rep.R_seq[i] > 0.0) || (i > 0 && rep.R_seq[i] <= rep.R_seq[i - 1]))
      throw DomainError("outer radii must be positive and increasing");
    if (!(req.K.circumradius({0.0, 0.0}) < rep.R_seq[i]))
      throw DomainError("K must be contained in every outer disk");
  }

  rep.F_sequence.resize(rep.R_seq.size());
  SolveParams sp = ctx.solve;
  sp.p = req.p;
  const Vec2 ref = req.K.centroid();
  parallel_for(rep.R_seq.size(), [&](std::size_t i) {
    const double R = rep.R_seq[i];
    RingDomain ring(req.K, ConvexBody::disk({0.0, 0.0}, R), ref);
    const TriMesh mesh = build_ring_mesh(ring, ctx.n_phi, ctx.n_s,
                                         ctx.grading);
    const ScalarField u = solve_potential(mesh, sp);
    const double cap = regularized_energy(mesh, u.values, req.p, u.eps_min);
    rep.F_sequence[i] = f_p(cap, R, req.p);
  });

  for (std::size_t i = 1; i < rep.F_sequence.size(); ++i)
    if (rep.F_sequence[i] > rep.F_sequence[i - 1] * 1.01)
      throw ConvergenceError(
          "F-sequence increases along the radius sweep (solver accuracy)",
          rep.F_sequence[i] / rep.F_sequence[i - 1] - 1.0);

  // Linear extrapolation to R -> infinity in the variable that carries the
  // leading R-dependence.
  std::vector<double> x(rep.R_seq.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = req.p == 2.0 ? 1.0 / std::log(rep.R_seq[i])
                        : std::pow(rep.R_seq[i], (req.p - 2.0) / (req.p - 1.0));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += rep.F_sequence[i];
    sxx += x[i] * x[i];
    sxy += x[i] * rep.F_sequence[i];
  }
  const double det = n * sxx - sx * sx;
  rep.pcap_plane = det != 0.0 ? (sxx * sy - sx * sxy) / det
                              : rep.F_sequence.back();
  rep.model = req.p == 2.0 ? "linear in 1/ln(R)"
                           : "linear in R^((p-2)/(p-1))";
  return rep;
}

double isocapacitary_check(double cap_KOmega, double cap_K, double cap_Omega,
                           double p) {
  validate_p(p);
  if (!(cap_KOmega > 0.0) || !(cap_K > 0.0) || !(cap_Omega > 0.0))
    throw DomainError("capacities must be positive");
  if (p == 2.0)
    return std::log(cap_Omega / cap_K) - 2.0 * kPi / cap_KOmega;
  const double e = 1.0 / (1.0 - p);
  const double lhs = std::pow(cap_KOmega / (2.0 * kPi), e);
  const double rhs = std::pow(cap_K / (2.0 * kPi), e) -
                     std::pow(cap_Omega / (2.0 * kPi), e);
  return rhs - lhs;
}

}  // namespace ringcap
