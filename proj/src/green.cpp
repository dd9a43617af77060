// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/green.hpp"

#include <algorithm>
#include <cmath>

#include "ringcap/errors.hpp"
#include "ringcap/planecap.hpp"

namespace ringcap {

namespace {
constexpr double kPi = 3.14159265358979323846;

void validate_p(double p) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("exponent p must lie in (1, 2]");
}

double inradius_at_pole(const ConvexBody& domain, Vec2 pole) {
  if (!domain.contains(pole, 1e-12 * std::sqrt(domain.area())))
    throw DomainError("pole must be strictly interior to the domain");
  return domain.inradius(pole);
}

std::vector<double> absolute_deltas(const ConvexBody& domain,
                                    const GreenParams& params) {
  const double inr = inradius_at_pole(domain, params.pole);
  if (params.delta_fracs.empty())
    throw DomainError("delta sequence must be nonempty");
  std::vector<double> deltas;
  for (std::size_t i = 0; i < params.delta_fracs.size(); ++i) {
    if (i > 0 && !(params.delta_fracs[i] < params.delta_fracs[i - 1]))
      throw DomainError("delta sequence must be decreasing");
    deltas.push_back(params.delta_fracs[i] * inr);
  }
  if (!(deltas.front() < inr / 4.0))
    throw DomainError("largest delta must stay below inradius/4");
  return deltas;
}

SolveParams solve_params(const GreenParams& params) {
  SolveParams sp = params.solve;
  sp.p = params.p;
  return sp;
}

}  // namespace

double k_p(double r, double p) {
  validate_p(p);
  if (!(r > 0.0)) throw DomainError("k_p needs r > 0");
  if (p == 2.0) return std::log(1.0 / r) / (2.0 * kPi);
  return ((p - 1.0) / (2.0 - p)) * std::pow(2.0 * kPi, 1.0 / (1.0 - p)) *
         std::pow(r, (p - 2.0) / (p - 1.0));
}

double k_p_inverse(double v, double p) {
  validate_p(p);
  if (p == 2.0) return std::exp(-2.0 * kPi * v);
  if (!(v > 0.0)) throw DomainError("k_p_inverse needs v > 0 for p < 2");
  const double base =
      v * ((2.0 - p) / (p - 1.0)) * std::pow(2.0 * kPi, 1.0 / (p - 1.0));
  return std::pow(base, (p - 1.0) / (p - 2.0));
}

GreenField green_approx(const ConvexBody& domain, const GreenParams& params,
                        double delta) {
  validate_p(params.p);
  const double inr = inradius_at_pole(domain, params.pole);
  if (!(delta > 0.0 && delta < inr / 4.0))
    throw DomainError("delta must satisfy 0 < delta < inradius/4");
  RingDomain ring(ConvexBody::disk(params.pole, delta), domain, params.pole);
  GreenField out{build_ring_mesh(ring, params.n_phi, params.n_s,
                                 params.grading),
                 {}, 0.0, 0.0};
  out.potential = solve_potential(out.mesh, solve_params(params));
  out.cap = regularized_energy(out.mesh, out.potential.values, params.p,
                               out.potential.eps_min);
  out.modulus = p_modulus(out.cap, params.p);
  return out;
}

RobinEstimate robin_tau(const ConvexBody& domain, const GreenParams& params) {
  validate_p(params.p);
  const std::vector<double> deltas = absolute_deltas(domain, params);
  const double p = params.p;

  RobinEstimate est;
  est.deltas = deltas;
  est.quotients.resize(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const GreenField gf = green_approx(domain, params, deltas[i]);
    const double cap_plane = pcap_disk_plane(deltas[i], p);
    if (p == 2.0) {
      // tau_2 = lim ( k_2(delta) - 1/cap ); the capacity inverse carries the
      // same log(1/delta) divergence, the difference stays finite.
      est.quotients[i] = k_p(deltas[i], 2.0) - 1.0 / gf.cap;
    } else {
      est.quotients[i] =
          (gf.cap - cap_plane) /
          ((p - 1.0) * std::pow(cap_plane, p / (p - 1.0)));
    }
  }

  // Weighted linear fit q = tau + m * x; x is the disk-oracle leading-order
  // correction variable and the weights damp the small-delta quotients whose
  // cancellation noise scales like 1/x.
  std::vector<double> x(deltas.size()), w(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (p == 2.0) {
      x[i] = 1.0 / std::log(1.0 / deltas[i]);
      w[i] = 1.0;
    } else {
      x[i] = std::pow(deltas[i], (2.0 - p) / (p - 1.0));
      w[i] = x[i] * x[i];
    }
  }
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * est.quotients[i];
    sxx += w[i] * x[i] * x[i];
    sxy += w[i] * x[i] * est.quotients[i];
  }
  const double det = sw * sxx - sx * sx;
  est.tau = (sxx * sy - sx * sxy) / det;

  // Monotonicity of the quotient sequence (deltas decrease, quotients should
  // drift one way toward the limit).
  est.conditioning_warning = false;
  double scale = 0.0;
  for (double q : est.quotients) scale = std::max(scale, std::abs(q));
  scale = std::max(scale, std::abs(est.tau));
  int down = 0, up = 0;
  for (std::size_t i = 1; i < est.quotients.size(); ++i) {
    const double step = est.quotients[i] - est.quotients[i - 1];
    if (step > 0.01 * scale) ++up;
    if (step < -0.01 * scale) ++down;
  }
  if (up > 0 && down > 0) est.conditioning_warning = true;
  return est;
}

double p_harmonic_radius(double tau, double p) { return k_p_inverse(tau, p); }

LevelProfile green_level_profile(const ConvexBody& domain,
                                 const GreenParams& params) {
  const std::vector<double> deltas = absolute_deltas(domain, params);
  const double delta = deltas.back();
  const GreenField gf = green_approx(domain, params, delta);
  if (params.n_t < 9) throw ResolutionError("need at least 9 levels");

  // Cutoff level: where the level set's diameter is ~ 10 delta. Sample the
  // scaled field on vertices in a band around radius 5 delta.
  double t_max = 0.0;
  {
    double band_min = 1e300;
    bool found = false;
    for (std::size_t v = 0; v < gf.mesh.vertices.size(); ++v) {
      const double d = dist(gf.mesh.vertices[v], params.pole);
      if (d >= 4.0 * delta && d <= 6.0 * delta) {
        band_min = std::min(band_min, gf.potential.values[v]);
        found = true;
      }
    }
    if (!found) {
      // Very coarse radial grading; fall back to the nearest layer outside
      // 5 delta.
      double best_d = 1e300;
      for (std::size_t v = 0; v < gf.mesh.vertices.size(); ++v) {
        const double d = dist(gf.mesh.vertices[v], params.pole);
        if (d >= 5.0 * delta && d < best_d) {
          best_d = d;
          band_min = gf.potential.values[v];
        }
      }
    }
    t_max = band_min * gf.modulus;
  }

  LevelProfile prof;
  const int n = params.n_t;
  prof.t.resize(n + 1);
  prof.A.resize(n + 1);
  prof.L.resize(n + 1);
  prof.t[0] = 0.0;
  prof.A[0] = domain.area();
  prof.L[0] = domain.perimeter();
  for (int j = 1; j <= n; ++j) {
    const double t = t_max * j / n;
    prof.t[j] = t;
    const LevelCurve curve =
        extract_level(gf.mesh, gf.potential, t / gf.modulus);
    prof.A[j] = curve.area;
    prof.L[j] = curve.length;
  }
  return profile_derivatives(std::move(prof),
                             DerivativeMethod::SmoothingSpline);
}

GreenBounds green_profile_bounds(double Ag0, double Lg0, double p, double t) {
  validate_p(p);
  if (!(Ag0 > 0.0) || !(Lg0 > 0.0) || !(t >= 0.0))
    throw DomainError("green_profile_bounds needs positive data and t >= 0");
  if (p == 2.0)
    return {Ag0 * std::exp(-4.0 * kPi * t), Lg0 * std::exp(-2.0 * kPi * t)};
  const double ea = (p - 2.0) / (2.0 * p - 2.0);
  const double a_base = std::pow(Ag0, ea) +
                        ((2.0 - p) / (2.0 * p - 2.0)) *
                            std::pow(4.0 * kPi, p / (2.0 * p - 2.0)) * t;
  const double el = (p - 2.0) / (p - 1.0);
  const double l_base =
      std::pow(Lg0, el) + ((2.0 - p) / (p - 1.0)) * 2.0 * kPi * t;
  return {std::pow(a_base, 1.0 / ea), std::pow(l_base, 1.0 / el)};
}

double gamma_p(double p) {
  validate_p(p);
  return -std::pow(4.0 * kPi, p / (2.0 * p - 2.0));
}

GreenReport green_report(const ConvexBody& domain, const GreenParams& params) {
  GreenReport rep;
  rep.p = params.p;
  const RobinEstimate robin = robin_tau(domain, params);
  rep.tau_p = robin.tau;
  rep.rho_p = p_harmonic_radius(robin.tau, params.p);
  rep.conditioning_warning = robin.conditioning_warning;
  rep.profile = green_level_profile(domain, params);
  const std::size_t last = rep.profile.t.size() - 1;
  const double slope = rep.profile.dA[last] *
                       std::pow(rep.profile.A[last],
                                params.p / (2.0 - 2.0 * params.p));
  rep.gamma_ratio = slope / gamma_p(params.p);
  return rep;
}

}  // namespace ringcap
