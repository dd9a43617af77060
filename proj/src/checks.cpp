// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/checks.hpp"

#include <algorithm>
#include <cmath>

#include "ringcap/errors.hpp"
#include "ringcap/green.hpp"

namespace ringcap {

namespace {
constexpr double kPi = 3.14159265358979323846;

Verdict judge(const std::vector<double>& margins, double tol) {
  double min_m = 0.0, max_abs = 0.0;
  for (double m : margins) {
    min_m = std::min(min_m, m);
    max_abs = std::max(max_abs, std::abs(m));
  }
  if (max_abs <= tol) return Verdict::EqualityCase;
  return min_m >= -tol ? Verdict::Pass : Verdict::Fail;
}

// Normalized margins (lhs - rhs) / max|series|; margins >= 0 <=> lhs >= rhs.
CheckResult make_result(std::string name, std::vector<double> t,
                        const std::vector<double>& lhs,
                        const std::vector<double>& rhs,
                        const TolerancePolicy& tol_policy) {
  double scale = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    scale = std::max({scale, std::abs(lhs[i]), std::abs(rhs[i])});
  CheckResult res;
  res.name = std::move(name);
  res.t_values = std::move(t);
  res.margins.resize(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i)
    res.margins[i] = scale > 0.0 ? (lhs[i] - rhs[i]) / scale : 0.0;
  res.tol = tol_policy.get(res.name);
  res.verdict = judge(res.margins, res.tol);
  return res;
}

void require_derivatives(const LevelProfile& prof, bool need_d3) {
  if (prof.t.size() < 9)
    throw ResolutionError("profile has too few levels for margin checks");
  if (prof.dA.size() != prof.t.size() || prof.d2A.size() != prof.t.size() ||
      prof.dL.size() != prof.t.size() || prof.d2L.size() != prof.t.size())
    throw DomainError("profile derivatives have not been estimated");
  if (need_d3 && prof.d3A.size() != prof.t.size())
    throw DomainError("profile lacks the third area derivative");
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::EqualityCase:
      return "equality-case";
  }
  return "?";
}

double TolerancePolicy::get(const std::string& name) const {
  const auto it = by_name.find(name);
  return it == by_name.end() ? fallback : it->second;
}

void TolerancePolicy::absorb(const std::vector<CheckResult>& oracle_results) {
  for (const CheckResult& r : oracle_results) {
    double max_abs = 0.0;
    for (double m : r.margins) max_abs = std::max(max_abs, std::abs(m));
    const double tol = std::max(safety * max_abs, floor);
    const auto it = by_name.find(r.name);
    if (it == by_name.end() || it->second < tol) by_name[r.name] = tol;
  }
}

std::vector<CheckResult> check_longinetti(const LevelProfile& prof, double p,
                                          const TolerancePolicy& tol) {
  require_derivatives(prof, false);
  const std::size_t n = prof.t.size();
  const bool has_d3 = prof.d3A.size() == n;
  std::vector<CheckResult> out;

  if (has_d3) {
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = prof.dA[i] * prof.d3A[i];
      rhs[i] = (2.0 / p) * prof.d2A[i] * prof.d2A[i];
    }
    out.push_back(make_result("longinetti_area", prof.t, lhs, rhs, tol));
  }
  {
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = prof.L[i] * prof.d2L[i];
      rhs[i] = prof.dL[i] * prof.dL[i] / (p - 1.0);
    }
    out.push_back(make_result("longinetti_length", prof.t, lhs, rhs, tol));
  }
  {
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = std::pow(prof.L[i] / prof.L[0], 1.0 / (p - 1.0));
      rhs[i] = prof.dL[i] / prof.dL[0];
    }
    CheckResult res = make_result("longinetti_integrated", prof.t, lhs, rhs,
                                  tol);
    if (!has_d3)
      res.notes = "third area derivative unavailable; area series skipped";
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> check_theorem22(const LevelProfile& prof, double p,
                                         bool inner_is_circle,
                                         bool boundary_gradient_constant,
                                         const TolerancePolicy& tol,
                                         const ConvexBody* inner) {
  if (!inner_is_circle && !boundary_gradient_constant)
    throw DomainError(
        "theorem-2.2 checks need a circular inner boundary or a constant "
        "outer gradient");
  require_derivatives(prof, false);
  const std::size_t n = prof.t.size();
  std::vector<CheckResult> out;

  std::vector<double> lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    lower[i] = 2.0 * (p - 1.0) * prof.A[i] * prof.d2A[i];
    upper[i] = p * prof.dA[i] * prof.dA[i];
  }
  if (inner_is_circle) {
    CheckResult res = make_result("thm22_circle_inner", prof.t, lower, upper,
                                  tol);
    if (inner && inner->kind() != BodyKind::Disk)
      res.notes = "caller asserted a circular inner boundary but the inner "
                  "body is not a disk; hypothesis of the lower bound fails";
    out.push_back(std::move(res));
  }
  if (boundary_gradient_constant)
    out.push_back(
        make_result("thm22_gradflat_outer", prof.t, upper, lower, tol));

  // Proof diagnostic: M_p(t) = (A A'' - p/(2p-2) A'^2) / A^{1/(p-1)} is
  // nonincreasing on every convex ring.
  std::vector<double> mp(n);
  for (std::size_t i = 0; i < n; ++i)
    mp[i] = (prof.A[i] * prof.d2A[i] -
             p / (2.0 * p - 2.0) * prof.dA[i] * prof.dA[i]) /
            std::pow(prof.A[i], 1.0 / (p - 1.0));
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale,
                     (std::abs(prof.A[i] * prof.d2A[i]) +
                      p / (2.0 * p - 2.0) * prof.dA[i] * prof.dA[i]) /
                         std::pow(prof.A[i], 1.0 / (p - 1.0)));
  CheckResult res;
  res.name = "thm22_mp_monotone";
  res.t_values.assign(prof.t.begin() + 1, prof.t.end());
  res.margins.resize(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    res.margins[i - 1] = scale > 0.0 ? (mp[0] - mp[i]) / scale : 0.0;
  res.tol = tol.get(res.name);
  res.verdict = judge(res.margins, res.tol);
  out.push_back(std::move(res));
  return out;
}

std::vector<CheckResult> check_isoperimetry(const LevelProfile& prof,
                                            double cap, double p,
                                            bool gradient_constant_on_outer,
                                            const TolerancePolicy& tol) {
  if (prof.t.size() < 2 || prof.A.size() != prof.t.size() ||
      prof.L.size() != prof.t.size())
    throw DomainError("profile endpoints are required");
  if (!(cap > 0.0)) throw DomainError("capacity must be positive");
  const std::size_t n = prof.t.size();
  std::vector<CheckResult> out;

  // Level-wise isoperimetric inequality L^2 >= 4 pi A.
  {
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = prof.L[i] * prof.L[i];
      rhs[i] = 4.0 * kPi * prof.A[i];
    }
    out.push_back(make_result("iso_deficit_levelwise", prof.t, lhs, rhs, tol));
  }

  // Discrete monotonicity of the deficit along t, normalized by the largest
  // L^2 so annulus noise calibrates it. Only the free-boundary configuration
  // certifies the inequality; elsewhere it is reported as informational.
  {
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      scale = std::max(scale, prof.L[i] * prof.L[i]);
    CheckResult res;
    res.name = "iso_deficit_monotone";
    res.t_values.assign(prof.t.begin() + 1, prof.t.end());
    res.margins.resize(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      const double d_prev =
          prof.L[i - 1] * prof.L[i - 1] - 4.0 * kPi * prof.A[i - 1];
      const double d_here = prof.L[i] * prof.L[i] - 4.0 * kPi * prof.A[i];
      res.margins[i - 1] = (d_here - d_prev) / scale;
    }
    res.tol = tol.get(res.name);
    res.verdict = judge(res.margins, res.tol);
    res.informational = !gradient_constant_on_outer;
    if (res.informational)
      res.notes = "free-boundary hypothesis (|grad u| constant on the outer "
                  "boundary) not certified; monotonicity not asserted";
    out.push_back(std::move(res));
  }

  if (!gradient_constant_on_outer) return out;

  const double c_p = std::pow(cap / (2.0 * kPi), 1.0 / (p - 1.0));
  const double A0 = prof.A.front(), A1 = prof.A.back();
  const double L0 = prof.L.front(), L1 = prof.L.back();
  double mid, lhs_len, rhs_area;
  if (p == 2.0) {
    mid = 1.0 / c_p;
    lhs_len = std::log(L0 / L1);
    rhs_area = 0.5 * std::log(A0 / A1);
  } else {
    const double el = (p - 2.0) / (p - 1.0);
    const double ea = (p - 2.0) / (2.0 * (p - 1.0));
    mid = (2.0 - p) / (p - 1.0) / c_p;
    lhs_len = std::pow(L1 / (2.0 * kPi), el) - std::pow(L0 / (2.0 * kPi), el);
    rhs_area = std::pow(A1 / kPi, ea) - std::pow(A0 / kPi, ea);
  }
  out.push_back(make_result("iso_32_length", {0.0}, {mid}, {lhs_len}, tol));
  out.push_back(make_result("iso_32_area", {1.0}, {rhs_area}, {mid}, tol));

  // Endpoint deficit inequality (integrated monotonicity).
  {
    const double lhs = A0 / kPi - A1 / kPi;
    const double rhs = std::pow(L0 / (2.0 * kPi), 2.0) -
                       std::pow(L1 / (2.0 * kPi), 2.0);
    out.push_back(make_result("iso_34_endpoint", {1.0}, {lhs}, {rhs}, tol));
  }
  return out;
}

std::vector<CheckResult> check_green(const LevelProfile& prof, double p,
                                     const TolerancePolicy& tol) {
  require_derivatives(prof, true);
  const std::size_t n = prof.t.size();
  std::vector<CheckResult> out;

  auto series = [&](const char* name, auto lhs_fn, auto rhs_fn) {
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = lhs_fn(i);
      rhs[i] = rhs_fn(i);
    }
    out.push_back(make_result(name, prof.t, lhs, rhs, tol));
  };

  series(
      "green_41_area",
      [&](std::size_t i) { return prof.dA[i] * prof.d3A[i]; },
      [&](std::size_t i) { return (2.0 / p) * prof.d2A[i] * prof.d2A[i]; });
  series(
      "green_41_length",
      [&](std::size_t i) { return prof.L[i] * prof.d2L[i]; },
      [&](std::size_t i) { return prof.dL[i] * prof.dL[i] / (p - 1.0); });
  series(
      "green_42_first",
      [&](std::size_t i) { return prof.A[i] * prof.d2A[i]; },
      [&](std::size_t i) {
        return 0.5 * p / (p - 1.0) * prof.dA[i] * prof.dA[i];
      });
  series(
      "green_42_second",
      [&](std::size_t i) { return prof.d2A[i]; },
      [&](std::size_t i) {
        return 2.0 * kPi * p / (p - 1.0) *
               std::pow(prof.dA[i] * prof.dA[i], 1.0 / p);
      });
  series(
      "green_42_third",
      [&](std::size_t i) {
        return std::pow(prof.dA[i] * prof.dA[i], 1.0 - 1.0 / p);
      },
      [&](std::size_t i) { return 4.0 * kPi * prof.A[i]; });
  series(
      "green_holder",
      [&](std::size_t i) {
        return std::pow(std::max(-prof.dA[i], 0.0), 1.0 - 1.0 / p);
      },
      [&](std::size_t i) { return prof.L[i]; });
  series(
      "green_43_area",
      [&](std::size_t i) {
        return green_profile_bounds(prof.A[0], prof.L[0], p, prof.t[i])
            .A_bound;
      },
      [&](std::size_t i) { return prof.A[i]; });
  series(
      "green_43_length",
      [&](std::size_t i) {
        return green_profile_bounds(prof.A[0], prof.L[0], p, prof.t[i])
            .L_bound;
      },
      [&](std::size_t i) { return prof.L[i]; });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.informational && r.verdict == Verdict::Fail) return false;
  return true;
}

}  // namespace ringcap
