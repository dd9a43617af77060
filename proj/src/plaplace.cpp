// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/plaplace.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "ringcap/errors.hpp"
#include "ringcap/levelflow.hpp"
#include "ringcap/parallel.hpp"
#include "ringcap/sparse.hpp"

namespace ringcap {

namespace {

// Geometry of one P1 element: area and the constant basis gradients.
struct ElementGeometry {
  double area;
  std::array<Vec2, 3> grad;
};

std::vector<ElementGeometry> element_geometry(const TriMesh& mesh) {
  std::vector<ElementGeometry> geo(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto p = mesh.triangle_points(static_cast<std::int32_t>(t));
    const double a2 = cross(p[1] - p[0], p[2] - p[0]);
    geo[t].area = 0.5 * a2;
    for (int k = 0; k < 3; ++k) {
      const Vec2 e = p[(k + 2) % 3] - p[(k + 1) % 3];
      geo[t].grad[k] = {-e.y / a2, e.x / a2};
    }
  }
  return geo;
}

struct DofMap {
  std::vector<std::int32_t> index;  // -1 for Dirichlet vertices
  std::vector<double> fixed;        // boundary value (1 inner, 0 outer)
  std::int32_t n_free = 0;
};

DofMap build_dof_map(const TriMesh& mesh) {
  DofMap map;
  map.index.assign(mesh.vertices.size(), -1);
  map.fixed.assign(mesh.vertices.size(), 0.0);
  bool has_inner = false, has_outer = false;
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    switch (mesh.tags[v]) {
      case BoundaryTag::Interior:
        map.index[v] = map.n_free++;
        break;
      case BoundaryTag::Inner:
        map.fixed[v] = 1.0;
        has_inner = true;
        break;
      case BoundaryTag::Outer:
        map.fixed[v] = 0.0;
        has_outer = true;
        break;
    }
  }
  if (!has_inner || !has_outer)
    throw DomainError("mesh must carry both INNER and OUTER boundary tags");
  return map;
}

// Assemble the weighted stiffness system K u = b with Dirichlet elimination.
// Weights are per-triangle; element matrices are precomputed in parallel,
// the scatter stays sequential so the result is bit-stable.
void assemble(const TriMesh& mesh, const std::vector<ElementGeometry>& geo,
              const DofMap& dof, const std::vector<double>& weights,
              CsrMatrix& A, std::vector<double>& b) {
  A.zero_values();
  b.assign(dof.n_free, 0.0);
  std::vector<std::array<double, 6>> local(mesh.triangles.size());
  parallel_for(mesh.triangles.size(), [&](std::size_t t) {
    const ElementGeometry& g = geo[t];
    const double w = weights[t] * g.area;
    int idx = 0;
    for (int a = 0; a < 3; ++a)
      for (int c = a; c < 3; ++c)
        local[t][idx++] = w * dot(g.grad[a], g.grad[c]);
  });
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const Triangle& tri = mesh.triangles[t];
    int idx = 0;
    for (int a = 0; a < 3; ++a) {
      for (int c = a; c < 3; ++c) {
        const double s = local[t][idx++];
        const std::int32_t va = tri.v[a], vc = tri.v[c];
        const std::int32_t ia = dof.index[va], ic = dof.index[vc];
        if (ia >= 0 && ic >= 0) {
          A.add(ia, ic, s);
          if (a != c) A.add(ic, ia, s);
        } else if (ia >= 0) {
          b[ia] -= s * dof.fixed[vc];
        } else if (ic >= 0) {
          b[ic] -= s * dof.fixed[va];
        }
      }
    }
  }
}

std::vector<double> gradient_norm2(const TriMesh& mesh,
                                   const std::vector<ElementGeometry>& geo,
                                   const std::vector<double>& values) {
  std::vector<double> g2(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const Triangle& tri = mesh.triangles[t];
    Vec2 g{0.0, 0.0};
    for (int k = 0; k < 3; ++k)
      g = g + values[tri.v[k]] * geo[t].grad[k];
    g2[t] = dot(g, g);
  }
  return g2;
}

double energy_from_g2(const std::vector<ElementGeometry>& geo,
                      const std::vector<double>& g2, double p, double eps) {
  double e = 0.0;
  for (std::size_t t = 0; t < g2.size(); ++t)
    e += geo[t].area * std::pow(g2[t] + eps * eps, 0.5 * p);
  return e;
}

}  // namespace

std::vector<Vec2> triangle_gradients(const TriMesh& mesh,
                                     const std::vector<double>& values) {
  const auto geo = element_geometry(mesh);
  std::vector<Vec2> grads(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const Triangle& tri = mesh.triangles[t];
    Vec2 g{0.0, 0.0};
    for (int k = 0; k < 3; ++k)
      g = g + values[tri.v[k]] * geo[t].grad[k];
    grads[t] = g;
  }
  return grads;
}

double regularized_energy(const TriMesh& mesh,
                          const std::vector<double>& values, double p,
                          double eps) {
  const auto geo = element_geometry(mesh);
  return energy_from_g2(geo, gradient_norm2(mesh, geo, values), p, eps);
}

double ScalarField::eval(const TriMesh& mesh, Vec2 z) const {
  const auto loc = mesh.locate(z);
  if (!loc) throw DomainError("evaluation point is outside the mesh");
  const Triangle& tri = mesh.triangles[loc->triangle];
  double v = 0.0;
  for (int k = 0; k < 3; ++k) v += loc->bary[k] * values[tri.v[k]];
  return v;
}

ScalarField solve_potential(const TriMesh& mesh, const SolveParams& params) {
  if (!(params.p > 1.0 && params.p <= 2.0))
    throw DomainError("exponent p must lie in (1, 2]");
  if (!(params.tol > 0.0)) throw DomainError("tol must be positive");
  for (std::size_t i = 1; i < params.eps_schedule.size(); ++i)
    if (!(params.eps_schedule[i] > 0.0 &&
          params.eps_schedule[i] < params.eps_schedule[i - 1]))
      throw DomainError("eps schedule must be positive and decreasing");

  const auto geo = element_geometry(mesh);
  const DofMap dof = build_dof_map(mesh);

  std::vector<std::pair<std::int32_t, std::int32_t>> couplings;
  couplings.reserve(mesh.triangles.size() * 3);
  for (const Triangle& tri : mesh.triangles)
    for (int a = 0; a < 3; ++a)
      for (int c = a + 1; c < 3; ++c)
        if (dof.index[tri.v[a]] >= 0 && dof.index[tri.v[c]] >= 0)
          couplings.emplace_back(dof.index[tri.v[a]], dof.index[tri.v[c]]);
  CsrMatrix A = CsrMatrix::from_pattern(dof.n_free, couplings);
  std::vector<double> b;

  std::vector<double> full(mesh.vertices.size());
  for (std::size_t v = 0; v < full.size(); ++v) full[v] = dof.fixed[v];
  std::vector<double> x(dof.n_free, 0.0);

  auto scatter = [&](const std::vector<double>& free_vals) {
    for (std::size_t v = 0; v < full.size(); ++v)
      if (dof.index[v] >= 0) full[v] = free_vals[dof.index[v]];
  };
  auto run_cg = [&]() {
    const CgResult res =
        pcg_solve(A, b, x, params.cg_tol, params.cg_max_iters);
    if (!res.converged)
      throw ConvergenceError("linear solver stalled", res.relative_residual);
    scatter(x);
  };

  // Linear (p = 2) solve; exact for p = 2 and the warm start otherwise.
  std::vector<double> weights(mesh.triangles.size(), 1.0);
  assemble(mesh, geo, dof, weights, A, b);
  run_cg();

  ScalarField field;
  if (params.p == 2.0) {
    field.values = std::move(full);
    field.iterations = 1;
    field.final_residual = 0.0;
    field.eps_min = 0.0;
    return field;
  }

  // Gradient scale for the regularization continuation: RMS gradient of the
  // p = 2 solve.
  double total_area = 0.0;
  double energy2 = 0.0;
  {
    const std::vector<double> g2 = gradient_norm2(mesh, geo, full);
    for (std::size_t t = 0; t < g2.size(); ++t) {
      energy2 += geo[t].area * g2[t];
      total_area += geo[t].area;
    }
  }
  const double grad_scale = std::sqrt(energy2 / total_area);

  int total_steps = 0;
  double rel_change = 0.0;
  double eps_abs = 0.0;
  const double exponent = 0.5 * (params.p - 2.0);
  for (std::size_t level = 0; level < params.eps_schedule.size(); ++level) {
    eps_abs = params.eps_schedule[level] * grad_scale;
    std::vector<double> g2 = gradient_norm2(mesh, geo, full);
    double e_prev = energy_from_g2(geo, g2, params.p, eps_abs);
    bool settled = false;
    for (int step = 0; step < params.max_iters; ++step) {
      for (std::size_t t = 0; t < g2.size(); ++t)
        weights[t] = std::pow(g2[t] + eps_abs * eps_abs, exponent);
      assemble(mesh, geo, dof, weights, A, b);
      run_cg();
      g2 = gradient_norm2(mesh, geo, full);
      const double e = energy_from_g2(geo, g2, params.p, eps_abs);
      if (e > e_prev * (1.0 + 1e-9))
        throw ConvergenceError("fixed-point energy increased",
                               (e - e_prev) / e_prev);
      rel_change = std::abs(e_prev - e) / std::max(e, 1e-300);
      e_prev = e;
      ++total_steps;
      if (rel_change <= params.tol) {
        settled = true;
        break;
      }
    }
    if (!settled && level + 1 == params.eps_schedule.size())
      throw ConvergenceError(
          "fixed-point iteration did not reach tolerance at the final "
          "regularization level",
          rel_change);
  }

  field.values = std::move(full);
  field.iterations = total_steps;
  field.final_residual = rel_change;
  field.eps_min = eps_abs;
  return field;
}

CapacityReport capacity(const TriMesh& mesh, const ScalarField& field,
                        double p, double t_probe) {
  if (!(t_probe > 0.0 && t_probe < 1.0))
    throw DomainError("t_probe must lie in (0, 1)");
  const double cap_energy =
      regularized_energy(mesh, field.values, p, field.eps_min);
  const double cap_flux = level_flux(mesh, field, p, t_probe);
  CapacityReport rep;
  rep.p = p;
  rep.cap_energy = cap_energy;
  rep.cap_flux = cap_flux;
  rep.p_modulus = p_modulus(cap_energy, p);
  rep.iterations = field.iterations;
  rep.residual = field.final_residual;
  rep.t_probe = t_probe;
  return rep;
}

double p_modulus(double cap, double p) {
  if (!(cap > 0.0)) throw DomainError("capacity must be positive");
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("exponent p must lie in (1, 2]");
  return std::pow(cap, 1.0 / (1.0 - p));
}

}  // namespace ringcap
