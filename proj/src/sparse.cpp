// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "ringcap/errors.hpp"
#include "ringcap/kernels.hpp"

namespace ringcap {

CsrMatrix CsrMatrix::from_pattern(
    std::int32_t n,
    const std::vector<std::pair<std::int32_t, std::int32_t>>& couplings) {
  std::vector<std::vector<std::int32_t>> adj(n);
  for (std::int32_t i = 0; i < n; ++i) adj[i].push_back(i);
  for (const auto& [i, j] : couplings) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  CsrMatrix m;
  m.n_ = n;
  m.row_ptr_.resize(n + 1, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    auto& row = adj[i];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    m.row_ptr_[i + 1] = m.row_ptr_[i] + static_cast<std::int32_t>(row.size());
  }
  m.cols_.reserve(m.row_ptr_[n]);
  for (std::int32_t i = 0; i < n; ++i)
    m.cols_.insert(m.cols_.end(), adj[i].begin(), adj[i].end());
  m.vals_.assign(m.cols_.size(), 0.0);
  return m;
}

void CsrMatrix::zero_values() {
  std::memset(vals_.data(), 0, vals_.size() * sizeof(double));
}

void CsrMatrix::add(std::int32_t i, std::int32_t j, double v) {
  const auto begin = cols_.begin() + row_ptr_[i];
  const auto end = cols_.begin() + row_ptr_[i + 1];
  const auto it = std::lower_bound(begin, end, j);
  vals_[static_cast<std::size_t>(it - cols_.begin())] += v;
}

void CsrMatrix::multiply(const double* x, double* y) const {
  kernels::spmv(row_ptr_.data(), cols_.data(), vals_.data(), n_, x, y);
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(n_);
  for (std::int32_t i = 0; i < n_; ++i) {
    const auto begin = cols_.begin() + row_ptr_[i];
    const auto end = cols_.begin() + row_ptr_[i + 1];
    const auto it = std::lower_bound(begin, end, i);
    d[i] = vals_[static_cast<std::size_t>(it - cols_.begin())];
  }
  return d;
}

CgResult pcg_solve(const CsrMatrix& A, const std::vector<double>& b,
                   std::vector<double>& x, double rel_tol, int max_iters) {
  const std::size_t n = b.size();
  x.resize(n, 0.0);
  std::vector<double> r(n), z(n), p(n), q(n), inv_diag(n);

  const std::vector<double> diag = A.diagonal();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(diag[i] > 0.0)) throw DomainError("system matrix is not SPD");
    inv_diag[i] = 1.0 / diag[i];
  }

  const double bnorm2 = kernels::dot(b.data(), b.data(), n);
  if (bnorm2 == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    return {0, 0.0, true};
  }
  const double stop2 = rel_tol * rel_tol * bnorm2;

  A.multiply(x.data(), r.data());
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
  kernels::hadamard(inv_diag.data(), r.data(), z.data(), n);
  p = z;
  double rz = kernels::dot(r.data(), z.data(), n);
  double rr = kernels::dot(r.data(), r.data(), n);

  int it = 0;
  while (rr > stop2 && it < max_iters) {
    A.multiply(p.data(), q.data());
    const double pq = kernels::dot(p.data(), q.data(), n);
    if (!(pq > 0.0)) break;  // loss of positive definiteness
    const double alpha = rz / pq;
    kernels::axpy(alpha, p.data(), x.data(), n);
    kernels::axpy(-alpha, q.data(), r.data(), n);
    kernels::hadamard(inv_diag.data(), r.data(), z.data(), n);
    const double rz_next = kernels::dot(r.data(), z.data(), n);
    kernels::xpby(z.data(), rz_next / rz, p.data(), n);
    rz = rz_next;
    rr = kernels::dot(r.data(), r.data(), n);
    ++it;
  }
  return {it, std::sqrt(rr / bnorm2), rr <= stop2};
}

}  // namespace ringcap
