// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace ringcap {

// Symmetric sparse matrix in CSR form. The sparsity pattern is built once;
// values can be refilled in place across nonlinear iterations.
class CsrMatrix {
 public:
  // Pattern from an edge list (i, j) of off-diagonal couplings; the diagonal
  // is always present. Entries are deduplicated and column-sorted.
  static CsrMatrix from_pattern(
      std::int32_t n, const std::vector<std::pair<std::int32_t, std::int32_t>>&
                          couplings);

  std::int32_t rows() const { return n_; }
  void zero_values();
  // Accumulate v into entry (i, j); the entry must exist in the pattern.
  void add(std::int32_t i, std::int32_t j, double v);
  void multiply(const double* x, double* y) const;
  std::vector<double> diagonal() const;

  const std::vector<std::int32_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::int32_t>& cols() const { return cols_; }
  const std::vector<double>& values() const { return vals_; }

 private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> row_ptr_;
  std::vector<std::int32_t> cols_;
  std::vector<double> vals_;
};

struct CgResult {
  int iterations;
  double relative_residual;
  bool converged;
};

// Jacobi-preconditioned conjugate gradients for SPD systems. `x` holds the
// warm start on entry and the solution on exit. Convergence test is
// ||r|| <= rel_tol * ||b||.
CgResult pcg_solve(const CsrMatrix& A, const std::vector<double>& b,
                   std::vector<double>& x, double rel_tol, int max_iters);

}  // namespace ringcap
