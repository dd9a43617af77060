// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the linear solver, the assembly pass and
// the support-function sampler. Every kernel has a scalar reference
// implementation and (on x86-64) an AVX2 variant; the active set is chosen
// once at startup from cpuid and can be overridden for testing.

namespace ringcap::kernels {

// y'x
using dot_fn = double (*)(const double* x, const double* y, std::size_t n);
// y += a*x
using axpy_fn = void (*)(double a, const double* x, double* y, std::size_t n);
// y = x + b*y
using xpby_fn = void (*)(const double* x, double b, double* y, std::size_t n);
// out = x .* y  (element-wise)
using hadamard_fn = void (*)(const double* x, const double* y, double* out,
                             std::size_t n);
// y = A*x for CSR (row_ptr has nrows+1 entries)
using spmv_fn = void (*)(const std::int32_t* row_ptr, const std::int32_t* cols,
                         const double* vals, std::int32_t nrows,
                         const double* x, double* y);
// max over i of xs[i]*c + ys[i]*s (support function sample)
using max_dot_fn = double (*)(const double* xs, const double* ys,
                              std::size_t n, double c, double s);

extern dot_fn dot;
extern axpy_fn axpy;
extern xpby_fn xpby;
extern hadamard_fn hadamard;
extern spmv_fn spmv;
extern max_dot_fn max_dot;

// Scalar reference implementations (always available; used as oracles in the
// equivalence tests).
double dot_ref(const double* x, const double* y, std::size_t n);
void axpy_ref(double a, const double* x, double* y, std::size_t n);
void xpby_ref(const double* x, double b, double* y, std::size_t n);
void hadamard_ref(const double* x, const double* y, double* out,
                  std::size_t n);
void spmv_ref(const std::int32_t* row_ptr, const std::int32_t* cols,
              const double* vals, std::int32_t nrows, const double* x,
              double* y);
double max_dot_ref(const double* xs, const double* ys, std::size_t n, double c,
                   double s);

// Name of the instruction set behind the active function pointers
// ("avx2" or "scalar").
const char* active_isa();

// Force the scalar reference set (or restore auto-detection). Test hook.
void force_scalar(bool on);

}  // namespace ringcap::kernels
