// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "ringcap/kernels.hpp"

namespace ringcap::kernels {

double dot_ref(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_ref(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpby_ref(const double* x, double b, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

void hadamard_ref(const double* x, const double* y, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void spmv_ref(const std::int32_t* row_ptr, const std::int32_t* cols,
              const double* vals, std::int32_t nrows, const double* x,
              double* y) {
  for (std::int32_t r = 0; r < nrows; ++r) {
    double acc = 0.0;
    for (std::int32_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
      acc += vals[k] * x[cols[k]];
    y[r] = acc;
  }
}

double max_dot_ref(const double* xs, const double* ys, std::size_t n, double c,
                   double s) {
  double best = xs[0] * c + ys[0] * s;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = xs[i] * c + ys[i] * s;
    if (d > best) best = d;
  }
  return best;
}

#if defined(RINGCAP_HAVE_AVX2_TU)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void xpby_avx2(const double* x, double b, double* y, std::size_t n);
void hadamard_avx2(const double* x, const double* y, double* out,
                   std::size_t n);
void spmv_avx2(const std::int32_t* row_ptr, const std::int32_t* cols,
               const double* vals, std::int32_t nrows, const double* x,
               double* y);
double max_dot_avx2(const double* xs, const double* ys, std::size_t n,
                    double c, double s);
#endif

dot_fn dot = dot_ref;
axpy_fn axpy = axpy_ref;
xpby_fn xpby = xpby_ref;
hadamard_fn hadamard = hadamard_ref;
spmv_fn spmv = spmv_ref;
max_dot_fn max_dot = max_dot_ref;

namespace {

const char* g_isa = "scalar";

bool avx2_available() {
#if defined(RINGCAP_HAVE_AVX2_TU) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void select(bool want_simd) {
#if defined(RINGCAP_HAVE_AVX2_TU)
  if (want_simd && avx2_available()) {
    dot = dot_avx2;
    axpy = axpy_avx2;
    xpby = xpby_avx2;
    hadamard = hadamard_avx2;
    spmv = spmv_avx2;
    max_dot = max_dot_avx2;
    g_isa = "avx2";
    return;
  }
#else
  (void)want_simd;
#endif
  dot = dot_ref;
  axpy = axpy_ref;
  xpby = xpby_ref;
  hadamard = hadamard_ref;
  spmv = spmv_ref;
  max_dot = max_dot_ref;
  g_isa = "scalar";
}

struct Init {
  Init() { select(true); }
};
const Init init_once;

}  // namespace

const char* active_isa() { return g_isa; }

void force_scalar(bool on) { select(!on); }

}  // namespace ringcap::kernels
