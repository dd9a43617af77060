// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ringcap/kernels.hpp"
#include "ringcap/sparse.hpp"

namespace rk = ringcap::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("simd kernels agree with the scalar references") {
  std::mt19937_64 rng(42);
  // Sizes straddle the vector width, including remainders.
  for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 63u, 256u, 1001u}) {
    auto x = random_vector(rng, n);
    auto y = random_vector(rng, n);

    const double d_ref = rk::dot_ref(x.data(), y.data(), n);
    const double d = rk::dot(x.data(), y.data(), n);
    CHECK(d == doctest::Approx(d_ref).epsilon(1e-13));

    auto y1 = y, y2 = y;
    rk::axpy_ref(0.37, x.data(), y1.data(), n);
    rk::axpy(0.37, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-14));

    y1 = y;
    y2 = y;
    rk::xpby_ref(x.data(), -1.7, y1.data(), n);
    rk::xpby(x.data(), -1.7, y2.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-14));

    std::vector<double> h1(n), h2(n);
    rk::hadamard_ref(x.data(), y.data(), h1.data(), n);
    rk::hadamard(x.data(), y.data(), h2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(h2[i] == h1[i]);

    const double m_ref = rk::max_dot_ref(x.data(), y.data(), n, 0.6, -0.8);
    const double m = rk::max_dot(x.data(), y.data(), n, 0.6, -0.8);
    CHECK(m == doctest::Approx(m_ref).epsilon(1e-14));
  }
}

TEST_CASE("spmv variants agree on a random sparse matrix") {
  std::mt19937_64 rng(7);
  const std::int32_t n = 200;
  std::uniform_int_distribution<std::int32_t> pick(0, n - 1);
  std::vector<std::pair<std::int32_t, std::int32_t>> pattern;
  for (int k = 0; k < 900; ++k) {
    const std::int32_t i = pick(rng), j = pick(rng);
    if (i != j) pattern.emplace_back(i, j);
  }
  ringcap::CsrMatrix A = ringcap::CsrMatrix::from_pattern(n, pattern);
  {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::int32_t i = 0; i < n; ++i) {
      A.add(i, i, 4.0 + dist(rng));
      for (std::int32_t k = A.row_ptr()[i]; k < A.row_ptr()[i + 1]; ++k)
        if (A.cols()[k] != i) A.add(i, A.cols()[k], dist(rng));
    }
  }
  const std::vector<double> x = random_vector(rng, n);
  std::vector<double> y_ref(n), y(n);
  rk::spmv_ref(A.row_ptr().data(), A.cols().data(), A.values().data(), n,
               x.data(), y_ref.data());
  rk::spmv(A.row_ptr().data(), A.cols().data(), A.values().data(), n,
           x.data(), y.data());
  for (std::int32_t i = 0; i < n; ++i)
    CHECK(y[i] == doctest::Approx(y_ref[i]).epsilon(1e-13));
}

TEST_CASE("forcing the scalar path flips the active isa") {
  const std::string before = rk::active_isa();
  rk::force_scalar(true);
  CHECK(std::string(rk::active_isa()) == "scalar");
  rk::force_scalar(false);
  CHECK(std::string(rk::active_isa()) == before);
}

TEST_CASE("pcg solves an SPD system to tight tolerance") {
  // 1D Laplacian, solution known in closed form.
  const std::int32_t n = 64;
  std::vector<std::pair<std::int32_t, std::int32_t>> pattern;
  for (std::int32_t i = 0; i + 1 < n; ++i) pattern.emplace_back(i, i + 1);
  ringcap::CsrMatrix A = ringcap::CsrMatrix::from_pattern(n, pattern);
  for (std::int32_t i = 0; i < n; ++i) {
    A.add(i, i, 2.0);
    if (i + 1 < n) {
      A.add(i, i + 1, -1.0);
      A.add(i + 1, i, -1.0);
    }
  }
  std::vector<double> b(n, 1.0), x;
  const ringcap::CgResult res = ringcap::pcg_solve(A, b, x, 1e-12, 10000);
  CHECK(res.converged);
  std::vector<double> r(n);
  A.multiply(x.data(), r.data());
  for (std::int32_t i = 0; i < n; ++i)
    CHECK(r[i] == doctest::Approx(1.0).epsilon(1e-9));
}
