// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>
#include <omp.h>

#include <vector>

#include "sketchflow/kernels.hpp"
#include "sketchflow/rng.hpp"

using namespace sketchflow;

namespace {

std::vector<double> random_vec(size_t n, uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

}  // namespace

TEST_CASE("matmul variants match serial reference") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    int64_t m = 17 + static_cast<int64_t>(seed), k = 9, n = 13;
    auto a = random_vec(static_cast<size_t>(m * k), seed * 3 + 1);
    auto b = random_vec(static_cast<size_t>(k * n), seed * 3 + 2);
    auto bt = random_vec(static_cast<size_t>(n * k), seed * 3 + 3);

    std::vector<double> c1(static_cast<size_t>(m * n)), c2(static_cast<size_t>(m * n));
    kernels::matmul_nn(a.data(), b.data(), c1.data(), m, k, n);
    kernels::serial::matmul_nn(a.data(), b.data(), c2.data(), m, k, n);
    CHECK(c1 == c2);

    std::vector<double> d1(static_cast<size_t>(k * n)), d2(static_cast<size_t>(k * n));
    kernels::matmul_tn(a.data(), b.data(), d1.data(), m, k, n);
    kernels::serial::matmul_tn(a.data(), b.data(), d2.data(), m, k, n);
    CHECK(d1 == d2);

    std::vector<double> e1(static_cast<size_t>(m * n)), e2(static_cast<size_t>(m * n));
    kernels::matmul_nt(a.data(), bt.data(), e1.data(), m, k, n);
    kernels::serial::matmul_nt(a.data(), bt.data(), e2.data(), m, k, n);
    CHECK(e1 == e2);
  }
}

TEST_CASE("matmul against naive triple loop") {
  int64_t m = 7, k = 5, n = 6;
  auto a = random_vec(static_cast<size_t>(m * k), 11);
  auto b = random_vec(static_cast<size_t>(k * n), 12);
  std::vector<double> c(static_cast<size_t>(m * n));
  kernels::matmul_nn(a.data(), b.data(), c.data(), m, k, n);
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = 0; j < n; ++j) {
      double acc = 0;
      for (int64_t p = 0; p < k; ++p) acc += a[static_cast<size_t>(i * k + p)] * b[static_cast<size_t>(p * n + j)];
      CHECK(c[static_cast<size_t>(i * n + j)] == doctest::Approx(acc).epsilon(1e-12));
    }
  }
}

TEST_CASE("thread count does not change results") {
  int64_t m = 64, k = 33, n = 47;
  auto a = random_vec(static_cast<size_t>(m * k), 21);
  auto b = random_vec(static_cast<size_t>(k * n), 22);
  std::vector<double> c1(static_cast<size_t>(m * n)), c2(static_cast<size_t>(m * n));
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  kernels::matmul_nn(a.data(), b.data(), c1.data(), m, k, n);
  omp_set_num_threads(saved);
  kernels::matmul_nn(a.data(), b.data(), c2.data(), m, k, n);
  CHECK(c1 == c2);
}

TEST_CASE("nearest_sqdist matches serial") {
  auto q = random_vec(60, 31);
  auto r = random_vec(90, 32);
  std::vector<double> o1(20), o2(20);
  kernels::nearest_sqdist(q.data(), 20, r.data(), 30, o1.data());
  kernels::serial::nearest_sqdist(q.data(), 20, r.data(), 30, o2.data());
  CHECK(o1 == o2);
}

TEST_CASE("pairwise_l1 matches serial and direct sums") {
  auto q = random_vec(4 * 6, 41);
  auto t = random_vec(5 * 6, 42);
  std::vector<double> o1(20), o2(20);
  kernels::pairwise_l1(q.data(), 4, t.data(), 5, 6, o1.data());
  kernels::serial::pairwise_l1(q.data(), 4, t.data(), 5, 6, o2.data());
  CHECK(o1 == o2);
  double d00 = 0;
  for (int c = 0; c < 6; ++c) d00 += std::abs(q[static_cast<size_t>(c)] - t[static_cast<size_t>(c)]);
  CHECK(o1[0] == doctest::Approx(d00).epsilon(1e-14));
}
