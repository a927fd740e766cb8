// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#include "sketchflow/kernels.hpp"

#include <algorithm>
#include <limits>

namespace sketchflow::kernels {

namespace detail {

// Row-range bodies shared by the parallel and single-thread paths. noinline
// keeps codegen identical at every call site, so results do not depend on
// the thread count.

template <typename T>
__attribute__((noinline)) void matmul_nn_rows(const T* a, const T* b, T* c, int64_t i0,
                                              int64_t i1, int64_t k, int64_t n) {
  for (int64_t i = i0; i < i1; ++i) {
    const T* ai = a + i * k;
    T* ci = c + i * n;
    for (int64_t j = 0; j < n; ++j) ci[j] = T(0);
    for (int64_t p = 0; p < k; ++p) {
      T av = ai[p];
      const T* bp = b + p * n;
      for (int64_t j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

template <typename T>
__attribute__((noinline)) void matmul_tn_rows(const T* a, const T* b, T* c, int64_t r0,
                                              int64_t r1, int64_t m, int64_t k, int64_t n) {
  for (int64_t r = r0; r < r1; ++r) {
    T* cr = c + r * n;
    for (int64_t j = 0; j < n; ++j) cr[j] = T(0);
    for (int64_t p = 0; p < m; ++p) {
      T av = a[p * k + r];
      const T* bp = b + p * n;
      for (int64_t j = 0; j < n; ++j) cr[j] += av * bp[j];
    }
  }
}

template <typename T>
__attribute__((noinline)) void matmul_nt_rows(const T* a, const T* b, T* c, int64_t i0,
                                              int64_t i1, int64_t k, int64_t l) {
  for (int64_t i = i0; i < i1; ++i) {
    const T* ai = a + i * k;
    T* ci = c + i * l;
    for (int64_t j = 0; j < l; ++j) {
      const T* bj = b + j * k;
      T acc = T(0);
      for (int64_t p = 0; p < k; ++p) acc += ai[p] * bj[p];
      ci[j] = acc;
    }
  }
}

template <typename T>
__attribute__((noinline)) void nearest_rows(const T* query, int64_t i0, int64_t i1,
                                            const T* ref, int64_t n, T* out) {
  for (int64_t i = i0; i < i1; ++i) {
    T qx = query[i * 3], qy = query[i * 3 + 1], qz = query[i * 3 + 2];
    T best = std::numeric_limits<T>::infinity();
    for (int64_t j = 0; j < n; ++j) {
      T dx = qx - ref[j * 3];
      T dy = qy - ref[j * 3 + 1];
      T dz = qz - ref[j * 3 + 2];
      T d = dx * dx + dy * dy + dz * dz;
      if (d < best) best = d;
    }
    out[i] = best;
  }
}

template <typename T>
__attribute__((noinline)) void pairwise_l1_rows(const T* q, int64_t i0, int64_t i1, const T* t,
                                                int64_t b, int64_t cols, T* out) {
  for (int64_t i = i0; i < i1; ++i) {
    const T* qi = q + i * cols;
    for (int64_t j = 0; j < b; ++j) {
      const T* tj = t + j * cols;
      T acc = T(0);
      for (int64_t c = 0; c < cols; ++c) acc += std::abs(qi[c] - tj[c]);
      out[i * b + j] = acc;
    }
  }
}

}  // namespace detail

template <typename T>
void matmul_nn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < m; ++i) detail::matmul_nn_rows(a, b, c, i, i + 1, k, n);
}

template <typename T>
void matmul_tn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t r = 0; r < k; ++r) detail::matmul_tn_rows(a, b, c, r, r + 1, m, k, n);
}

template <typename T>
void matmul_nt(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t l) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < m; ++i) detail::matmul_nt_rows(a, b, c, i, i + 1, k, l);
}

template <typename T>
void transpose(const T* in, T* out, int64_t rows, int64_t cols) {
  for (int64_t i = 0; i < rows; ++i)
    for (int64_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
}

template <typename T>
void nearest_sqdist(const T* query, int64_t m, const T* ref, int64_t n, T* out) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < m; ++i) detail::nearest_rows(query, i, i + 1, ref, n, out);
}

template <typename T>
void pairwise_l1(const T* q, int64_t a, const T* t, int64_t b, int64_t cols, T* out) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < a; ++i) detail::pairwise_l1_rows(q, i, i + 1, t, b, cols, out);
}

namespace serial {

template <typename T>
void matmul_nn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n) {
  detail::matmul_nn_rows(a, b, c, 0, m, k, n);
}

template <typename T>
void matmul_tn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n) {
  detail::matmul_tn_rows(a, b, c, 0, k, m, k, n);
}

template <typename T>
void matmul_nt(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t l) {
  detail::matmul_nt_rows(a, b, c, 0, m, k, l);
}

template <typename T>
void nearest_sqdist(const T* query, int64_t m, const T* ref, int64_t n, T* out) {
  detail::nearest_rows(query, 0, m, ref, n, out);
}

template <typename T>
void pairwise_l1(const T* q, int64_t a, const T* t, int64_t b, int64_t cols, T* out) {
  detail::pairwise_l1_rows(q, 0, a, t, b, cols, out);
}

}  // namespace serial

#define SKETCHFLOW_INSTANTIATE(T)                                                       \
  template void matmul_nn<T>(const T*, const T*, T*, int64_t, int64_t, int64_t);        \
  template void matmul_tn<T>(const T*, const T*, T*, int64_t, int64_t, int64_t);        \
  template void matmul_nt<T>(const T*, const T*, T*, int64_t, int64_t, int64_t);        \
  template void transpose<T>(const T*, T*, int64_t, int64_t);                           \
  template void nearest_sqdist<T>(const T*, int64_t, const T*, int64_t, T*);            \
  template void pairwise_l1<T>(const T*, int64_t, const T*, int64_t, int64_t, T*);      \
  template void serial::matmul_nn<T>(const T*, const T*, T*, int64_t, int64_t,          \
                                     int64_t);                                          \
  template void serial::matmul_tn<T>(const T*, const T*, T*, int64_t, int64_t,          \
                                     int64_t);                                          \
  template void serial::matmul_nt<T>(const T*, const T*, T*, int64_t, int64_t,          \
                                     int64_t);                                          \
  template void serial::nearest_sqdist<T>(const T*, int64_t, const T*, int64_t, T*);    \
  template void serial::pairwise_l1<T>(const T*, int64_t, const T*, int64_t, int64_t,   \
                                       T*);

SKETCHFLOW_INSTANTIATE(float)
SKETCHFLOW_INSTANTIATE(double)

#undef SKETCHFLOW_INSTANTIATE

}  // namespace sketchflow::kernels
