// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace sketchflow::kernels {

// OpenMP-parallel numeric kernels. Parallelism is always over independent
// output rows, so results are bitwise identical for any thread count: the
// per-row work runs through one shared (noinline) routine in a fixed order.
//
// kernels::serial holds independent naive implementations kept as test
// references; tools/bench_kernels compares the two.

// c[m,n] = a[m,k] * b[k,n]
template <typename T>
void matmul_nn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n);

// c[k,n] = a[m,k]^T * b[m,n]
template <typename T>
void matmul_tn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n);

// c[m,l] = a[m,k] * b[l,k]^T
template <typename T>
void matmul_nt(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t l);

// out[j,i] = in[i,j]
template <typename T>
void transpose(const T* in, T* out, int64_t rows, int64_t cols);

// For each of the m query points (xyz triples), the squared distance to its
// nearest among the n reference points.
template <typename T>
void nearest_sqdist(const T* query, int64_t m, const T* ref, int64_t n, T* out);

// d[i,j] = sum_c |q[i,c] - t[j,c]|
template <typename T>
void pairwise_l1(const T* q, int64_t a, const T* t, int64_t b, int64_t cols, T* out);

namespace serial {

template <typename T>
void matmul_nn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n);

template <typename T>
void matmul_tn(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n);

template <typename T>
void matmul_nt(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t l);

template <typename T>
void nearest_sqdist(const T* query, int64_t m, const T* ref, int64_t n, T* out);

template <typename T>
void pairwise_l1(const T* q, int64_t a, const T* t, int64_t b, int64_t cols, T* out);

}  // namespace serial

}  // namespace sketchflow::kernels
