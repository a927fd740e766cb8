// Copyright 2026 The sketchflow Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sketchflow/rng.hpp"

namespace sketchflow {

// Dense row-major tensor. Training runs in float, every test oracle in
// double; code that works on either is templated on the scalar type.
template <typename T>
struct TensorT {
  std::vector<int64_t> dims;
  std::vector<T> v;

  TensorT() = default;
  explicit TensorT(std::vector<int64_t> d) : dims(std::move(d)), v(count(dims), T(0)) {}
  TensorT(std::vector<int64_t> d, std::vector<T> values) : dims(std::move(d)), v(std::move(values)) {
    assert(static_cast<int64_t>(v.size()) == count(dims));
  }

  static int64_t count(const std::vector<int64_t>& d) {
    return std::accumulate(d.begin(), d.end(), int64_t{1}, std::multiplies<int64_t>());
  }

  static TensorT zeros(std::vector<int64_t> d) { return TensorT(std::move(d)); }

  static TensorT full(std::vector<int64_t> d, T value) {
    TensorT t(std::move(d));
    std::fill(t.v.begin(), t.v.end(), value);
    return t;
  }

  static TensorT scalar(T value) { return TensorT({1}, {value}); }

  static TensorT randn(std::vector<int64_t> d, RandomStream& rng, double stddev = 1.0) {
    TensorT t(std::move(d));
    for (auto& x : t.v) x = static_cast<T>(rng.normal(0.0, stddev));
    return t;
  }

  int64_t size() const { return static_cast<int64_t>(v.size()); }
  int rank() const { return static_cast<int>(dims.size()); }
  int64_t rows() const { return rank() >= 1 ? dims[0] : 1; }
  int64_t cols() const { return rank() >= 2 ? dims[1] : 1; }

  T& at(int64_t i, int64_t j) { return v[static_cast<size_t>(i * cols() + j)]; }
  T at(int64_t i, int64_t j) const { return v[static_cast<size_t>(i * cols() + j)]; }

  T item() const {
    assert(size() == 1);
    return v[0];
  }

  bool finite() const {
    for (T x : v)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }

  bool same_shape(const TensorT& o) const { return dims == o.dims; }

  template <typename U>
  TensorT<U> cast() const {
    TensorT<U> out;
    out.dims = dims;
    out.v.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.v[i] = static_cast<U>(v[i]);
    return out;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << "]";
    return os.str();
  }
};

using TensorF = TensorT<float>;
using TensorD = TensorT<double>;

}  // namespace sketchflow
