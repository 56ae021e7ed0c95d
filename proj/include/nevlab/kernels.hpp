// Copyright 2026 The nevlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path selected
// by Exec::Serial; the parallel path maps with OpenMP and then reduces in index
// order, so both paths return bit-identical results for the same input.

#include <omp.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <numbers>
#include <vector>

#include "nevlab/error.hpp"

namespace nevlab::kernels {

enum class Exec { Serial, Parallel };

/// Evaluates fn(k) for k in [0, n) into out[k].
template <typename T, typename Fn>
void map_indexed(std::size_t n, Fn&& fn, std::vector<T>& out, Exec exec) {
  out.resize(n);
  if (exec == Exec::Serial || n < 64) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(nevlab_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Same as map_indexed but with dynamic scheduling for uneven work items.
template <typename T, typename Fn>
void map_dynamic(std::size_t n, Fn&& fn, std::vector<T>& out, Exec exec) {
  out.resize(n);
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(nevlab_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// Point k of n equally spaced nodes on |z - center| = radius.
inline std::complex<double> circle_node(std::complex<double> center, double radius, std::size_t k,
                                        std::size_t n) {
  double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return center + std::polar(radius, theta);
}

/// Trapezoid mean (1/n) sum_k fn(z_k) over n circle nodes.
template <typename T, typename Fn>
T circle_mean(Fn&& fn, std::complex<double> center, double radius, std::size_t n, Exec exec) {
  std::vector<T> values;
  map_indexed<T>(
      n, [&](std::size_t k) { return fn(circle_node(center, radius, k, n)); }, values, exec);
  T sum{};
  for (const T& v : values) sum += v;
  return sum / static_cast<double>(n);
}

template <typename T>
struct AdaptiveMean {
  T value{};
  std::size_t nodes = 0;
  double last_change = 0.0;
};

/// Trapezoid mean with node doubling from `start` until two successive means
/// differ by at most `tol`; reuses the previous nodes at each doubling.
/// Throws EstimationError when `max_nodes` is reached first.
template <typename T, typename Fn>
AdaptiveMean<T> circle_mean_adaptive(Fn&& fn, std::complex<double> center, double radius,
                                     double tol, Exec exec, std::size_t start = 64,
                                     std::size_t max_nodes = std::size_t{1} << 18) {
  std::vector<T> values;
  std::size_t n = start;
  map_indexed<T>(
      n, [&](std::size_t k) { return fn(circle_node(center, radius, k, n)); }, values, exec);
  T sum{};
  for (const T& v : values) sum += v;
  T mean = sum / static_cast<double>(n);
  while (2 * n <= max_nodes) {
    std::size_t m = 2 * n;
    map_indexed<T>(
        n, [&](std::size_t k) { return fn(circle_node(center, radius, 2 * k + 1, m)); }, values,
        exec);
    for (const T& v : values) sum += v;
    T next = sum / static_cast<double>(m);
    double change = std::abs(next - mean);
    mean = next;
    n = m;
    if (change <= tol) return {mean, n, change};
  }
  throw EstimationError("circle quadrature did not reach tolerance within " +
                        std::to_string(max_nodes) + " nodes");
}

}  // namespace nevlab::kernels
