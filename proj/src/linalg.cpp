// Copyright 2026 The greenprior Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "greenprior/linalg.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "greenprior/error.hpp"

namespace greenprior {

LuFactorization::LuFactorization(std::vector<double> a, std::size_t n)
    : n_(n), lu_(std::move(a)), piv_(n) {
  if (lu_.size() != n * n) {
    throw DataError("LU: matrix size does not match dimension");
  }
  std::iota(piv_.begin(), piv_.end(), std::size_t{0});
  double max_pivot = 0.0;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t best = k;
    double best_abs = std::fabs(lu_[k * n_ + k]);
    for (std::size_t r = k + 1; r < n_; ++r) {
      double v = std::fabs(lu_[r * n_ + k]);
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best_abs > max_pivot) max_pivot = best_abs;
    if (best_abs <= 1e-12 * max_pivot || best_abs == 0.0) {
      throw SingularSystem();
    }
    if (best != k) {
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(lu_[k * n_ + c], lu_[best * n_ + c]);
      }
      std::swap(piv_[k], piv_[best]);
    }
    const double pivot = lu_[k * n_ + k];
    for (std::size_t r = k + 1; r < n_; ++r) {
      const double factor = lu_[r * n_ + k] / pivot;
      lu_[r * n_ + k] = factor;
      for (std::size_t c = k + 1; c < n_; ++c) {
        lu_[r * n_ + c] -= factor * lu_[k * n_ + c];
      }
    }
  }
}

std::vector<double> LuFactorization::solve(const std::vector<double>& b) const {
  if (b.size() != n_) throw DataError("LU: rhs size mismatch");
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = b[piv_[i]];
  // Forward: L y = P b (unit diagonal).
  for (std::size_t i = 1; i < n_; ++i) {
    double sum = x[i];
    for (std::size_t j = 0; j < i; ++j) sum -= lu_[i * n_ + j] * x[j];
    x[i] = sum;
  }
  // Backward: U x = y.
  for (std::size_t ii = n_; ii-- > 0;) {
    double sum = x[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) sum -= lu_[ii * n_ + j] * x[j];
    x[ii] = sum / lu_[ii * n_ + ii];
  }
  return x;
}

std::vector<double> solve_dense(std::vector<double> a,
                                const std::vector<double>& b) {
  LuFactorization lu(std::move(a), b.size());
  return lu.solve(b);
}

std::vector<double> cholesky_lower(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) {
    throw DataError("cholesky: matrix size does not match dimension");
  }
  std::vector<double> l(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
      if (i == j) {
        if (sum <= 0.0) {
          throw NumericError("cholesky: matrix is not positive definite");
        }
        l[i * n + i] = std::sqrt(sum);
      } else {
        l[i * n + j] = sum / l[j * n + j];
      }
    }
  }
  return l;
}

}  // namespace greenprior
