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

#ifndef GREENPRIOR_LINALG_HPP
#define GREENPRIOR_LINALG_HPP

#include <cstddef>
#include <vector>

namespace greenprior {

// Dense LU with partial pivoting for the small SPD-ish kriging systems
// (n <= a few dozen). Factor once per station set, back-substitute per cell.
// Throws SingularSystem when a pivot falls below 1e-12 times the largest
// pivot magnitude seen.
class LuFactorization {
 public:
  // a is row-major n x n; consumed by value.
  LuFactorization(std::vector<double> a, std::size_t n);

  std::size_t size() const { return n_; }

  // Solves A x = b.
  std::vector<double> solve(const std::vector<double>& b) const;

 private:
  std::size_t n_;
  std::vector<double> lu_;        // packed L\U
  std::vector<std::size_t> piv_;  // row permutation
};

// One-shot convenience wrapper.
std::vector<double> solve_dense(std::vector<double> a,
                                const std::vector<double>& b);

// Cholesky factor L (lower) of a symmetric positive definite matrix,
// row-major. Used to draw correlated Gaussian samples at station sites.
std::vector<double> cholesky_lower(std::vector<double> a, std::size_t n);

}  // namespace greenprior

#endif  // GREENPRIOR_LINALG_HPP
