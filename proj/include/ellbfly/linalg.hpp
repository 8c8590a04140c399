// Copyright 2026 The ellbfly Authors.
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

#include <cstddef>
#include <utility>
#include <vector>

#include "ellbfly/error.hpp"

namespace ellbfly {

// Dense linear algebra over an exact field, for oracles and precomputation.
template <class F>
using Matrix = std::vector<std::vector<typename F::rep>>;

template <class F>
std::vector<typename F::rep> mat_vec(const F& K, const Matrix<F>& A, const std::vector<typename F::rep>& x) {
  std::vector<typename F::rep> y(A.size(), K.zero());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] = K.add(y[i], K.mul(A[i][j], x[j]));
  return y;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& A) {
  if (A.empty()) return {};
  Matrix<F> B(A[0].size(), std::vector<typename F::rep>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) B[j][i] = A[i][j];
  return B;
}

// Inverse by Gauss-Jordan elimination; throws SingularError.
template <class F>
Matrix<F> inverse(const F& K, Matrix<F> A) {
  const std::size_t n = A.size();
  Matrix<F> I(n, std::vector<typename F::rep>(n, K.zero()));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = K.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && K.is_zero(A[piv][c])) ++piv;
    if (piv == n) throw SingularError("singular matrix");
    std::swap(A[c], A[piv]);
    std::swap(I[c], I[piv]);
    auto iv = K.inv(A[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      A[c][j] = K.mul(A[c][j], iv);
      I[c][j] = K.mul(I[c][j], iv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || K.is_zero(A[r][c])) continue;
      auto f = A[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[r][j] = K.sub(A[r][j], K.mul(f, A[c][j]));
        I[r][j] = K.sub(I[r][j], K.mul(f, I[c][j]));
      }
    }
  }
  return I;
}

template <class F>
std::vector<typename F::rep> solve(const F& K, const Matrix<F>& A, const std::vector<typename F::rep>& b) {
  return mat_vec(K, inverse(K, A), b);
}

template <class F>
typename F::rep determinant(const F& K, Matrix<F> A) {
  const std::size_t n = A.size();
  auto det = K.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && K.is_zero(A[piv][c])) ++piv;
    if (piv == n) return K.zero();
    if (piv != c) {
      std::swap(A[c], A[piv]);
      det = K.neg(det);
    }
    det = K.mul(det, A[c][c]);
    auto iv = K.inv(A[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (K.is_zero(A[r][c])) continue;
      auto f = K.mul(A[r][c], iv);
      for (std::size_t j = c; j < n; ++j) A[r][j] = K.sub(A[r][j], K.mul(f, A[c][j]));
    }
  }
  return det;
}

}  // namespace ellbfly
