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
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"
#include "ellbfly/ops.hpp"

namespace ellbfly {

// Radix-2 Cooley-Tukey transform of length d over F_p, decimation in time
// with a bit-reversal permutation.
class NttCtx {
 public:
  using rep = std::uint64_t;

  NttCtx(std::shared_ptr<const PrimeField> K, std::size_t d, std::optional<rep> omega = std::nullopt)
      : K_(std::move(K)), d_(d) {
    if (d == 0 || (d & (d - 1))) throw DomainError("NTT length must be a power of two");
    const std::uint64_t p = K_->p();
    if ((p - 1) % d) throw DomainError("no " + std::to_string(d) + "-th roots of unity: p != 1 mod d");
    if (omega) {
      omega_ = *omega;
    } else {
      rep z = 2;
      while (K_->legendre(z) != -1) ++z;
      omega_ = K_->pow(z, (p - 1) / d);
    }
    if (K_->pow(omega_, d) != 1 || (d > 1 && K_->pow(omega_, d / 2) == 1))
      throw DomainError("omega is not a primitive d-th root of unity");
    tw_.resize(std::max<std::size_t>(d / 2, 1));
    itw_.resize(tw_.size());
    rep oi = K_->inv(omega_);
    tw_[0] = itw_[0] = 1;
    for (std::size_t j = 1; j < tw_.size(); ++j) {
      tw_[j] = K_->mul(tw_[j - 1], omega_);
      itw_[j] = K_->mul(itw_[j - 1], oi);
    }
    inv_d_ = K_->inv(K_->from_u64(d));
    rev_.resize(d);
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < d) ++bits;
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t r = 0;
      for (unsigned b = 0; b < bits; ++b)
        if (i >> b & 1) r |= std::size_t{1} << (bits - 1 - b);
      rev_[i] = r;
    }
  }

  std::size_t d() const { return d_; }
  rep omega() const { return omega_; }
  const PrimeField& field() const { return *K_; }

  // Values P(omega^j) of P = sum_l a_l X^l.
  std::vector<rep> forward(std::vector<rep> a, OpCounter* counter = nullptr) const {
    transform(a, tw_, counter);
    return a;
  }

  std::vector<rep> inverse(std::vector<rep> a, OpCounter* counter = nullptr) const {
    transform(a, itw_, counter);
    Ops<PrimeField> ops(*K_, counter);
    for (auto& x : a) x = ops.mul(x, inv_d_);
    return a;
  }

 private:
  void transform(std::vector<rep>& a, const std::vector<rep>& tw, OpCounter* counter) const {
    if (a.size() != d_) throw DomainError("NTT input has wrong length");
    for (std::size_t i = 0; i < d_; ++i)
      if (i < rev_[i]) std::swap(a[i], a[rev_[i]]);
    Ops<PrimeField> ops(*K_, counter);
    for (std::size_t len = 2; len <= d_; len <<= 1) {
      const std::size_t half = len / 2, step = d_ / len;
      for (std::size_t i = 0; i < d_; i += len) {
        for (std::size_t j = 0; j < half; ++j) {
          rep u = a[i + j];
          rep v = ops.mul(a[i + j + half], tw[j * step]);
          a[i + j] = ops.add(u, v);
          a[i + j + half] = ops.sub(u, v);
        }
      }
    }
  }

  std::shared_ptr<const PrimeField> K_;
  std::size_t d_;
  rep omega_ = 1, inv_d_ = 1;
  std::vector<rep> tw_, itw_;
  std::vector<std::size_t> rev_;
};

// Cyclic convolution of two length-d vectors through the transform.
inline std::vector<std::uint64_t> ntt_cyclic_convolution(const NttCtx& ntt, const std::vector<std::uint64_t>& a,
                                                         const std::vector<std::uint64_t>& b,
                                                         OpCounter* counter = nullptr) {
  auto A = ntt.forward(a, counter), B = ntt.forward(b, counter);
  Ops<PrimeField> ops(ntt.field(), counter);
  for (std::size_t i = 0; i < A.size(); ++i) A[i] = ops.mul(A[i], B[i]);
  return ntt.inverse(std::move(A), counter);
}

}  // namespace ellbfly
