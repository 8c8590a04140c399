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

#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"

namespace ellbfly {
namespace {

using testing::random_vec;
using Vec = std::vector<std::uint64_t>;

const LweParams& guideline() {
  static const LweParams P = lwe_preset("guideline", 1);
  return P;
}

LweParams with_chi(LweParams P, ErrorSampler chi, unsigned beta = 1, unsigned ell = 1) {
  P.chi = std::move(chi);
  P.beta = beta;
  P.ell = ell;
  return P;
}

TEST(Lwe, SamplerBounds) {
  std::mt19937_64 rng(1);
  for (const auto& chi : {ErrorSampler::binomial(2), ErrorSampler::gaussian(2.0), ErrorSampler::zero()}) {
    double sum = 0;
    for (int i = 0; i < 20000; ++i) {
      auto x = chi.sample(rng);
      EXPECT_LE(std::llabs(x), chi.bound()) << chi.describe();
      sum += static_cast<double>(x);
    }
    EXPECT_LT(std::abs(sum / 20000), 0.1) << chi.describe();
  }
  EXPECT_THROW(ErrorSampler::binomial(0), DomainError);
  EXPECT_THROW(ErrorSampler::gaussian(0.0), DomainError);
}

TEST(Lwe, ZeroNoiseKeyIsExact) {
  auto P = with_chi(guideline(), ErrorSampler::zero());
  std::mt19937_64 rng(2);
  auto kp = lwe_keygen(P, rng);
  EXPECT_EQ(kp.pk.w[0], lwe_phi(P, kp.pk.a, kp.sk.s[0]));
}

TEST(Lwe, Adjointness) {
  const auto& P = guideline();
  const PrimeField& K = P.ring->field();
  std::mt19937_64 rng(3);
  auto kp = lwe_keygen(P, rng);
  for (int i = 0; i < 100; ++i) {
    Vec x = random_vec(K, P.d(), rng), y = random_vec(K, P.d(), rng);
    EXPECT_EQ(lwe_dot(K, lwe_phi(P, kp.pk.a, x), y), lwe_dot(K, x, lwe_phi_transpose(P, kp.pk, y)));
  }
}

TEST(Lwe, ZeroNoiseDecryption) {
  auto P = with_chi(guideline(), ErrorSampler::zero());
  std::mt19937_64 rng(4);
  auto kp = lwe_keygen(P, rng);
  for (int mu : {0, 1, 1, 0}) {
    auto ct = lwe_encrypt_bit(P, kp.pk, mu, rng);
    EXPECT_EQ(lwe_phases(P, kp.sk, ct)[0], mu ? P.q() / 2 : 0);
    EXPECT_EQ(lwe_decrypt_bit(P, kp.sk, ct), mu);
  }
}

// p - mu*Delta = <r, e> - <e1, s> + e2, recomputed from the sampled noise.
TEST(Lwe, CorrectnessIdentity) {
  for (auto [beta, ell] : {std::pair{1u, 1u}, std::pair{4u, 2u}}) {
    auto P = with_chi(guideline(), ErrorSampler::gaussian(2.0), beta, ell);
    const PrimeField& K = P.ring->field();
    std::mt19937_64 rng(5);
    auto kp = lwe_keygen(P, rng);
    std::vector<std::uint8_t> bits(P.message_bits());
    for (auto& b : bits) b = rng() & 1;
    LweEncryptionNoise nz;
    auto ct = lwe_encrypt(P, kp.pk, bits, rng, &nz);
    auto ph = lwe_phases(P, kp.sk, ct);
    for (unsigned i = 0; i < ell; ++i)
      for (unsigned j = 0; j < ell; ++j) {
        std::uint64_t mu = 0;
        for (unsigned k = 0; k < beta; ++k) mu |= std::uint64_t{bits[(i * ell + j) * beta + k]} << k;
        std::uint64_t want = K.sub(lwe_dot(K, nz.r[j], kp.e[i]), lwe_dot(K, nz.e1[j], kp.sk.s[i]));
        want = K.add(want, K.from_int(nz.e2[i * ell + j]));
        EXPECT_EQ(K.sub(ph[i * ell + j], K.mul(P.delta_scale(), mu)), want);
      }
  }
}

TEST(Lwe, BitShiftsOnlyC2) {
  const auto& P = guideline();
  std::mt19937_64 rng(6);
  auto kp = lwe_keygen(P, rng);
  std::mt19937_64 r0(7), r1(7);
  auto c0 = lwe_encrypt_bit(P, kp.pk, 0, r0);
  auto c1 = lwe_encrypt_bit(P, kp.pk, 1, r1);
  EXPECT_EQ(c0.c1, c1.c1);
  EXPECT_EQ(P.ring->field().sub(c1.c2[0], c0.c2[0]), P.q() / 2);
}

TEST(Lwe, SingleBitIsDegenerateMultiBit) {
  const auto& P = guideline();
  std::mt19937_64 rng(8);
  auto kp = lwe_keygen(P, rng);
  std::mt19937_64 r0(9), r1(9);
  auto a = lwe_encrypt_bit(P, kp.pk, 1, r0);
  auto b = lwe_encrypt(P, kp.pk, {1}, r1);
  EXPECT_EQ(a.c1, b.c1);
  EXPECT_EQ(a.c2, b.c2);
}

TEST(Lwe, MultiBitZeroNoise) {
  auto P = with_chi(lwe_preset("toy", 1), ErrorSampler::zero(), 4, 8);
  std::mt19937_64 rng(10);
  auto kp = lwe_keygen(P, rng);
  std::vector<std::uint8_t> bits(P.message_bits());
  ASSERT_EQ(bits.size(), 256u);
  for (auto& b : bits) b = rng() & 1;
  EXPECT_EQ(lwe_decrypt(P, kp.sk, lwe_encrypt(P, kp.pk, bits, rng)), bits);
}

TEST(Lwe, MultiBitOpCount) {
  const std::uint64_t d = guideline().d();
  for (unsigned ell : {1u, 2u, 4u}) {
    auto P = with_chi(guideline(), ErrorSampler::gaussian(2.0), 2, ell);
    std::mt19937_64 rng(11);
    auto kp = lwe_keygen(P, rng);
    std::vector<std::uint8_t> bits(P.message_bits(), 1);
    OpCounter enc, dec;
    auto ct = lwe_encrypt(P, kp.pk, bits, rng, nullptr, &enc);
    lwe_decrypt(P, kp.sk, ct, &dec);
    // ell transposed products through the explicit matrix plus ell^2 inner products.
    EXPECT_EQ(enc.total(), ell * 2 * d * d + ell * ell * (2 * d + 2));
    EXPECT_EQ(dec.total(), ell * ell * 2 * d);
  }
}

TEST(Lwe, GuidelineFailureRate) {
  const auto& P = guideline();
  std::mt19937_64 rng(12);
  auto kp = lwe_keygen(P, rng);
  int fails = 0;
  for (int i = 0; i < 2000; ++i) {
    int mu = static_cast<int>(rng() & 1);
    fails += lwe_decrypt_bit(P, kp.sk, lwe_encrypt_bit(P, kp.pk, mu, rng)) != mu;
  }
  EXPECT_LT(fails, 20);
}

// Failure rate is non-decreasing in sigma up to a one-sided 95% binomial margin.
TEST(Lwe, FailureRateGrowsWithSigma) {
  const int n = 10000;
  std::vector<double> rate;
  for (double sigma : {6.0, 8.0, 10.0}) {
    auto P = with_chi(guideline(), ErrorSampler::gaussian(sigma));
    std::mt19937_64 rng(13);
    auto kp = lwe_keygen(P, rng);
    int fails = 0;
    for (int i = 0; i < n; ++i) {
      int mu = static_cast<int>(rng() & 1);
      fails += lwe_decrypt_bit(P, kp.sk, lwe_encrypt_bit(P, kp.pk, mu, rng)) != mu;
    }
    rate.push_back(static_cast<double>(fails) / n);
  }
  for (std::size_t k = 1; k < rate.size(); ++k) {
    double sd = std::sqrt((rate[k] * (1 - rate[k]) + rate[k - 1] * (1 - rate[k - 1])) / n);
    EXPECT_GE(rate[k], rate[k - 1] - 1.645 * sd) << "sigma step " << k;
  }
  EXPECT_GT(rate.back(), rate.front());
}

TEST(Lwe, Presets) {
  auto toy = lwe_preset("toy", 1);
  EXPECT_EQ(toy.q(), 32749u);
  EXPECT_EQ(toy.d(), 256u);
  EXPECT_EQ(guideline().q(), 4099u);
  EXPECT_EQ(guideline().d(), 64u);
  EXPECT_THROW(lwe_preset("nope"), DomainError);
  EXPECT_THROW(lwe_preset("guideline", 1, 13), DomainError);
}

}  // namespace
}  // namespace ellbfly
