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

#include "fixtures.hpp"

namespace ellbfly {
namespace {

using testing::random_vec;
using Vec = std::vector<std::uint64_t>;

Vec naive_dft(const PrimeField& K, const Vec& a, std::uint64_t w) {
  const std::size_t d = a.size();
  Vec out(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::uint64_t wj = K.pow(w, j), x = 1;
    for (std::size_t l = 0; l < d; ++l) {
      out[j] = K.add(out[j], K.mul(a[l], x));
      x = K.mul(x, wj);
    }
  }
  return out;
}

Vec naive_cyclic(const PrimeField& K, const Vec& a, const Vec& b) {
  const std::size_t d = a.size();
  Vec out(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[(i + j) % d] = K.add(out[(i + j) % d], K.mul(a[i], b[j]));
  return out;
}

TEST(Ntt, ConstantPolynomial) {
  auto K = testing::field(65537);
  NttCtx ntt(K, 16);
  Vec a(16, 0);
  a[0] = 9;
  EXPECT_EQ(ntt.forward(a), Vec(16, 9));
}

TEST(Ntt, MatchesNaiveDft) {
  for (std::uint64_t p : {65537ULL, 998244353ULL, 0xFFFFFFFF00000001ULL}) {
    auto K = testing::field(p);
    std::mt19937_64 rng(p);
    for (std::size_t d = 1; d <= 64; d *= 2) {
      NttCtx ntt(K, d);
      for (int i = 0; i < 5; ++i) {
        Vec a = random_vec(*K, d, rng);
        EXPECT_EQ(ntt.forward(a), naive_dft(*K, a, ntt.omega())) << "p=" << p << " d=" << d;
      }
    }
  }
}

TEST(Ntt, ConvolutionTheorem) {
  auto K = testing::field(998244353);
  std::mt19937_64 rng(2);
  for (std::size_t d = 1; d <= 64; d *= 2) {
    NttCtx ntt(K, d);
    Vec a = random_vec(*K, d, rng), b = random_vec(*K, d, rng);
    EXPECT_EQ(ntt_cyclic_convolution(ntt, a, b), naive_cyclic(*K, a, b));
  }
}

TEST(Ntt, RoundtripUpTo2To16) {
  auto K = testing::field(65537);
  std::mt19937_64 rng(3);
  for (std::size_t d = 2; d <= (1u << 16); d *= 2) {
    NttCtx ntt(K, d);
    Vec a = random_vec(*K, d, rng);
    EXPECT_EQ(ntt.inverse(ntt.forward(a)), a) << "d=" << d;
  }
}

TEST(Ntt, ExplicitRoot) {
  auto K = testing::field(17);
  NttCtx ntt(K, 4, 4);  // 4^2 = -1 mod 17
  EXPECT_EQ(ntt.omega(), 4u);
  EXPECT_THROW(NttCtx(K, 4, 16), DomainError);  // 16 = -1 has order 2
}

TEST(Ntt, Preconditions) {
  auto K = testing::field(10007);
  EXPECT_THROW(NttCtx(K, 6), DomainError);
  EXPECT_THROW(NttCtx(K, 4), DomainError);  // 10006 = 2 * 5003
}

TEST(Ntt, OpCountIsHalfDLogD) {
  auto K = testing::field(65537);
  for (std::size_t d = 8, k = 3; d <= 4096; d *= 2, ++k) {
    NttCtx ntt(K, d);
    OpCounter c;
    ntt.forward(Vec(d, 1), &c);
    EXPECT_EQ(c.muls, d / 2 * k);
    EXPECT_EQ(c.adds, d * k);
  }
}

}  // namespace
}  // namespace ellbfly
