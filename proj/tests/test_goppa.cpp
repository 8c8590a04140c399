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

GoppaCode small_code(std::uint64_t p, unsigned delta, std::uint64_t seed) {
  const auto& tc = testing::torsion_curve(p, delta, seed);
  std::mt19937_64 rng(seed);
  return make_goppa(tc.E, tc.t, testing::coset_point(tc.E, 2 * tc.d(), rng));
}

std::size_t weight(const Vec& w) {
  std::size_t n = 0;
  for (auto x : w) n += x != 0;
  return n;
}

TEST(Goppa, ConstantMessage) {
  auto code = small_code(10007, 3, 1);
  Vec m(4, 0);
  m[0] = 1;
  EXPECT_EQ(goppa_encode(code, m), Vec(8, 1));
}

TEST(Goppa, ExhaustiveMinimumDistanceAtD4) {
  auto code = small_code(101, 2, 1);
  const PrimeField& K = code.tw.field();
  std::size_t best = 99;
  for (std::uint64_t a = 0; a < 101; ++a)
    for (std::uint64_t b = 0; b < 101; ++b) {
      if (a == 0 && b == 0) continue;
      Vec w = goppa_encode(code, {a, b});
      best = std::min(best, weight(w));
      auto back = goppa_check(code, w);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, (Vec{a, b}));
    }
  EXPECT_EQ(best, 3u);
  (void)K;
}

TEST(Goppa, Roundtrips) {
  std::mt19937_64 rng(2);
  const std::uint64_t p = cm_prime(10, 62, 1);
  for (unsigned delta = 1; delta <= 10; ++delta) {
    const auto& tc = testing::torsion_curve(p, 10, 2);
    std::size_t d = std::size_t{1} << delta;
    auto code = make_goppa(tc.E, testing::sub_torsion(tc, d), testing::coset_point(tc.E, 2 * d, rng));
    for (int i = 0; i < 20; ++i) {
      Vec m = random_vec(code.tw.field(), d / 2, rng);
      auto back = goppa_check(code, goppa_encode(code, m));
      ASSERT_TRUE(back.has_value()) << "d=" << d;
      EXPECT_EQ(*back, m);
    }
  }
}

TEST(Goppa, SingleErrorsAreRejected) {
  auto code = small_code(10007, 3, 3);
  const PrimeField& K = code.tw.field();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Vec w = goppa_encode(code, random_vec(K, 4, rng));
    for (std::size_t pos = 0; pos < 8; ++pos) {
      Vec bad = w;
      bad[pos] = K.add(bad[pos], 1 + rng() % (K.p() - 1));
      EXPECT_FALSE(goppa_check(code, bad).has_value()) << "pos=" << pos;
    }
  }
}

TEST(Goppa, RandomWordsRarelyPass) {
  auto code = small_code(10007, 3, 4);
  const PrimeField& K = code.tw.field();
  std::mt19937_64 rng(4);
  int pass = 0;
  for (int i = 0; i < 1000; ++i) pass += goppa_check(code, random_vec(K, 8, rng)).has_value();
  EXPECT_LE(pass / 1000.0, 2.0 / K.p() + 0.005);
}

TEST(Goppa, Preconditions) {
  const auto& tc = testing::torsion_curve(10007, 3, 1);
  // Q must satisfy 2dQ != O.
  EXPECT_THROW(make_goppa(tc.E, tc.t, tc.t), DomainError);
  auto code = small_code(10007, 3, 1);
  EXPECT_THROW(goppa_encode(code, Vec(3, 0)), DomainError);
  EXPECT_THROW(goppa_check(code, Vec(7, 0)), DomainError);
}

}  // namespace
}  // namespace ellbfly
