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

#include <random>

#include "ellbfly.hpp"

namespace ellbfly {
namespace {

TEST(PrimeField, SmallIdentities) {
  PrimeField K(13);
  EXPECT_EQ(K.add(7, 9), 3u);
  EXPECT_EQ(K.inv(5), 8u);
  EXPECT_EQ(K.from_int(-1), 12u);
  EXPECT_EQ(K.half(1), 7u);
  EXPECT_THROW(K.inv(0), ZeroDivisionError);
}

TEST(PrimeField, RejectsComposite) { EXPECT_THROW(PrimeField(15), DomainError); }

TEST(PrimeField, AxiomsNearWordSize) {
  const std::uint64_t p = 0xFFFFFFFFFFFFFFC5ULL;  // largest 64-bit prime
  PrimeField K(p);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto a = K.random(rng), b = K.random(rng), c = K.random(rng);
    EXPECT_EQ(K.add(a, b), static_cast<std::uint64_t>((static_cast<u128>(a) + b) % p));
    EXPECT_EQ(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c)));
    EXPECT_EQ(K.sub(K.add(a, b), b), a);
    if (a) {
      EXPECT_EQ(K.mul(a, K.inv(a)), 1u);
    }
    EXPECT_EQ(K.add(K.half(a), K.half(a)), a);
  }
}

TEST(PrimeField, SqrtAndLegendre) {
  PrimeField K(10009);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto a = K.random(rng);
    auto r = K.sqrt(a);
    EXPECT_EQ(r.has_value(), K.legendre(a) >= 0);
    if (r) {
      EXPECT_EQ(K.mul(*r, *r), a);
    }
  }
}

TEST(PrimeField, FermatPower) {
  PrimeField K(65537);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto a = K.random(rng);
    if (a) {
      EXPECT_EQ(K.pow(a, 65536), 1u);
    }
  }
}

TEST(Poly, FindIrreducibleEnumeratesLexicographically) {
  PrimeField K3(3);
  EXPECT_EQ(poly::find_irreducible(K3, 1), (poly::Poly{0, 1}));
  EXPECT_EQ(poly::find_irreducible(K3, 2), (poly::Poly{1, 0, 1}));
}

// Brute force: no root in F_13 and gcd(X^169 - X, m) = 1.
TEST(Poly, QuarticOver13IsIrreducible) {
  PrimeField K(13);
  poly::Poly m = poly::find_irreducible(K, 4, 7);
  ASSERT_EQ(poly::deg(m), 4);
  for (std::uint64_t x = 0; x < 13; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = m.size(); i-- > 0;) v = K.add(K.mul(v, x), m[i]);
    EXPECT_NE(v, 0u) << "root " << x;
  }
  poly::Poly x169 = poly::powmod(K, {0, 1}, 169, m);
  poly::Poly g = poly::gcd(K, poly::sub(K, x169, {0, 1}), m);
  EXPECT_EQ(poly::deg(g), 0);
}

TEST(ExtField, F9GeneratorSquaresToMinusOne) {
  PrimeField K(3);
  ExtField L(K, {1, 0, 1}, true);
  auto X = L.gen();
  EXPECT_EQ(L.mul(X, X), L.embed(2));
  EXPECT_EQ(L.order(), 9u);
}

TEST(ExtField, RejectsReducibleModulus) {
  PrimeField K(5);
  EXPECT_THROW(ExtField(K, {1, 0, 1}, true), DomainError);  // X^2 + 1 = (X-2)(X+2)
}

TEST(ExtField, FieldAxiomsAndFrobenius) {
  PrimeField K(10007);
  ExtField L = ExtField::with_degree(K, 8);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto a = L.random(rng), b = L.random(rng), c = L.random(rng);
    EXPECT_EQ(L.mul(a, L.add(b, c)), L.add(L.mul(a, b), L.mul(a, c)));
    EXPECT_EQ(L.mul(L.mul(a, b), c), L.mul(a, L.mul(b, c)));
    if (!L.is_zero(a)) {
      EXPECT_EQ(L.mul(a, L.inv(a)), L.one());
    }
    // Frobenius is additive and multiplicative, with order 8.
    EXPECT_EQ(L.frobenius(L.mul(a, b)), L.mul(L.frobenius(a), L.frobenius(b)));
    EXPECT_EQ(L.frobenius(L.add(a, b)), L.add(L.frobenius(a), L.frobenius(b)));
    auto f = a;
    for (int k = 0; k < 8; ++k) f = L.frobenius(f);
    EXPECT_EQ(f, a);
  }
  EXPECT_TRUE(L.in_base(L.embed(5)));
  EXPECT_EQ(L.to_base(L.embed(5)), 5u);
  EXPECT_THROW(L.to_base(L.gen()), DescentError);
}

TEST(ExtField, Sqrt) {
  PrimeField K(1031);
  ExtField L = ExtField::with_degree(K, 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto a = L.random(rng);
    auto s = L.sqrt(L.mul(a, a));
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(L.mul(*s, *s), L.mul(a, a));
  }
}

TEST(El, OperatorsMatchField) {
  PrimeField K(101);
  El<PrimeField> a(K, 40), b(K, 70);
  EXPECT_EQ((a + b).v(), 9u);
  EXPECT_EQ((a - b).v(), 71u);
  EXPECT_EQ((a * b).v(), 2800u % 101);
  EXPECT_EQ((a / b * b).v(), 40u);
  EXPECT_EQ((-a).v(), 61u);
}

}  // namespace
}  // namespace ellbfly
