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

using testing::kSmallPrime;
using testing::random_vec;
using Pt = Point<PrimeField>;
using V = El<PrimeField>;

class BasisTest : public ::testing::TestWithParam<std::tuple<bool, std::size_t>> {
 protected:
  void SetUp() override {
    const auto& tc = std::get<0>(GetParam()) ? testing::long_torsion_curve(kSmallPrime, 6, 3)
                                             : testing::torsion_curve(kSmallPrime, 6, 1);
    d = std::get<1>(GetParam());
    basis.emplace(tc.E, testing::sub_torsion(tc, d), d);
    b = testing::coset_point(tc.E, d, rng);
  }
  const Curve<PrimeField>& E() const { return basis->curve(); }
  const PrimeField& K() const { return E().field(); }

  std::size_t d = 0;
  std::optional<BasisCtx<PrimeField>> basis;
  std::mt19937_64 rng{11};
  Pt b;
};

TEST_P(BasisTest, PartitionOfUnity) {
  for (int i = 0; i < 10; ++i) {
    Pt P = E().random_point(rng);
    try {
      V s = E().zero();
      for (std::size_t l = 0; l < d; ++l) s += basis->u(l, P);
      EXPECT_EQ(s, E().one());
    } catch (const PoleError&) {
    }
  }
}

TEST_P(BasisTest, AlphaConstants) {
  const auto& a = basis->avec();
  ASSERT_EQ(a.size(), d);
  EXPECT_EQ(a[0], 1u);
  EXPECT_EQ(V(K(), a[1]), (basis->frak_a() - E().one()) / E().c(static_cast<std::int64_t>(d)));
}

TEST_P(BasisTest, UIsTranslateOfU0) {
  for (int i = 0; i < 10; ++i) {
    Pt P = E().random_point(rng);
    try {
      for (std::size_t l = 0; l < d; ++l) EXPECT_EQ(basis->u(l, P), basis->u(0, E().sub(P, basis->mult(l))));
    } catch (const PoleError&) {
    }
  }
}

TEST_P(BasisTest, CoordinateChanges) {
  std::vector<std::uint64_t> e0(d, 0);
  e0[0] = 1;
  EXPECT_EQ(basis->v_to_u(e0), std::vector<std::uint64_t>(d, 1));
  for (int i = 0; i < 100; ++i) {
    auto f = random_vec(K(), d, rng);
    EXPECT_EQ(basis->v_to_u(basis->u_to_v(f)), f);
    EXPECT_EQ(basis->u_to_v(basis->v_to_u(f)), f);
  }
  auto f = random_vec(K(), d, rng);
  auto c = basis->u_to_v(f);
  for (int i = 0; i < 5; ++i) {
    Pt P = E().random_point(rng);
    try {
      EXPECT_EQ(basis->evaluate(Coords::U, f, P), basis->evaluate(Coords::V, c, P));
    } catch (const PoleError&) {
    }
  }
}

TEST_P(BasisTest, OracleEvaluateConstants) {
  auto pts = basis->coset(b);
  std::vector<std::uint64_t> ones(d, 1), e0(d, 0);
  e0[0] = 1;
  EXPECT_EQ(basis->oracle_evaluate(Coords::U, ones, pts), ones);
  EXPECT_EQ(basis->oracle_evaluate(Coords::V, e0, pts), ones);
}

TEST_P(BasisTest, OracleInterpolateRoundtrip) {
  auto pts = basis->coset(b);
  std::vector<std::uint64_t> ones(d, 1);
  EXPECT_EQ(basis->oracle_interpolate(pts, ones), ones);
  for (int i = 0; i < 5; ++i) {
    auto f = random_vec(K(), d, rng);
    EXPECT_EQ(basis->oracle_interpolate(pts, basis->oracle_evaluate(Coords::U, f, pts)), f);
  }
}

TEST_P(BasisTest, OracleReduce) {
  auto pts = basis->coset(b);
  EXPECT_EQ(basis->oracle_reduce(std::vector<std::uint64_t>(d, 0), pts), std::vector<std::uint64_t>(d, 0));
  auto Fx = random_vec(K(), d, rng);
  auto f = basis->oracle_reduce(Fx, pts);
  for (const auto& P : pts) EXPECT_EQ(basis->evaluate(Coords::U, f, P), basis->evaluate(Coords::X, Fx, P));
}

TEST_P(BasisTest, DenseOracleMatchesBasisOracle) {
  DenseOracle<PrimeField> dense(*basis, b);
  auto pts = basis->coset(b);
  auto f = random_vec(K(), d, rng);
  EXPECT_EQ(dense.evaluate(Coords::U, f), basis->oracle_evaluate(Coords::U, f, pts));
  EXPECT_EQ(dense.interpolate(f), basis->oracle_interpolate(pts, f));
  EXPECT_EQ(dense.reduce(f), basis->oracle_reduce(f, pts));
}

INSTANTIATE_TEST_SUITE_P(Sizes, BasisTest,
                         ::testing::Combine(::testing::Bool(), ::testing::Values(2, 4, 8, 16, 32)),
                         [](const auto& info) {
                           return std::string(std::get<0>(info.param) ? "Long" : "Short") + "_d" +
                                  std::to_string(std::get<1>(info.param));
                         });

TEST(Basis, SingleElementBasis) {
  const auto& tc = testing::torsion_curve(kSmallPrime, 6, 1);
  BasisCtx<PrimeField> B(tc.E, Pt::O(), 1);
  std::mt19937_64 rng(1);
  Pt P = tc.E.random_point(rng);
  EXPECT_EQ(B.u(0, P), tc.E.one());
  EXPECT_EQ(B.avec(), std::vector<std::uint64_t>{1});
}

TEST(Basis, PolesAreReported) {
  const auto& tc = testing::torsion_curve(kSmallPrime, 6, 1);
  BasisCtx<PrimeField> B(tc.E, testing::sub_torsion(tc, 8), 8);
  EXPECT_THROW(B.u(2, B.mult(2)), PoleError);
  EXPECT_THROW(B.x(0, Pt::O()), PoleError);
}

}  // namespace
}  // namespace ellbfly
