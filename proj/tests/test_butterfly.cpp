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
using Vec = std::vector<std::uint64_t>;

// Laplace expansion along the first row.
std::uint64_t cofactor_det(const PrimeField& K, const Matrix<PrimeField>& A) {
  const std::size_t n = A.size();
  if (n == 1) return A[0][0];
  std::uint64_t det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<PrimeField> M;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::uint64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(A[i][k]);
      M.push_back(row);
    }
    std::uint64_t term = K.mul(A[0][j], cofactor_det(K, M));
    det = j % 2 ? K.sub(det, term) : K.add(det, term);
  }
  return det;
}

Matrix<PrimeField> dense_bidiag(const PrimeField& K, const Vec& b, const Vec& c) {
  const std::size_t n = b.size();
  Matrix<PrimeField> M(n, Vec(n, 0));
  for (std::size_t l = 0; l < n; ++l) {
    M[l][l] = K.add(M[l][l], b[l]);
    std::size_t j = l == 0 ? n - 1 : l - 1;
    M[l][j] = K.add(M[l][j], c[l]);
  }
  return M;
}

TEST(Bidiagonal, IdentityInstance) {
  PrimeField K(101);
  Ops<PrimeField> ops(K);
  Vec t{5, 6, 7, 8};
  EXPECT_EQ(bidiagonal_apply(ops, Vec(4, 1), Vec(4, 0), t), t);
  EXPECT_EQ(bidiagonal_solve(K, Vec(4, 1), Vec(4, 0), t), t);
}

TEST(Bidiagonal, TwoByTwo) {
  PrimeField K(101);
  Ops<PrimeField> ops(K);
  EXPECT_EQ(bidiagonal_apply(ops, Vec{3, 4}, Vec{5, 6}, Vec{1, 0}), (Vec{3, 6}));
}

TEST(Bidiagonal, SolveInvertsApply) {
  PrimeField K(kSmallPrime);
  Ops<PrimeField> ops(K);
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 64; ++n) {
    for (int rep = 0; rep < 100; ++rep) {
      Vec b = random_vec(K, n, rng), c = random_vec(K, n, rng), t = random_vec(K, n, rng);
      if (rep % 4 == 1) b[rng() % n] = 0;  // exercises the backward sweep
      if (K.is_zero(bidiag_det(K, b, c))) continue;
      Vec s = bidiagonal_apply(ops, b, c, t);
      EXPECT_EQ(bidiagonal_solve(K, b, c, s), t) << "n=" << n;
      EXPECT_EQ(bidiagonal_apply(ops, b, c, bidiagonal_solve(K, b, c, t)), t);
    }
  }
}

TEST(Bidiagonal, MatchesDenseElimination) {
  PrimeField K(kSmallPrime);
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    Vec b = random_vec(K, 8, rng), c = random_vec(K, 8, rng), s = random_vec(K, 8, rng);
    EXPECT_EQ(bidiagonal_solve(K, b, c, s), solve(K, dense_bidiag(K, b, c), s));
  }
}

TEST(Bidiagonal, DeterminantFormula) {
  PrimeField K(kSmallPrime);
  std::mt19937_64 rng(3);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int rep = 0; rep < 20; ++rep) {
      Vec b = random_vec(K, n, rng), c = random_vec(K, n, rng);
      auto M = dense_bidiag(K, b, c);
      EXPECT_EQ(bidiag_det(K, b, c), cofactor_det(K, M));
      EXPECT_EQ(bidiag_det(K, b, c), determinant(K, M));
    }
  }
}

TEST(Bidiagonal, SingularIsRejected) {
  PrimeField K(101);
  EXPECT_THROW(make_bidiag(K, Vec{1, 1}, Vec{1, 1}), SingularError);
  EXPECT_THROW(make_bidiag(K, Vec{1, 2}, Vec{1}), DomainError);
}

class ButterflyTest : public ::testing::TestWithParam<std::tuple<bool, std::size_t>> {
 protected:
  void SetUp() override {
    const auto& tc = std::get<0>(GetParam()) ? testing::long_torsion_curve(kSmallPrime, 6, 3)
                                             : testing::torsion_curve(kSmallPrime, 6, 1);
    d = std::get<1>(GetParam());
    Pt t = testing::sub_torsion(tc, d);
    Pt b = testing::coset_point(tc.E, d, rng);
    tw.emplace(build_tower(tc.E, t, b));
    basis.emplace(tc.E, t, d);
    oracle.emplace(*basis, b);
  }
  const PrimeField& K() const { return tw->field(); }

  std::size_t d = 0;
  std::mt19937_64 rng{31};
  std::optional<Tower<PrimeField>> tw;
  std::optional<BasisCtx<PrimeField>> basis;
  std::optional<DenseOracle<PrimeField>> oracle;
};

TEST_P(ButterflyTest, ConstantFunction) {
  Vec ones(d, 1);
  EXPECT_EQ(butterfly_evaluate(*tw, ones), ones);
  EXPECT_EQ(butterfly_interpolate(*tw, ones), ones);
  EXPECT_EQ(butterfly_reduce(*tw, Vec(d, 0)), Vec(d, 0));
}

TEST_P(ButterflyTest, MatchesDenseOracle) {
  for (int i = 0; i < 20; ++i) {
    Vec f = random_vec(K(), d, rng);
    EXPECT_EQ(butterfly_evaluate(*tw, f), oracle->evaluate(Coords::U, f));
    EXPECT_EQ(butterfly_interpolate(*tw, f), oracle->interpolate(f));
    EXPECT_EQ(butterfly_reduce(*tw, f), oracle->reduce(f));
  }
}

TEST_P(ButterflyTest, Roundtrips) {
  for (int i = 0; i < 20; ++i) {
    Vec f = random_vec(K(), d, rng);
    EXPECT_EQ(butterfly_interpolate(*tw, butterfly_evaluate(*tw, f)), f);
    EXPECT_EQ(butterfly_evaluate(*tw, butterfly_interpolate(*tw, f)), f);
  }
}

TEST_P(ButterflyTest, Linearity) {
  Vec f = random_vec(K(), d, rng), g = random_vec(K(), d, rng), s(d);
  std::uint64_t a = K().random(rng);
  for (std::size_t l = 0; l < d; ++l) s[l] = K().add(K().mul(a, f[l]), g[l]);
  Vec ef = butterfly_reduce(*tw, f), eg = butterfly_reduce(*tw, g), es = butterfly_reduce(*tw, s);
  for (std::size_t l = 0; l < d; ++l) EXPECT_EQ(es[l], K().add(K().mul(a, ef[l]), eg[l]));
}

INSTANTIATE_TEST_SUITE_P(Sizes, ButterflyTest,
                         ::testing::Combine(::testing::Bool(), ::testing::Values(2, 4, 8, 16, 32, 64)),
                         [](const auto& info) {
                           return std::string(std::get<0>(info.param) ? "Long" : "Short") + "_d" +
                                  std::to_string(std::get<1>(info.param));
                         });

TEST(Butterfly, BaseCases) {
  const auto& tc = testing::torsion_curve(kSmallPrime, 6, 1);
  auto tw = build_tower(tc.E, testing::sub_torsion(tc, 4), tc.R);
  Ops<PrimeField> ops(tw.field());
  const std::size_t k = tw.levels.size();
  EXPECT_EQ(detail::evaluate_rec(tw, ops, Vec{123}, k), Vec{123});
  EXPECT_EQ(detail::interpolate_rec(tw, ops, Vec{123}, k), Vec{123});
  EXPECT_EQ(detail::reduce_rec(tw, ops, Vec{123}, k), Vec{tw.field().mul(tw.base_xb, 123)});
  EXPECT_EQ(tw.base_xb, tw.levels.back().phi(*tw.levels.back().b).x.v());
  EXPECT_THROW(butterfly_evaluate(tw, Vec(8, 0)), DomainError);
}

TEST(Butterfly, LargeRoundtrips) {
  const std::uint64_t p = cm_prime(10, 62, 1);
  const auto& tc = testing::torsion_curve(p, 10, 2);
  std::mt19937_64 rng(4);
  for (std::size_t d = 128; d <= 1024; d *= 2) {
    auto tw = build_tower(tc.E, testing::sub_torsion(tc, d), testing::coset_point(tc.E, d, rng));
    Vec f = random_vec(tw.field(), d, rng);
    EXPECT_EQ(butterfly_interpolate(tw, butterfly_evaluate(tw, f)), f);
  }
}

// Reduction modulo a Frobenius-stable coset b + <t> with b over F_q^d: the
// oracle works over the extension and the result must be rational.
TEST(Butterfly, ReduceOverExtensionCoset) {
  for (unsigned delta : {1u, 2u, 3u}) {
    auto K = testing::field(delta == 3 ? 16411 : 1019);
    auto nb = build_normal_basis_field(K, delta, 3, true, NormalBranch::Elliptic);
    const auto& tc = *nb.curve();
    const ExtField& L = nb.oracle_field();
    const Tower<PrimeField>& tb = nb.ring().tb;
    const std::size_t d = tb.d();
    Curve<ExtField> EL = lift(tc.E, std::make_shared<const ExtField>(L));
    // Re-anchor b and t on the same field object as EL.
    const ExtField& LL = EL.field();
    Point<ExtField> b = Point<ExtField>::affine(El<ExtField>(LL, nb.b()->x.v()), El<ExtField>(LL, nb.b()->y.v()));
    BasisCtx<ExtField> B(EL, lift(tc.t, LL), d);
    DenseOracle<ExtField> oracle(B, b);
    std::mt19937_64 rng(delta);
    for (int i = 0; i < 10; ++i) {
      Vec Fx = random_vec(*K, d, rng);
      std::vector<ExtField::rep> FL;
      for (auto x : Fx) FL.push_back(LL.embed(x));
      auto want = oracle.reduce(FL);
      auto got = butterfly_reduce(tb, Fx);
      for (std::size_t l = 0; l < d; ++l) EXPECT_EQ(LL.embed(got[l]), want[l]) << "delta=" << delta;
    }
  }
}

TEST(Butterfly, OpCountGrowth) {
  const std::uint64_t p = cm_prime(12, 62, 1);
  const auto& tc = testing::torsion_curve(p, 12, 2);
  std::mt19937_64 rng(5);
  std::uint64_t prev = 0;
  for (std::size_t d = 128; d <= 4096; d *= 2) {
    auto tw = build_tower(tc.E, testing::sub_torsion(tc, d), tc.R);
    OpCounter c;
    butterfly_evaluate(tw, random_vec(tw.field(), d, rng), &c);
    if (prev && d >= 512) {
      EXPECT_LT(static_cast<double>(c.total()) / prev, 2.5) << "d=" << d;
    }
    prev = c.total();
  }
}

}  // namespace
}  // namespace ellbfly
