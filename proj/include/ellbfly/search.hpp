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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"

namespace ellbfly {

// A curve with a rational point t of exact order d = 2^delta and an auxiliary
// rational point R with dR != O.
struct TorsionCurve {
  Curve<PrimeField> E;
  Point<PrimeField> t;
  Point<PrimeField> R;
  u128 order = 0;
  unsigned delta = 0;

  std::uint64_t d() const { return std::uint64_t{1} << delta; }
};

// Largest prime handled by exhaustive point counting.
inline constexpr std::uint64_t kNaiveCountLimit = std::uint64_t{1} << 22;

namespace detail {

inline int v2(u128 n) {
  if (n == 0) return 128;
  int k = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Point of exact order d in a group of order N, or O on failure.
template <class Rng>
Point<PrimeField> torsion_point(const Curve<PrimeField>& E, u128 N, std::uint64_t d, Rng& rng, int tries) {
  const int e = v2(N);
  const u128 odd = N >> e;
  for (int i = 0; i < tries; ++i) {
    Point<PrimeField> q = E.mul(static_cast<i128>(odd), E.random_point(rng));
    std::uint64_t ord = E.order_dividing_pow2(q, std::uint64_t{1} << std::min(e, 63));
    if (ord < d) continue;
    for (; ord > d; ord >>= 1) q = E.dbl(q);
    return q;
  }
  return Point<PrimeField>::O();
}

template <class Rng>
std::optional<Point<PrimeField>> aux_point(const Curve<PrimeField>& E, std::uint64_t d, Rng& rng) {
  for (int i = 0; i < 64; ++i) {
    Point<PrimeField> R = E.random_point(rng);
    if (!E.mul(d, R).inf) return R;
  }
  return std::nullopt;
}

}  // namespace detail

// Writes p = a^2 + b^2 for a prime p = 1 mod 4.
inline std::pair<std::uint64_t, std::uint64_t> cornacchia(const PrimeField& K) {
  const std::uint64_t p = K.p();
  if (p % 4 != 1) throw SearchError("p = " + std::to_string(p) + " is not 1 mod 4");
  auto r = K.sqrt(K.neg(1));
  std::uint64_t a = p, b = *r;
  const std::uint64_t bound = detail::isqrt(p);
  while (b > bound) {
    std::uint64_t c = a % b;
    a = b;
    b = c;
  }
  std::uint64_t rest = p - b * b;
  std::uint64_t c = detail::isqrt(rest);
  if (c * c != rest) throw SearchError("Cornacchia failed for p = " + std::to_string(p));
  return {b, c};
}

// Curve search by exhaustive point counting over random short models.
inline TorsionCurve find_torsion_curve_naive(std::shared_ptr<const PrimeField> K, unsigned delta, std::uint64_t seed,
                                             int max_curves = 200000) {
  const std::uint64_t p = K->p();
  const std::uint64_t d = std::uint64_t{1} << delta;
  if (p >= kNaiveCountLimit) throw SearchError("prime too large for naive point counting");
  const double hasse_hi = static_cast<double>(p) + 1 + 2 * std::sqrt(static_cast<double>(p));
  if (static_cast<double>(d) > hasse_hi) throw SearchError("no curve over F_" + std::to_string(p) + " has d points");
  std::vector<std::uint8_t> nsqrt(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++nsqrt[y * y % p];
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < max_curves; ++tries) {
    std::uint64_t a4 = K->random(rng), a6 = K->random(rng);
    std::uint64_t disc = K->add(K->mul(4, K->mul(a4, K->mul(a4, a4))), K->mul(27, K->mul(a6, a6)));
    if (disc == 0) continue;
    std::uint64_t N = 1;
    for (std::uint64_t x = 0; x < p; ++x) N += nsqrt[(x * x % p * x + a4 * x + a6) % p];
    if (N % d) continue;
    Curve<PrimeField> E(K, {0, 0, 0, a4, a6});
    Point<PrimeField> t = detail::torsion_point(E, N, d, rng, 40);
    if (t.inf) continue;
    auto R = detail::aux_point(E, d, rng);
    if (!R) continue;
    return TorsionCurve{E, t, *R, N, delta};
  }
  throw SearchError("no curve with a point of order " + std::to_string(d) + " over F_" + std::to_string(p) +
                    " after " + std::to_string(max_curves) + " candidates");
}

// Curve search among the twists y^2 = x^3 + kx, for p = 1 mod 4.
inline TorsionCurve find_torsion_curve_cm(std::shared_ptr<const PrimeField> K, unsigned delta, std::uint64_t seed) {
  const std::uint64_t p = K->p();
  const std::uint64_t d = std::uint64_t{1} << delta;
  auto [a, b] = cornacchia(*K);
  std::vector<u128> orders;
  for (std::uint64_t tr : {a, b}) {
    orders.push_back(static_cast<u128>(p) + 1 - 2 * static_cast<u128>(tr));
    orders.push_back(static_cast<u128>(p) + 1 + 2 * static_cast<u128>(tr));
  }
  std::stable_sort(orders.begin(), orders.end(), [](u128 x, u128 y) { return detail::v2(x) > detail::v2(y); });
  std::mt19937_64 rng(seed);
  for (u128 N : orders) {
    if (N % d) continue;
    for (std::uint64_t k = 1; k < 200; ++k) {
      Curve<PrimeField> E(K, {0, 0, 0, K->from_u64(k), 0});
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) ok = E.mul(static_cast<i128>(N), E.random_point(rng)).inf;
      if (!ok) continue;
      Point<PrimeField> t = detail::torsion_point(E, N, d, rng, 40);
      if (t.inf) break;
      auto R = detail::aux_point(E, d, rng);
      if (!R) break;
      return TorsionCurve{E, t, *R, N, delta};
    }
  }
  throw SearchError("no j=1728 curve over F_" + std::to_string(p) + " has a point of order " + std::to_string(d));
}

inline TorsionCurve find_torsion_curve(std::shared_ptr<const PrimeField> K, unsigned delta, std::uint64_t seed) {
  if (delta < 1) throw DomainError("delta must be at least 1");
  if (K->p() < kNaiveCountLimit) return find_torsion_curve_naive(std::move(K), delta, seed);
  if (K->p() % 4 == 1) return find_torsion_curve_cm(std::move(K), delta, seed);
  throw SearchError("primes above 2^22 must be 1 mod 4 for the j=1728 search");
}

// Prime p = a^2 + b^2 with a = 1 mod 2^delta and b = 0 mod 2^delta. The curve
// y^2 = x^3 + kx of order (a-1)^2 + b^2 then has full rational 2^delta-torsion
// and p = 1 mod 2^(delta+1).
inline std::uint64_t cm_prime(unsigned delta, unsigned bits, std::uint64_t seed) {
  if (bits > 62 || bits < 2 * delta + 6) throw DomainError("cm_prime: need 2*delta+6 <= bits <= 62");
  const unsigned h = bits / 2;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << (h - delta - 2),
                                                    (std::uint64_t{1} << (h - delta - 1)) - 1);
  for (;;) {
    std::uint64_t a = 1 + (dist(rng) << delta);
    std::uint64_t b = dist(rng) << delta;
    std::uint64_t p = a * a + b * b;
    if (is_prime_u64(p)) return p;
  }
}

// Random change of variables x = X + r, y = Y + sX + w applied to a short model.
inline TorsionCurve to_long_form(const TorsionCurve& tc, std::uint64_t seed) {
  const auto& E = tc.E;
  if (!E.a1().is_zero() || !E.a2().is_zero() || !E.a3().is_zero())
    throw DomainError("to_long_form expects a short Weierstrass model");
  const PrimeField& K = E.field();
  std::mt19937_64 rng(seed);
  El<PrimeField> r(K, K.random(rng)), s(K, K.random(rng)), w(K, K.random(rng));
  El<PrimeField> a4 = E.a4(), a6 = E.a6();
  El<PrimeField> A1 = s * 2, A3 = w * 2, A2 = r * 3 - s * s;
  El<PrimeField> A4 = r * r * 3 + a4 - s * w * 2;
  El<PrimeField> A6 = r * r * r + a4 * r + a6 - w * w;
  Curve<PrimeField> E2(E.field_ptr(), {A1.v(), A2.v(), A3.v(), A4.v(), A6.v()});
  auto map = [&](const Point<PrimeField>& P) {
    if (P.inf) return P;
    El<PrimeField> X = P.x - r;
    return Point<PrimeField>::affine(X, P.y - s * X - w);
  };
  return TorsionCurve{E2, map(tc.t), map(tc.R), tc.order, tc.delta};
}

// Rational point Q with m*Q != O, deterministic under seed.
inline Point<PrimeField> find_point_with_nonzero_multiple(const Curve<PrimeField>& E, std::uint64_t m,
                                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto q = detail::aux_point(E, m, rng);
  if (!q) throw SearchError("no point Q with " + std::to_string(m) + "Q != O found");
  return *q;
}

}  // namespace ellbfly
