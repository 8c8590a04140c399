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

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <tuple>
#include <vector>

#include "ellbfly.hpp"

namespace ellbfly::testing {

inline constexpr std::uint64_t kSmallPrime = 10007;

inline std::shared_ptr<const PrimeField> field(std::uint64_t p) {
  static std::map<std::uint64_t, std::shared_ptr<const PrimeField>> cache;
  auto& K = cache[p];
  if (!K) K = std::make_shared<const PrimeField>(p);
  return K;
}

// Memoized curve search.
inline const TorsionCurve& torsion_curve(std::uint64_t p, unsigned delta, std::uint64_t seed) {
  static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>, TorsionCurve> cache;
  auto key = std::make_tuple(p, delta, seed);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, find_torsion_curve(field(p), delta, seed)).first;
  return it->second;
}

inline const TorsionCurve& long_torsion_curve(std::uint64_t p, unsigned delta, std::uint64_t seed) {
  static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>, TorsionCurve> cache;
  auto key = std::make_tuple(p, delta, seed);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, to_long_form(torsion_curve(p, delta, seed), seed + 17)).first;
  return it->second;
}

// The point (2^delta / d) t of order d.
inline Point<PrimeField> sub_torsion(const TorsionCurve& tc, std::size_t d) {
  return tc.E.mul(static_cast<i128>(tc.d() / d), tc.t);
}

// Rational point b with d b != O, different from the points in `avoid`.
template <class Rng>
Point<PrimeField> coset_point(const Curve<PrimeField>& E, std::size_t d, Rng& rng,
                              const std::vector<Point<PrimeField>>& avoid = {}) {
  for (;;) {
    Point<PrimeField> b = E.random_point(rng);
    if (E.mul(static_cast<i128>(d), b).inf) continue;
    bool bad = false;
    for (const auto& a : avoid) bad = bad || a == b;
    if (!bad) return b;
  }
}

template <class Rng>
std::vector<std::uint64_t> random_vec(const PrimeField& K, std::size_t n, Rng& rng) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = K.random(rng);
  return v;
}

}  // namespace ellbfly::testing
