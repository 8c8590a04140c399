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
#include <vector>

#include "ellbfly/butterfly.hpp"
#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/level.hpp"
#include "ellbfly/ops.hpp"
#include "ellbfly/tower.hpp"

namespace ellbfly {

// Residue ring of L(<t>) at B = b + <t>, in the basis theta_l = u_l mod B.
// tb carries the reduction constants for B, tr the full constants for a
// rational coset R + <t>.
struct RingCtx {
  Tower<PrimeField> tb;
  Tower<PrimeField> tr;

  std::size_t d() const { return tr.d(); }
  const PrimeField& field() const { return tr.field(); }
};

inline RingCtx make_ring(const Curve<PrimeField>& E, const Point<PrimeField>& t, const Point<PrimeField>& R,
                         const Point<PrimeField>& b) {
  return RingCtx{build_tower(E, t, b), build_tower(E, t, R)};
}

inline RingCtx make_ring(Tower<PrimeField> tb, Tower<PrimeField> tr) {
  if (tb.d() != tr.d()) throw DomainError("ring towers have different sizes");
  for (std::size_t k = 0; k < tb.curves.size(); ++k)
    if (!(tb.curves[k] == tr.curves[k])) throw DomainError("ring towers use different curves");
  return RingCtx{std::move(tb), std::move(tr)};
}

// Coordinates of the identity.
inline std::vector<std::uint64_t> ring_one(std::size_t d) { return std::vector<std::uint64_t>(d, 1); }

// f (x) g in the theta basis, O(d log d).
inline std::vector<std::uint64_t> ring_multiply(const RingCtx& ctx, const std::vector<std::uint64_t>& f,
                                                const std::vector<std::uint64_t>& g, OpCounter* counter = nullptr) {
  const std::size_t d = ctx.d();
  if (f.size() != d || g.size() != d) throw DomainError("ring_multiply: length mismatch");
  Ops<PrimeField> ops(ctx.field(), counter);
  auto alpha = butterfly_evaluate(ctx.tr, f, counter);
  auto beta = butterfly_evaluate(ctx.tr, g, counter);
  std::vector<std::uint64_t> H(d);
  for (std::size_t l = 0; l < d; ++l) {
    std::size_t m = l == 0 ? d - 1 : l - 1;
    H[l] = ops.mul(ops.sub(f[l], f[m]), ops.sub(g[l], g[m]));
  }
  auto gamma = butterfly_evaluate(ctx.tr, butterfly_reduce(ctx.tr, H, counter), counter);
  for (std::size_t l = 0; l < d; ++l) alpha[l] = ops.sub(ops.mul(alpha[l], beta[l]), gamma[l]);
  auto k = butterfly_interpolate(ctx.tr, alpha, counter);
  auto out = butterfly_reduce(ctx.tb, H, counter);
  for (std::size_t l = 0; l < d; ++l) out[l] = ops.add(out[l], k[l]);
  return out;
}

// Special case b = R: interpolate(evaluate(f) * evaluate(g)).
inline std::vector<std::uint64_t> ring_multiply_diagonal(const Tower<PrimeField>& tr,
                                                         const std::vector<std::uint64_t>& f,
                                                         const std::vector<std::uint64_t>& g,
                                                         OpCounter* counter = nullptr) {
  if (!tr.has_eval()) throw DomainError("diagonal multiplication needs a rational coset");
  Ops<PrimeField> ops(tr.field(), counter);
  auto a = butterfly_evaluate(tr, f, counter);
  auto b = butterfly_evaluate(tr, g, counter);
  for (std::size_t l = 0; l < a.size(); ++l) a[l] = ops.mul(a[l], b[l]);
  return butterfly_interpolate(tr, a, counter);
}

}  // namespace ellbfly
