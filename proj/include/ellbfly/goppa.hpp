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
#include <optional>
#include <vector>

#include "ellbfly/basis.hpp"
#include "ellbfly/butterfly.hpp"
#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/tower.hpp"

namespace ellbfly {

// [d, d/2, d/2 + 1] evaluation code of the iota-invariant subspace spanned by
// l_0 = 1 and l_l = v_l - v_{-l}, evaluated on Q + <t>.
struct GoppaCode {
  Tower<PrimeField> tw;
  Point<PrimeField> Q;

  std::size_t d() const { return tw.d(); }
  std::size_t dp() const { return tw.d() / 2; }
};

inline GoppaCode make_goppa(const Curve<PrimeField>& E, const Point<PrimeField>& t, const Point<PrimeField>& Q) {
  const std::size_t d = two_power_order(E, t);
  if (E.mul(static_cast<i128>(2 * d), Q).inf) throw DomainError("Goppa evaluation point needs 2dQ != O");
  return GoppaCode{build_tower(E, t, Q), Q};
}

inline std::vector<std::uint64_t> goppa_encode(const GoppaCode& code, const std::vector<std::uint64_t>& msg,
                                               OpCounter* counter = nullptr) {
  const std::size_t d = code.d(), dp = code.dp();
  if (msg.size() != dp) throw DomainError("Goppa message must have d/2 symbols");
  const PrimeField& K = code.tw.field();
  Ops<PrimeField> ops(K, counter);
  std::vector<std::uint64_t> n(d, K.zero());
  n[0] = msg[0];
  for (std::size_t l = 1; l < dp; ++l) {
    n[l] = msg[l];
    n[d - l] = ops.neg(msg[l]);
  }
  return butterfly_evaluate(code.tw, v_to_u(ops, code.tw.levels[0].avec, n), counter);
}

// The message when w is a codeword.
inline std::optional<std::vector<std::uint64_t>> goppa_check(const GoppaCode& code,
                                                             const std::vector<std::uint64_t>& w,
                                                             OpCounter* counter = nullptr) {
  const std::size_t d = code.d(), dp = code.dp();
  if (w.size() != d) throw DomainError("Goppa word must have d symbols");
  const PrimeField& K = code.tw.field();
  Ops<PrimeField> ops(K, counter);
  auto n = u_to_v(ops, code.tw.levels[0].avec, butterfly_interpolate(code.tw, w, counter));
  if (!K.is_zero(n[dp])) return std::nullopt;
  for (std::size_t l = 1; l < dp; ++l)
    if (!K.is_zero(ops.add(n[l], n[d - l]))) return std::nullopt;
  return std::vector<std::uint64_t>(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(dp));
}

}  // namespace ellbfly
