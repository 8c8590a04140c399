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
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"

namespace ellbfly {

// Cyclic bidiagonal matrix M with diagonal b, subdiagonal c and corner c_0,
// i.e. (Mt)_l = b_l t_l + c_l t_{l-1}, with the data needed to solve M t = s
// without online inversions.
template <class F>
struct Bidiag {
  using rep = typename F::rep;
  std::vector<rep> b, c;
  std::vector<rep> w;    // t_{n-1} = sum_k w_k s_k
  std::vector<rep> inv;  // 1/b_l when forward, 1/c_l otherwise
  bool forward = true;
  rep det{};
};

template <class F>
typename F::rep bidiag_det(const F& K, const std::vector<typename F::rep>& b, const std::vector<typename F::rep>& c) {
  auto pb = K.one(), pc = K.one();
  for (const auto& x : b) pb = K.mul(pb, x);
  for (const auto& x : c) pc = K.mul(pc, x);
  return b.size() % 2 == 0 ? K.sub(pb, pc) : K.add(pb, pc);
}

template <class F>
Bidiag<F> make_bidiag(const F& K, std::vector<typename F::rep> b, std::vector<typename F::rep> c) {
  using rep = typename F::rep;
  const std::size_t n = b.size();
  if (n == 0 || c.size() != n) throw DomainError("bidiagonal: length mismatch");
  Bidiag<F> M;
  M.det = bidiag_det(K, b, c);
  if (K.is_zero(M.det)) throw SingularError("cyclic bidiagonal matrix is singular");
  if (n == 1) {
    M.inv = {K.inv(M.det)};
    M.w = {M.inv[0]};
    M.b = std::move(b);
    M.c = std::move(c);
    return M;
  }
  std::vector<rep> pre(n + 1, K.one()), suf(n + 1, K.one());
  for (std::size_t l = 0; l < n; ++l) pre[l + 1] = K.mul(pre[l], b[l]);
  for (std::size_t l = n; l-- > 0;) suf[l] = K.mul(suf[l + 1], c[l]);
  // Cramer: t_{n-1} = sum_k (-1)^{n-1-k} pre_k suf_{k+1} s_k / det.
  const rep idet = K.inv(M.det);
  M.w.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    rep term = K.mul(K.mul(pre[k], suf[k + 1]), idet);
    M.w[k] = ((n - 1 - k) % 2) ? K.neg(term) : term;
  }
  M.forward = true;
  for (const auto& x : b) M.forward = M.forward && !K.is_zero(x);
  M.inv.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    const rep& piv = M.forward ? b[l] : c[l];
    if (K.is_zero(piv)) {
      if (M.forward || l == 0) continue;
      throw SingularError("cyclic bidiagonal matrix has zero entries on both diagonals");
    }
    M.inv[l] = K.inv(piv);
  }
  M.b = std::move(b);
  M.c = std::move(c);
  return M;
}

// Constants of one butterfly level: E -> E' = E/<T> with T = (d/2)t.
// Vector names follow the recursion: b,c diagonals; xv = x'(b'+lt') - x'(U');
// vv = v'_l(U'); tv = theta(b+lt); m = b*vv; n = m + shift(c*vv); dvec holds
// the coefficient of x' at index 0; e,f,i,h,l,p are the reduction constants.
template <class F>
struct LevelCtx {
  using rep = typename F::rep;

  explicit LevelCtx(Isogeny2<F> iso) : phi(std::move(iso)) {}

  const Curve<F>& E() const { return phi.dom; }
  const Curve<F>& E2() const { return phi.cod; }

  std::size_t d = 0, dp = 0;
  Isogeny2<F> phi;
  Point<F> t, T, t2, U2;
  std::optional<Point<F>> b, b2;

  std::vector<rep> avec, avec2, a1vec;
  std::vector<rep> bvec, cvec, vv, mvec, nvec;
  std::vector<rep> xv, tv, tinv, dvec;
  std::vector<rep> evec, fvec, ivec, hvec, lvec, pvec, xUl;
  rep xT{}, lstar{}, pstar{}, nmlast{}, l0lstar{};
  Bidiag<F> bd;
  bool has_eval = true;
};

// Levels from d down to 2 followed by the final curve E_0 = E/<t>.
template <class F>
struct Tower {
  using rep = typename F::rep;

  explicit Tower(std::shared_ptr<const F> field) : K(std::move(field)) {}

  std::shared_ptr<const F> K;
  std::vector<LevelCtx<F>> levels;
  std::vector<Curve<F>> curves;  // curves[k] is the domain of level k
  std::optional<Point<F>> base_b;
  rep base_xb{};

  const F& field() const { return *K; }
  unsigned delta() const { return static_cast<unsigned>(levels.size()); }
  std::size_t d() const { return std::size_t{1} << levels.size(); }
  bool has_eval() const {
    for (const auto& L : levels)
      if (!L.has_eval) return false;
    return true;
  }
};

}  // namespace ellbfly
