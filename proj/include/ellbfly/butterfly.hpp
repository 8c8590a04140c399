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
#include <vector>

#include "ellbfly/basis.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/level.hpp"
#include "ellbfly/ops.hpp"

namespace ellbfly {

// s = M t for the cyclic bidiagonal matrix with diagonal b and subdiagonal c.
template <class F>
std::vector<typename F::rep> bidiagonal_apply(const Ops<F>& ops, const std::vector<typename F::rep>& b,
                                              const std::vector<typename F::rep>& c,
                                              const std::vector<typename F::rep>& t) {
  const std::size_t n = t.size();
  if (b.size() != n || c.size() != n) throw DomainError("bidiagonal_apply: length mismatch");
  if (n == 1) return {ops.mul(ops.add(b[0], c[0]), t[0])};
  std::vector<typename F::rep> s(n);
  for (std::size_t l = 0; l < n; ++l) s[l] = ops.add(ops.mul(b[l], t[l]), ops.mul(c[l], t[l == 0 ? n - 1 : l - 1]));
  return s;
}

// Solves M t = s in O(n) with the precomputed data of M.
template <class F>
std::vector<typename F::rep> bidiagonal_solve(const Ops<F>& ops, const Bidiag<F>& M,
                                              const std::vector<typename F::rep>& s) {
  const std::size_t n = s.size();
  if (M.b.size() != n) throw DomainError("bidiagonal_solve: length mismatch");
  std::vector<typename F::rep> t(n);
  t[n - 1] = ops.dot(M.w, s);
  if (n == 1) return t;
  if (M.forward) {
    for (std::size_t l = 0; l + 1 < n; ++l)
      t[l] = ops.mul(ops.sub(s[l], ops.mul(M.c[l], t[l == 0 ? n - 1 : l - 1])), M.inv[l]);
  } else {
    for (std::size_t l = n - 1; l > 0; --l) t[l - 1] = ops.mul(ops.sub(s[l], ops.mul(M.b[l], t[l])), M.inv[l]);
  }
  return t;
}

template <class F>
std::vector<typename F::rep> bidiagonal_solve(const F& K, const std::vector<typename F::rep>& b,
                                              const std::vector<typename F::rep>& c,
                                              const std::vector<typename F::rep>& s) {
  return bidiagonal_solve(Ops<F>(K), make_bidiag(K, b, c), s);
}

namespace detail {

template <class F>
using Vec = std::vector<typename F::rep>;

template <class F>
void split(const Ops<F>& ops, const Vec<F>& f, std::size_t dp, Vec<F>& plus, Vec<F>& minus) {
  plus.resize(dp);
  minus.resize(dp);
  for (std::size_t l = 0; l < dp; ++l) {
    plus[l] = ops.half(ops.add(f[l], f[l + dp]));
    minus[l] = ops.half(ops.sub(f[l], f[l + dp]));
  }
}

template <class F>
Vec<F> join(const Ops<F>& ops, const Vec<F>& a, const Vec<F>& b) {
  const std::size_t dp = a.size();
  Vec<F> out(2 * dp);
  for (std::size_t l = 0; l < dp; ++l) {
    out[l] = ops.add(a[l], b[l]);
    out[l + dp] = ops.sub(a[l], b[l]);
  }
  return out;
}

template <class F>
Vec<F> evaluate_rec(const Tower<F>& tw, const Ops<F>& ops, const Vec<F>& f, std::size_t k) {
  if (f.size() == 1) return f;
  const LevelCtx<F>& L = tw.levels[k];
  if (!L.has_eval) throw DomainError("tower level lacks evaluation constants");
  const std::size_t dp = L.dp;
  Vec<F> fp, fm;
  split(ops, f, dp, fp, fm);
  Vec<F> ap = evaluate_rec(tw, ops, fp, k + 1);
  auto r = ops.add(ops.mul(L.bvec[0], fm[0]), ops.mul(L.cvec[0], fm[dp - 1]));
  Vec<F> s(dp);
  if (L.d > 2) {
    s[0] = ops.sub(ops.add(ops.mul(L.mvec[0], fm[0]), ops.mul(L.nmlast, fm[dp - 1])), ops.dot(L.nvec, fm));
    for (std::size_t l = 1; l < dp; ++l) s[l] = ops.add(ops.mul(L.bvec[l], fm[l]), ops.mul(L.cvec[l], fm[l - 1]));
  } else {
    s[0] = ops.field().zero();
  }
  Vec<F> am = evaluate_rec(tw, ops, v_to_u(ops, L.avec2, s), k + 1);
  for (std::size_t l = 0; l < dp; ++l) am[l] = ops.mul(ops.add(am[l], ops.mul(r, L.xv[l])), L.tinv[l]);
  return join(ops, ap, am);
}

template <class F>
Vec<F> interpolate_rec(const Tower<F>& tw, const Ops<F>& ops, const Vec<F>& a, std::size_t k) {
  if (a.size() == 1) return a;
  const LevelCtx<F>& L = tw.levels[k];
  if (L.tv.empty()) throw DomainError("tower level lacks interpolation constants");
  const std::size_t dp = L.dp;
  Vec<F> ap, am;
  split(ops, a, dp, ap, am);
  Vec<F> fp = interpolate_rec(tw, ops, ap, k + 1);
  for (std::size_t l = 0; l < dp; ++l) am[l] = ops.mul(L.tv[l], am[l]);
  Vec<F> fm = u_to_v(ops, L.avec2, interpolate_rec(tw, ops, am, k + 1));
  auto fs = ops.dot(L.vv, fm);
  for (std::size_t l = 1; l < dp; ++l) fm[l] = ops.sub(fm[l], ops.mul(fs, L.dvec[l]));
  fm[0] = ops.neg(ops.mul(L.dvec[0], fs));
  return join(ops, fp, bidiagonal_solve(ops, L.bd, fm));
}

template <class F>
Vec<F> reduce_rec(const Tower<F>& tw, const Ops<F>& ops, const Vec<F>& Fx, std::size_t k) {
  if (Fx.size() == 1) {
    if (k != tw.levels.size()) throw DomainError("reduce: length does not match the tower");
    return {ops.mul(tw.base_xb, Fx[0])};
  }
  const LevelCtx<F>& L = tw.levels[k];
  const std::size_t dp = L.dp;
  Vec<F> Fp, Fm;
  split(ops, Fx, dp, Fp, Fm);
  auto Fs = ops.mul(L.xT, ops.sum(Fp));
  Vec<F> fp = reduce_rec(tw, ops, Fp, k + 1);
  for (auto& x : fp) x = ops.add(x, Fs);
  Vec<F> fF(dp);
  for (std::size_t l = 0; l < dp; ++l) fF[l] = ops.mul(L.fvec[l], Fm[l]);
  Vec<F> f1 = u_to_v(ops, L.avec2, reduce_rec(tw, ops, fF, k + 1));
  for (std::size_t l = 0; l < dp; ++l) {
    f1[l] = ops.add(f1[l], ops.mul(Fm[0], L.hvec[l]));
    if (l) f1[l] = ops.add(f1[l], ops.mul(L.evec[l], Fm[l]));
  }
  f1[0] = ops.sub(ops.add(f1[0], ops.mul(L.pstar, Fm[0])), ops.dot(L.pvec, Fm));
  auto fs = ops.dot(L.vv, f1);
  // h = v-coordinates of the T-odd part relative to the shifted a-vector.
  Vec<F> h(dp);
  h[0] = ops.mul(L.lstar, fs);
  for (std::size_t l = 1; l < dp; ++l) h[l] = ops.neg(ops.add(ops.mul(f1[l], L.ivec[l]), ops.mul(fs, L.lvec[l])));
  auto kk = ops.dot(L.a1vec, h);
  auto corr = ops.add(kk, ops.mul(fs, L.l0lstar));
  for (std::size_t l = 1; l < dp; ++l) corr = ops.add(corr, f1[l]);
  Vec<F> g(dp);
  g[dp - 1] = ops.neg(corr);
  if (dp > 1) {
    auto suf = h[dp - 1];
    for (std::size_t m = dp - 1; m-- > 0;) {
      g[m] = ops.neg(ops.add(suf, corr));
      if (m) suf = ops.add(suf, h[m]);
    }
  }
  return join(ops, fp, g);
}

}  // namespace detail

// Values (f(b + lt))_l of f given in u coordinates.
template <class F>
std::vector<typename F::rep> butterfly_evaluate(const Tower<F>& tw, const std::vector<typename F::rep>& f,
                                                OpCounter* counter = nullptr) {
  if (f.size() != tw.d()) throw DomainError("butterfly_evaluate: length does not match the tower");
  return detail::evaluate_rec(tw, Ops<F>(tw.field(), counter), f, 0);
}

// u coordinates of the unique f in L(<t>) with f(b + lt) = alpha_l.
template <class F>
std::vector<typename F::rep> butterfly_interpolate(const Tower<F>& tw, const std::vector<typename F::rep>& alpha,
                                                   OpCounter* counter = nullptr) {
  if (alpha.size() != tw.d()) throw DomainError("butterfly_interpolate: length does not match the tower");
  return detail::interpolate_rec(tw, Ops<F>(tw.field(), counter), alpha, 0);
}

// u coordinates of the f in L(<t>) congruent to sum F_l x_l modulo b + <t>.
template <class F>
std::vector<typename F::rep> butterfly_reduce(const Tower<F>& tw, const std::vector<typename F::rep>& Fx,
                                              OpCounter* counter = nullptr) {
  if (Fx.size() != tw.d()) throw DomainError("butterfly_reduce: length does not match the tower");
  return detail::reduce_rec(tw, Ops<F>(tw.field(), counter), Fx, 0);
}

}  // namespace ellbfly
