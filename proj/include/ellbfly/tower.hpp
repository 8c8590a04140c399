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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellbfly/basis.hpp"
#include "ellbfly/butterfly.hpp"
#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"
#include "ellbfly/level.hpp"
#include "ellbfly/linalg.hpp"

namespace ellbfly {

// Exact order of t, a power of two; throws otherwise.
template <class F>
std::size_t two_power_order(const Curve<F>& E, const Point<F>& t) {
  std::uint64_t n = E.order_dividing_pow2(t, std::uint64_t{1} << 40);
  if (n == 0) throw DomainError("point order is not a power of two");
  return static_cast<std::size_t>(n);
}

namespace detail {

template <class F>
LevelCtx<F> make_level(const Curve<F>& E, const Point<F>& t, const Point<F>& b, std::size_t d) {
  const F& K = E.field();
  const std::size_t dp = d / 2;
  Point<F> T = E.mul(static_cast<i128>(dp), t);
  LevelCtx<F> L(velu_quotient(E, T));
  const Curve<F>& E2 = L.E2();
  L.d = d;
  L.dp = dp;
  L.t = t;
  L.T = T;
  L.t2 = L.phi(t);
  L.b = b;
  L.b2 = L.phi(b);
  L.U2 = L.phi.u_prime();
  if (!E2.on(L.U2) || !E2.is_two_torsion(L.U2)) throw MathError("internal: U' is not a 2-torsion point of E'");

  BasisCtx<F> B(E, t, d);
  BasisCtx<F> B2(E2, L.t2, dp);
  L.avec = B.avec();
  L.avec2 = B2.avec();
  L.a1vec.resize(dp);
  for (std::size_t l = 0; l < dp; ++l) L.a1vec[l] = K.sub(L.avec[l + dp], L.avec[l]);

  std::vector<El<F>> th(dp);
  for (std::size_t l = 1; l < dp; ++l) th[l] = E.theta(T, B.mult(l));
  const El<F> half_a1 = E.a1().half();
  L.bvec.assign(dp, K.one());
  L.cvec.assign(dp, K.one());
  L.evec.assign(dp, K.zero());
  L.fvec.assign(dp, half_a1.v());
  L.ivec.assign(dp, K.zero());
  for (std::size_t l = 1; l < dp; ++l) {
    L.bvec[l] = (-th[l]).v();
    L.cvec[l] = th[l].v();
    L.evec[l] = (B.mult(l).x - E.add(B.mult(l), T).x).v();
    L.fvec[l] = th[l].v();
    L.ivec[l] = th[l].inv().v();
  }
  L.vv.resize(dp);
  L.xUl.resize(dp);
  for (std::size_t l = 0; l < dp; ++l) {
    L.vv[l] = B2.v(l, L.U2).v();
    L.xUl[l] = E2.x_of(E2.add(L.U2, B2.mult(l))).v();
  }
  L.mvec.resize(dp);
  L.nvec.resize(dp);
  for (std::size_t l = 0; l < dp; ++l) L.mvec[l] = K.mul(L.bvec[l], L.vv[l]);
  for (std::size_t l = 0; l < dp; ++l) {
    std::size_t j = (l + 1) % dp;
    L.nvec[l] = K.add(L.mvec[l], K.mul(L.cvec[j], L.vv[j]));
  }
  L.nmlast = K.sub(L.nvec[dp - 1], L.mvec[dp - 1]);
  L.pvec.resize(dp);
  for (std::size_t l = 0; l < dp; ++l) L.pvec[l] = K.add(K.mul(L.evec[l], L.vv[l]), K.mul(L.fvec[l], L.xUl[l]));
  L.pstar = K.sub(K.sub(L.pvec[0], K.mul(L.fvec[0], L.U2.x.v())), L.U2.y.v());
  L.xT = T.x.v();

  L.tv.resize(dp);
  L.tinv.resize(dp);
  L.xv.resize(dp);
  for (std::size_t l = 0; l < dp; ++l) {
    El<F> v = E.theta(T, E.add(b, B.mult(l)));
    if (v.is_zero()) throw SingularError("theta vanishes on the coset b + <t>");
    L.tv[l] = v.v();
    L.tinv[l] = v.inv().v();
    L.xv[l] = (E2.x_of(E2.add(*L.b2, B2.mult(l))) - L.U2.x).v();
  }
  L.bd = make_bidiag(K, L.bvec, L.cvec);
  return L;
}

}  // namespace detail

// Builds all level constants for evaluation/interpolation/reduction on
// b + <t>. t must have order 2^delta >= 2 and db != O.
template <class F>
Tower<F> build_tower(const Curve<F>& E, const Point<F>& t, const Point<F>& b) {
  using rep = typename F::rep;
  const std::size_t d = two_power_order(E, t);
  if (d < 2) throw DomainError("tower needs t of order at least 2");
  if (!E.on(t) || !E.on(b)) throw DomainError("tower points must lie on the curve");
  if (E.mul(static_cast<i128>(d), b).inf) throw DomainError("db = O: coset b + <t> is not admissible");
  const F& K = E.field();
  Tower<F> tw(E.field_ptr());
  Curve<F> cur = E;
  Point<F> tc = t, bc = b;
  for (std::size_t dd = d; dd >= 2; dd /= 2) {
    tw.levels.push_back(detail::make_level(cur, tc, bc, dd));
    tw.curves.push_back(cur);
    const auto& L = tw.levels.back();
    cur = L.E2();
    tc = L.t2;
    bc = *L.b2;
  }
  tw.curves.push_back(cur);
  if (bc.inf) throw MathError("internal: b maps to O on the final curve");
  tw.base_b = bc;
  tw.base_xb = bc.x.v();

  Ops<F> ops(K);
  for (std::size_t k = tw.levels.size(); k-- > 0;) {
    auto& L = tw.levels[k];
    const Curve<F>& E2 = L.E2();
    const std::size_t dp = L.dp;
    std::vector<rep> xs(dp), ys(dp);
    Point<F> q = *L.b2;
    for (std::size_t l = 0; l < dp; ++l) {
      xs[l] = q.x.v();
      ys[l] = q.y.v();
      q = E2.add(q, L.t2);
    }
    L.hvec = u_to_v(ops, L.avec2, detail::interpolate_rec(tw, ops, ys, k + 1));
    std::vector<rep> g = u_to_v(ops, L.avec2, detail::interpolate_rec(tw, ops, xs, k + 1));
    rep den = K.sub(L.U2.x.v(), ops.dot(g, L.vv));
    if (K.is_zero(den)) throw SingularError("xi_b cannot be normalized at U'");
    rep c = K.inv(den);
    L.dvec.resize(dp);
    L.dvec[0] = c;
    for (std::size_t l = 1; l < dp; ++l) L.dvec[l] = K.neg(K.mul(c, g[l]));
    // (1 - xi_b o phi)/theta agrees with 1/theta on b + <t>.
    std::vector<rep> vals(L.d);
    Point<F> p = *L.b;
    for (std::size_t l = 0; l < L.d; ++l) {
      vals[l] = L.E().theta(L.T, p).inv().v();
      p = L.E().add(p, L.t);
    }
    std::vector<rep> lfull = u_to_v(ops, L.avec, detail::interpolate_rec(tw, ops, vals, k));
    L.lvec.assign(lfull.begin(), lfull.begin() + static_cast<std::ptrdiff_t>(dp));
    L.lstar = lfull[dp];
    L.l0lstar = K.add(L.lvec[0], L.lstar);
  }
  return tw;
}

// Moves a tower computed over an extension (b not rational, b + <t> Galois
// stable) to the base field. Constants that only exist pointwise on the
// coset (xv, tv) are dropped, which leaves reduction available.
inline Tower<PrimeField> descend(const Tower<ExtField>& tx, std::shared_ptr<const PrimeField> K) {
  const ExtField& L = tx.field();
  auto vec = [&](const std::vector<ExtField::rep>& v) {
    std::vector<std::uint64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(L.to_base(x));
    return out;
  };
  auto try_vec = [&](const std::vector<ExtField::rep>& v) -> std::optional<std::vector<std::uint64_t>> {
    for (const auto& x : v)
      if (!L.in_base(x)) return std::nullopt;
    return vec(v);
  };
  Tower<PrimeField> tw(K);
  for (const auto& c : tx.curves) tw.curves.push_back(descend(c, K));
  for (std::size_t k = 0; k < tx.levels.size(); ++k) {
    const auto& X = tx.levels[k];
    Isogeny2<PrimeField> iso{tw.curves[k], tw.curves[k + 1], descend(X.T, *K),
                             El<PrimeField>(*K, L.to_base(X.phi.w4.v())), El<PrimeField>(*K, L.to_base(X.phi.w6.v()))};
    LevelCtx<PrimeField> Y(iso);
    Y.d = X.d;
    Y.dp = X.dp;
    Y.t = descend(X.t, *K);
    Y.T = descend(X.T, *K);
    Y.t2 = descend(X.t2, *K);
    Y.U2 = descend(X.U2, *K);
    Y.avec = vec(X.avec);
    Y.avec2 = vec(X.avec2);
    Y.a1vec = vec(X.a1vec);
    Y.bvec = vec(X.bvec);
    Y.cvec = vec(X.cvec);
    Y.vv = vec(X.vv);
    Y.mvec = vec(X.mvec);
    Y.nvec = vec(X.nvec);
    Y.dvec = vec(X.dvec);
    Y.evec = vec(X.evec);
    Y.fvec = vec(X.fvec);
    Y.ivec = vec(X.ivec);
    Y.hvec = vec(X.hvec);
    Y.lvec = vec(X.lvec);
    Y.pvec = vec(X.pvec);
    Y.xUl = vec(X.xUl);
    Y.xT = L.to_base(X.xT);
    Y.lstar = L.to_base(X.lstar);
    Y.pstar = L.to_base(X.pstar);
    Y.nmlast = L.to_base(X.nmlast);
    Y.l0lstar = L.to_base(X.l0lstar);
    auto xv = try_vec(X.xv), tv = try_vec(X.tv), tinv = try_vec(X.tinv);
    if (xv && tv && tinv) {
      Y.xv = *xv;
      Y.tv = *tv;
      Y.tinv = *tinv;
    } else {
      Y.has_eval = false;
    }
    Y.bd = make_bidiag(*K, Y.bvec, Y.cvec);
    tw.levels.push_back(std::move(Y));
  }
  tw.base_xb = L.to_base(tx.base_xb);
  return tw;
}

// Tower for a coset b + <t> whose points live in the extension L.
inline Tower<PrimeField> build_tower_ext(const Curve<PrimeField>& E, const Point<PrimeField>& t,
                                         std::shared_ptr<const ExtField> L, const Point<ExtField>& b) {
  Curve<ExtField> EL = lift(E, L);
  Tower<ExtField> tx = build_tower(EL, lift(t, *L), b);
  return descend(tx, E.field_ptr());
}

// Dense reference computations of the constants without closed forms.

// (x' coefficient, v'_0 coefficient, ..., v'_{d'-1} coefficient) of xi_b.
template <class F>
std::vector<typename F::rep> dense_xi_coeffs(const LevelCtx<F>& L) {
  using rep = typename F::rep;
  const Curve<F>& E2 = L.E2();
  BasisCtx<F> B2(E2, L.t2, L.dp);
  std::vector<Point<F>> pts = B2.coset(*L.b2);
  pts.push_back(L.U2);
  Matrix<F> A;
  std::vector<rep> rhs(pts.size(), E2.field().zero());
  rhs.back() = E2.field().one();
  for (const auto& P : pts) {
    std::vector<rep> row{P.x.v()};
    for (std::size_t l = 0; l < L.dp; ++l) row.push_back(B2.v(l, P).v());
    A.push_back(row);
  }
  return solve(E2.field(), A, rhs);
}

template <class F>
std::vector<typename F::rep> dense_h_coeffs(const LevelCtx<F>& L) {
  using rep = typename F::rep;
  BasisCtx<F> B2(L.E2(), L.t2, L.dp);
  std::vector<Point<F>> pts = B2.coset(*L.b2);
  std::vector<rep> ys;
  for (const auto& P : pts) ys.push_back(P.y.v());
  return B2.u_to_v(B2.oracle_interpolate(pts, ys));
}

template <class F>
El<F> xi_value(const LevelCtx<F>& L, const std::vector<typename F::rep>& xi, const Point<F>& Q) {
  BasisCtx<F> B2(L.E2(), L.t2, L.dp);
  const F& K = L.E2().field();
  El<F> s = El<F>(K, xi[0]) * L.E2().x_of(Q);
  for (std::size_t l = 0; l < L.dp; ++l) s += El<F>(K, xi[l + 1]) * B2.v(l, Q);
  return s;
}

// v coordinates on E of (1 - xi_b o phi)/theta, interpolated on R + <t>.
template <class F>
std::vector<typename F::rep> dense_l_coeffs(const LevelCtx<F>& L, const Point<F>& R) {
  using rep = typename F::rep;
  BasisCtx<F> B(L.E(), L.t, L.d);
  std::vector<rep> xi = dense_xi_coeffs(L);
  std::vector<Point<F>> pts = B.coset(R);
  std::vector<rep> vals;
  for (const auto& P : pts) {
    El<F> th = L.E().theta(L.T, P);
    vals.push_back(((L.E().one() - xi_value(L, xi, L.phi(P))) / th).v());
  }
  return B.u_to_v(B.oracle_interpolate(pts, vals));
}

}  // namespace ellbfly
