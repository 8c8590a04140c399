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
#include <string>
#include <vector>

#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"
#include "ellbfly/linalg.hpp"
#include "ellbfly/ops.hpp"

namespace ellbfly {

// Coordinate systems of L(<t>): u_l = u_{lt,(l+1)t} + (1 - a)/d, v_0 = 1 and
// v_l = u_{O,lt}, x_l = x o tau_{-lt}.
enum class Coords { U, V, X };

inline const char* coords_name(Coords c) {
  switch (c) {
    case Coords::U:
      return "u";
    case Coords::V:
      return "v";
    case Coords::X:
      return "x";
  }
  return "?";
}

// v -> u: out_m = sum_{l>m} c_l + sum_l c_l a_l.
template <class F>
std::vector<typename F::rep> v_to_u(const Ops<F>& ops, const std::vector<typename F::rep>& avec,
                                    const std::vector<typename F::rep>& c) {
  const std::size_t d = c.size();
  if (avec.size() != d) throw DomainError("v_to_u: length mismatch");
  std::vector<typename F::rep> out(d);
  auto k = c[0];
  for (std::size_t l = 1; l < d; ++l) k = ops.add(k, ops.mul(c[l], avec[l]));
  out[d - 1] = k;
  if (d == 1) return out;
  auto suf = c[d - 1];
  for (std::size_t m = d - 1; m-- > 0;) {
    out[m] = ops.add(suf, k);
    if (m) suf = ops.add(suf, c[m]);
  }
  return out;
}

// u -> v: c_l = f_{l-1} - f_l for l >= 1, c_0 = f_{d-1} - sum_{l>=1} c_l a_l.
template <class F>
std::vector<typename F::rep> u_to_v(const Ops<F>& ops, const std::vector<typename F::rep>& avec,
                                    const std::vector<typename F::rep>& f) {
  const std::size_t d = f.size();
  if (avec.size() != d) throw DomainError("u_to_v: length mismatch");
  std::vector<typename F::rep> c(d);
  auto c0 = f[d - 1];
  for (std::size_t l = 1; l < d; ++l) {
    c[l] = ops.sub(f[l - 1], f[l]);
    c0 = ops.sub(c0, ops.mul(c[l], avec[l]));
  }
  c[0] = c0;
  return c;
}

// The bases u, v, x of L(<t>) for a point t of exact order d.
template <class F>
class BasisCtx {
 public:
  using rep = typename F::rep;
  using E = El<F>;
  using P = Point<F>;

  BasisCtx(const Curve<F>& curve, const P& t, std::size_t d) : E_(curve), t_(t), d_(d) {
    if (d < 1) throw DomainError("basis size must be positive");
    mult_.reserve(d);
    P q = P::O();
    for (std::size_t l = 0; l < d; ++l) {
      mult_.push_back(q);
      if (l > 0 && q.inf) throw DomainError("t has order below " + std::to_string(d));
      q = E_.add(q, t);
    }
    if (!q.inf) throw DomainError("t does not have order " + std::to_string(d));
    const F& K = E_.field();
    avec_.assign(d, K.zero());
    avec_[0] = K.one();
    if (d == 1) {
      frak_a_ = E_.zero();
      cu_ = E_.one();
      return;
    }
    std::vector<E> G(d, E_.zero());
    E acc = -E_.a1();
    for (std::size_t k = 2; k < d; ++k) {
      G[k] = E_.gamma(P::O(), mult_[k - 1], mult_[k]);
      acc += G[k];
    }
    frak_a_ = acc;
    E invd = E_.c(static_cast<std::int64_t>(d)).inv();
    E am1 = (frak_a_ - E_.one()) * invd;
    E run = E_.zero();
    for (std::size_t l = 1; l < d; ++l) {
      if (l >= 2) run += G[l];
      avec_[l] = (am1 * static_cast<std::int64_t>(l) - run).v();
    }
    cu_ = (E_.one() - frak_a_) * invd;
  }

  const Curve<F>& curve() const { return E_; }
  const P& t() const { return t_; }
  std::size_t d() const { return d_; }
  const E& frak_a() const { return frak_a_; }
  const std::vector<rep>& avec() const { return avec_; }
  const P& mult(std::size_t l) const { return mult_[l % d_]; }

  E u(std::size_t l, const P& p) const {
    if (d_ == 1) return E_.one();
    l %= d_;
    return E_.u_func(mult_[l], mult_[(l + 1) % d_], p) + cu_;
  }
  E v(std::size_t l, const P& p) const {
    l %= d_;
    if (l == 0) return E_.one();
    return E_.u_func(P::O(), mult_[l], p);
  }
  E x(std::size_t l, const P& p) const { return E_.x_of(E_.sub(p, mult_[l % d_])); }

  E basis_value(Coords c, std::size_t l, const P& p) const {
    switch (c) {
      case Coords::U:
        return u(l, p);
      case Coords::V:
        return v(l, p);
      case Coords::X:
        return x(l, p);
    }
    throw DomainError("unknown coordinates");
  }

  std::vector<rep> v_to_u(const std::vector<rep>& c) const { return ellbfly::v_to_u(Ops<F>(E_.field()), avec_, c); }
  std::vector<rep> u_to_v(const std::vector<rep>& f) const { return ellbfly::u_to_v(Ops<F>(E_.field()), avec_, f); }

  E evaluate(Coords c, const std::vector<rep>& f, const P& p) const {
    if (f.size() != d_) throw DomainError("coefficient vector has wrong length");
    E s = E_.zero();
    for (std::size_t l = 0; l < d_; ++l) s += E(E_.field(), f[l]) * basis_value(c, l, p);
    return s;
  }

  // O(d^2) evaluation by direct summation.
  std::vector<rep> oracle_evaluate(Coords c, const std::vector<rep>& f, const std::vector<P>& pts) const {
    std::vector<rep> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(evaluate(c, f, p).v());
    return out;
  }

  Matrix<F> matrix(Coords c, const std::vector<P>& pts) const {
    Matrix<F> A(pts.size(), std::vector<rep>(d_));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t l = 0; l < d_; ++l) A[i][l] = basis_value(c, l, pts[i]).v();
    return A;
  }

  // Unique f in L(<t>) (u coordinates) with f(pts_i) = values_i; dense solve.
  std::vector<rep> oracle_interpolate(const std::vector<P>& pts, const std::vector<rep>& values) const {
    if (pts.size() != d_ || values.size() != d_) throw DomainError("interpolation needs d points and d values");
    try {
      return solve(E_.field(), matrix(Coords::U, pts), values);
    } catch (const SingularError&) {
      throw SingularError("interpolation matrix is singular: db = O or repeated points");
    }
  }

  // f in L(<t>) congruent to sum F_l x_l on the given points.
  std::vector<rep> oracle_reduce(const std::vector<rep>& Fx, const std::vector<P>& pts) const {
    return oracle_interpolate(pts, oracle_evaluate(Coords::X, Fx, pts));
  }

  // The coset b + <t>.
  std::vector<P> coset(const P& b) const {
    std::vector<P> pts;
    pts.reserve(d_);
    for (std::size_t l = 0; l < d_; ++l) pts.push_back(E_.add(b, mult_[l]));
    return pts;
  }

 private:
  Curve<F> E_;
  P t_;
  std::size_t d_;
  std::vector<P> mult_;
  E frak_a_, cu_;
  std::vector<rep> avec_;
};

// Dense oracle on a fixed coset: evaluation matrices and the inverse of the u
// matrix are computed once.
template <class F>
class DenseOracle {
 public:
  using rep = typename F::rep;

  DenseOracle(const BasisCtx<F>& basis, const Point<F>& b)
      : K_(&basis.curve().field()), pts_(basis.coset(b)) {
    U_ = basis.matrix(Coords::U, pts_);
    V_ = basis.matrix(Coords::V, pts_);
    X_ = basis.matrix(Coords::X, pts_);
    Uinv_ = inverse(*K_, U_);
  }

  const std::vector<Point<F>>& points() const { return pts_; }

  std::vector<rep> evaluate(Coords c, const std::vector<rep>& f) const {
    return mat_vec(*K_, c == Coords::U ? U_ : c == Coords::V ? V_ : X_, f);
  }
  std::vector<rep> interpolate(const std::vector<rep>& values) const { return mat_vec(*K_, Uinv_, values); }
  std::vector<rep> reduce(const std::vector<rep>& Fx) const { return interpolate(evaluate(Coords::X, Fx)); }

 private:
  const F* K_;
  std::vector<Point<F>> pts_;
  Matrix<F> U_, V_, X_, Uinv_;
};

}  // namespace ellbfly
