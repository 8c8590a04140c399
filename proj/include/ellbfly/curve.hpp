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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"

namespace ellbfly {

// Affine point or the point at infinity O.
template <class F>
struct Point {
  El<F> x, y;
  bool inf = true;

  static Point O() { return Point{}; }
  static Point affine(El<F> x, El<F> y) { return Point{std::move(x), std::move(y), false}; }
  bool is_O() const { return inf; }

  bool operator==(const Point& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }

  std::string str() const {
    if (inf) return "O";
    return "(" + x.str() + "," + y.str() + ")";
  }
};

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class F>
class Curve {
 public:
  using E = El<F>;
  using P = Point<F>;

  Curve(std::shared_ptr<const F> K, const std::array<typename F::rep, 5>& a) : K_(std::move(K)) {
    for (int i = 0; i < 5; ++i) a_[i] = E(*K_, a[i]);
    init();
  }

  static Curve from_ints(std::shared_ptr<const F> K, const std::array<std::int64_t, 5>& a) {
    std::array<typename F::rep, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = K->from_int(a[i]);
    return Curve(std::move(K), r);
  }

  const F& field() const { return *K_; }
  const std::shared_ptr<const F>& field_ptr() const { return K_; }

  const E& a1() const { return a_[0]; }
  const E& a2() const { return a_[1]; }
  const E& a3() const { return a_[2]; }
  const E& a4() const { return a_[3]; }
  const E& a6() const { return a_[4]; }
  std::array<typename F::rep, 5> coeffs() const {
    return {a_[0].v(), a_[1].v(), a_[2].v(), a_[3].v(), a_[4].v()};
  }
  const E& b2() const { return b2_; }
  const E& b4() const { return b4_; }
  const E& b6() const { return b6_; }
  E b8() const {
    return a1() * a1() * a6() + a2() * a6() * 4 - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
  }
  E discriminant() const {
    return -(b2_ * b2_ * b8()) - b4_ * b4_ * b4_ * 8 - b6_ * b6_ * 27 + b2_ * b4_ * b6_ * 9;
  }

  E zero() const { return E(*K_, K_->zero()); }
  E one() const { return E(*K_, K_->one()); }
  E c(std::int64_t v) const { return E(*K_, K_->from_int(v)); }

  E rhs(const E& x) const { return ((x + a2()) * x + a4()) * x + a6(); }

  bool on(const P& p) const {
    if (p.inf) return true;
    return (p.y + a1() * p.x + a3()) * p.y == rhs(p.x);
  }

  P neg(const P& p) const {
    if (p.inf) return p;
    return P::affine(p.x, -p.y - a1() * p.x - a3());
  }

  // Chord or tangent slope through two affine points; nullopt when vertical.
  std::optional<E> slope(const P& p, const P& q) const {
    if (p.inf || q.inf) throw DomainError("slope through the point at infinity");
    if (p.x != q.x) return (q.y - p.y) / (q.x - p.x);
    E den = p.y + q.y + a1() * q.x + a3();
    if (den.is_zero()) return std::nullopt;
    return (p.x * p.x * 3 + a2() * p.x * 2 + a4() - a1() * p.y) / (p.y * 2 + a1() * p.x + a3());
  }

  P add(const P& p, const P& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    auto lam = slope(p, q);
    if (!lam) return P::O();
    const E& l = *lam;
    E nu = p.y - l * p.x;
    E x3 = l * l + a1() * l - a2() - p.x - q.x;
    E y3 = -(l + a1()) * x3 - nu - a3();
    return P::affine(x3, y3);
  }
  P sub(const P& p, const P& q) const { return add(p, neg(q)); }
  P dbl(const P& p) const { return add(p, p); }

  P mul(i128 n, P p) const {
    if (n < 0) {
      n = -n;
      p = neg(p);
    }
    P r = P::O();
    while (n) {
      if (n & 1) r = add(r, p);
      p = dbl(p);
      n >>= 1;
    }
    return r;
  }

  bool is_two_torsion(const P& p) const {
    return !p.inf && (p.y * 2 + a1() * p.x + a3()).is_zero();
  }

  // Order of p if it divides n (n a power of two); 0 otherwise.
  std::uint64_t order_dividing_pow2(const P& p, std::uint64_t n) const {
    P q = p;
    std::uint64_t ord = 1;
    while (!q.inf) {
      if (ord >= n) return 0;
      q = dbl(q);
      ord <<= 1;
    }
    return ord;
  }

  // Points with abscissa x; the two roots are ordered by `which`.
  std::optional<P> lift_x(const E& x, bool which = false) const {
    E B = a1() * x + a3();
    E disc = B * B + rhs(x) * 4;
    auto s = K_->sqrt(disc.v());
    if (!s) return std::nullopt;
    E r(*K_, *s);
    if (which) r = -r;
    return P::affine(x, (r - B).half());
  }

  template <class Rng>
  P random_point(Rng& rng) const {
    for (;;) {
      E x(*K_, K_->random(rng));
      auto p = lift_x(x, (rng() & 1) != 0);
      if (p) return *p;
    }
  }

  // u_{A,B}(P): slope through P-A and A-B.
  E u_func(const P& A, const P& B, const P& p) const {
    P s = sub(A, B);
    if (s.inf) throw DomainError("u_{A,B} requires A != B");
    P q = sub(p, A);
    if (q.inf) throw PoleError("u_{A,B} evaluated at its pole A");
    auto lam = slope(q, s);
    if (!lam) throw PoleError("u_{A,B} evaluated at its pole B");
    return *lam;
  }

  // Gamma(A,B,C) = u_{A,B}(C). When two of the points coincide the secant
  // passes through O and the value is infinite.
  E gamma(const P& A, const P& B, const P& C) const {
    if (A == B && B == C) throw DomainError("Gamma of three equal points");
    if (A == B || B == C || A == C) throw PoleError("Gamma with a repeated point is infinite");
    return u_func(A, B, C);
  }

  // theta = u_{O,T} + a1/2 for the 2-torsion point T.
  E theta(const P& T, const P& p) const { return u_func(P::O(), T, p) + a1().half(); }

  E x_of(const P& p) const {
    if (p.inf) throw PoleError("x evaluated at O");
    return p.x;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[" << a_[0].str() << "," << a_[1].str() << "," << a_[2].str() << "," << a_[3].str() << ","
       << a_[4].str() << "]";
    return os.str();
  }

  bool operator==(const Curve& o) const {
    for (int i = 0; i < 5; ++i)
      if (a_[i] != o.a_[i]) return false;
    return true;
  }

 private:
  void init() {
    b2_ = a1() * a1() + a2() * 4;
    b4_ = a1() * a3() + a4() * 2;
    b6_ = a3() * a3() + a6() * 4;
    if (discriminant().is_zero()) throw SingularError("singular Weierstrass equation " + str());
  }

  std::shared_ptr<const F> K_;
  std::array<E, 5> a_;
  E b2_, b4_, b6_;
};

// Separable isogeny of degree two with kernel {O, T}.
template <class F>
struct Isogeny2 {
  Curve<F> dom;
  Curve<F> cod;
  Point<F> T;
  El<F> w4, w6;

  Point<F> operator()(const Point<F>& p) const {
    if (p.inf || p == T) return Point<F>::O();
    Point<F> pt = dom.add(p, T);
    return Point<F>::affine(p.x + pt.x - T.x, p.y + pt.y - T.y);
  }

  // Image of the 2-torsion points outside the kernel; it does not depend on
  // which of the two is mapped.
  Point<F> u_prime() const {
    El<F> x = -(dom.b2() * dom.c(4).inv()) - T.x * 2;
    El<F> y = -(cod.a1() * x + cod.a3()).half();
    return Point<F>::affine(x, y);
  }

  // Abscissae of the preimages of a point with abscissa X.
  std::vector<El<F>> preimage_x(const El<F>& X) const {
    const F& K = dom.field();
    El<F> s = T.x + X;
    El<F> disc = s * s - (T.x * X + w4) * 4;
    auto r = K.sqrt(disc.v());
    if (!r) return {};
    El<F> rr(K, *r);
    return {(s + rr).half(), (s - rr).half()};
  }
};

template <class F>
Isogeny2<F> velu_quotient(const Curve<F>& E, const Point<F>& T) {
  if (!E.is_two_torsion(T)) throw DomainError("Velu kernel point must have order 2");
  const El<F>& x0 = T.x;
  const El<F>& y0 = T.y;
  El<F> w4 = x0 * x0 * 3 + E.a2() * x0 * 2 + E.a4() - E.a1() * y0;
  El<F> w6 = x0 * x0 * x0 * 7 + (E.a2() * 2 + E.b2()) * x0 * x0 + (E.a4() - y0 * E.a1() + E.b4() * 2) * x0 + E.b6();
  El<F> A4 = E.a4() - w4 * 5;
  El<F> A6 = E.a6() - E.b2() * w4 - w6 * 7;
  Curve<F> cod(E.field_ptr(), {E.a1().v(), E.a2().v(), E.a3().v(), A4.v(), A6.v()});
  return Isogeny2<F>{E, cod, T, w4, w6};
}

// Base field curves and points viewed over an extension, and back.
inline Curve<ExtField> lift(const Curve<PrimeField>& E, std::shared_ptr<const ExtField> L) {
  std::array<ExtField::rep, 5> a;
  auto c = E.coeffs();
  for (int i = 0; i < 5; ++i) a[i] = L->embed(c[i]);
  return Curve<ExtField>(std::move(L), a);
}

inline Point<ExtField> lift(const Point<PrimeField>& p, const ExtField& L) {
  if (p.inf) return Point<ExtField>::O();
  return Point<ExtField>::affine(El<ExtField>(L, L.embed(p.x.v())), El<ExtField>(L, L.embed(p.y.v())));
}

inline Curve<PrimeField> descend(const Curve<ExtField>& E, std::shared_ptr<const PrimeField> K) {
  std::array<std::uint64_t, 5> a;
  auto c = E.coeffs();
  for (int i = 0; i < 5; ++i) a[i] = E.field().to_base(c[i]);
  return Curve<PrimeField>(std::move(K), a);
}

inline Point<PrimeField> descend(const Point<ExtField>& p, const PrimeField& K) {
  if (p.inf) return Point<PrimeField>::O();
  const ExtField& L = p.x.field();
  return Point<PrimeField>::affine(El<PrimeField>(K, L.to_base(p.x.v())), El<PrimeField>(K, L.to_base(p.y.v())));
}

}  // namespace ellbfly
