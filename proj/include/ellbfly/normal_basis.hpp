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
#include <random>
#include <string>
#include <vector>

#include "ellbfly/basis.hpp"
#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"
#include "ellbfly/ntt.hpp"
#include "ellbfly/ring.hpp"
#include "ellbfly/search.hpp"
#include "ellbfly/tower.hpp"

namespace ellbfly {

enum class NormalBranch { Auto, Kummer, Elliptic };

// Degree d = 2^delta extension of F_q with a normal basis Theta on which the
// Frobenius acts as the cyclic shift sigma(c)_l = c_{l-1}.
class NormalBasisField {
 public:
  using rep = std::uint64_t;
  using Vec = std::vector<rep>;

  NormalBranch branch() const { return branch_; }
  std::size_t d() const { return d_; }
  unsigned delta() const { return delta_; }
  const PrimeField& field() const { return *K_; }
  // Whether 4 d^4 <= q holds.
  bool within_hypothesis() const { return within_hypothesis_; }

  // Kummer data: L = F_q[X]/(X^d - a).
  rep kummer_a() const { return a_; }
  // Elliptic data.
  const std::optional<TorsionCurve>& curve() const { return curve_; }
  const std::optional<Point<ExtField>>& b() const { return b_; }
  const RingCtx& ring() const { return *ring_; }

  Vec one() const {
    if (branch_ == NormalBranch::Elliptic) return ring_one(d_);
    return Vec(d_, inv_d_);
  }

  Vec multiply(const Vec& f, const Vec& g, OpCounter* counter = nullptr) const {
    if (f.size() != d_ || g.size() != d_) throw DomainError("normal basis multiply: length mismatch");
    if (branch_ == NormalBranch::Elliptic) return ring_multiply(*ring_, f, g, counter);
    // Theta -> Pi, product in F_q[X]/(X^d - a), Pi -> Theta.
    Vec F = ntt_d_->forward(f, counter), G = ntt_d_->forward(g, counter);
    F.resize(2 * d_, 0);
    G.resize(2 * d_, 0);
    Vec H = ntt_cyclic_convolution(*ntt_2d_, F, G, counter);
    Ops<PrimeField> ops(*K_, counter);
    for (std::size_t l = 0; l < d_; ++l) H[l] = ops.add(H[l], ops.mul(a_, H[l + d_]));
    H.resize(d_);
    return ntt_d_->inverse(H, counter);
  }

  // Coordinates of x^q.
  Vec frobenius(const Vec& c) const {
    Vec out(d_);
    for (std::size_t l = 0; l < d_; ++l) out[l] = c[(l + d_ - 1) % d_];
    return out;
  }

  // Explicit isomorphism onto a polynomial quotient, for checks.
  const ExtField& oracle_field() const { return *L_; }
  ExtField::rep to_ext(const Vec& c) const {
    if (branch_ == NormalBranch::Kummer) {
      Vec pi = ntt_d_->forward(c);
      return ExtField::rep(pi.begin(), pi.end());
    }
    ExtField::rep s = L_->zero();
    for (std::size_t l = 0; l < d_; ++l) s = L_->add(s, L_->scale(ub_[l], c[l]));
    return s;
  }

  friend NormalBasisField build_normal_basis_field(std::shared_ptr<const PrimeField> K, unsigned delta,
                                                   std::uint64_t seed, bool allow_small, NormalBranch want);

 private:
  NormalBranch branch_ = NormalBranch::Kummer;
  std::shared_ptr<const PrimeField> K_;
  std::size_t d_ = 0;
  unsigned delta_ = 0;
  bool within_hypothesis_ = false;
  std::shared_ptr<const ExtField> L_;
  rep a_ = 0, inv_d_ = 1;
  std::optional<NttCtx> ntt_d_, ntt_2d_;
  std::optional<TorsionCurve> curve_;
  std::optional<Point<ExtField>> b_;
  std::optional<RingCtx> ring_;
  std::vector<ExtField::rep> ub_;
};

namespace detail {

// A point of the fiber over a rational point r of the final curve.
inline std::optional<Point<ExtField>> lift_fiber(const std::vector<Isogeny2<ExtField>>& isos,
                                                 const Point<ExtField>& r) {
  Point<ExtField> Q = r;
  for (std::size_t k = isos.size(); k-- > 0;) {
    const auto& iso = isos[k];
    std::optional<Point<ExtField>> found;
    for (const auto& x : iso.preimage_x(Q.x)) {
      for (bool which : {false, true}) {
        auto P = iso.dom.lift_x(x, which);
        if (P && iso(*P) == Q) {
          found = P;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    Q = *found;
  }
  return Q;
}

}  // namespace detail

// Kummer branch when 2^(delta+1) divides q - 1, elliptic branch otherwise.
// allow_small accepts q < 4 d^4; the result records it.
inline NormalBasisField build_normal_basis_field(std::shared_ptr<const PrimeField> K, unsigned delta,
                                                 std::uint64_t seed, bool allow_small = false,
                                                 NormalBranch want = NormalBranch::Auto) {
  NormalBasisField nb;
  const std::uint64_t q = K->p();
  const std::size_t d = std::size_t{1} << delta;
  nb.K_ = K;
  nb.d_ = d;
  nb.delta_ = delta;
  const u128 d4 = static_cast<u128>(d) * d * d * d * 4;
  nb.within_hypothesis_ = d4 <= q;
  if (!nb.within_hypothesis_ && !allow_small)
    throw DomainError("q = " + std::to_string(q) + " is below 4d^4; pass the override to experiment");
  const int nu = detail::v2(q - 1);
  NormalBranch br = want;
  if (br == NormalBranch::Auto) br = nu >= static_cast<int>(delta) + 1 ? NormalBranch::Kummer : NormalBranch::Elliptic;
  nb.branch_ = br;

  if (br == NormalBranch::Kummer) {
    if (nu < static_cast<int>(delta) + 1) throw DomainError("Kummer branch needs 2^(delta+1) | q - 1");
    std::uint64_t g = 2;
    while (K->legendre(g) != -1) ++g;
    nb.a_ = K->pow(g, (q - 1) >> nu);
    const std::uint64_t t = K->pow(nb.a_, (q - 1) / d);
    nb.ntt_d_.emplace(K, d, t);
    nb.ntt_2d_.emplace(K, 2 * d);
    nb.inv_d_ = K->inv(K->from_u64(d));
    poly::Poly m(d + 1, 0);
    m[0] = K->neg(nb.a_);
    m[d] = 1;
    nb.L_ = std::make_shared<const ExtField>(*K, m, d <= 64);
    return nb;
  }

  TorsionCurve tc = find_torsion_curve(K, delta, seed);
  auto L = std::make_shared<const ExtField>(ExtField::with_degree(*K, d));
  L->order();  // throws when q^d does not fit the square-root exponents
  Tower<PrimeField> tr = build_tower(tc.E, tc.t, tc.R);
  std::vector<Isogeny2<ExtField>> isos;
  for (const auto& lv : tr.levels) isos.push_back(velu_quotient(lift(lv.E(), L), lift(lv.T, *L)));
  Curve<ExtField> EL = lift(tc.E, L);
  Point<ExtField> tL = lift(tc.t, *L);
  const Curve<PrimeField>& E0 = tr.curves.back();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Point<PrimeField> r = E0.random_point(rng);
    auto b = detail::lift_fiber(isos, lift(r, *L));
    if (!b) continue;
    Point<ExtField> pb = Point<ExtField>::affine(El<ExtField>(*L, L->frobenius(b->x.v())),
                                                 El<ExtField>(*L, L->frobenius(b->y.v())));
    std::optional<std::size_t> k;
    Point<ExtField> q = *b;
    for (std::size_t j = 0; j < d; ++j) {
      if (q == pb) {
        k = j;
        break;
      }
      q = EL.add(q, tL);
    }
    if (!k) throw MathError("internal: Frobenius does not preserve the fiber");
    if (*k % 2 == 0) continue;
    std::size_t kinv = 1;
    while ((kinv * *k) % d != 1) kinv += 2;
    Point<ExtField> bn = EL.mul(static_cast<i128>(d - kinv), *b);
    if (EL.mul(static_cast<i128>(d), bn).inf) continue;
    Tower<PrimeField> tb = build_tower_ext(tc.E, tc.t, L, bn);
    nb.ring_ = make_ring(std::move(tb), std::move(tr));
    BasisCtx<ExtField> BL(EL, tL, d);
    for (std::size_t l = 0; l < d; ++l) nb.ub_.push_back(BL.u(l, bn).v());
    nb.curve_ = tc;
    nb.b_ = bn;
    nb.L_ = L;
    return nb;
  }
  throw SearchError("no fiber with a Frobenius orbit of size d found");
}

}  // namespace ellbfly
