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
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"
#include "ellbfly/ops.hpp"
#include "ellbfly/ring.hpp"
#include "ellbfly/search.hpp"

// Toy Elliptic-LWE over the residue ring multiplication. Experimental only:
// no constant-time code, no side-channel hardening, no security claim.

namespace ellbfly {

enum class ChiKind { Binomial, Gaussian, Zero };

// Centered error distribution.
class ErrorSampler {
 public:
  ErrorSampler() : ErrorSampler(ChiKind::Binomial, 2, 0.0) {}
  ErrorSampler(ChiKind kind, unsigned eta, double sigma, double tail = 12.0)
      : kind_(kind), eta_(eta), sigma_(sigma) {
    if (kind_ == ChiKind::Binomial && (eta_ == 0 || eta_ > 32)) throw DomainError("binomial eta must be in [1, 32]");
    if (kind_ == ChiKind::Gaussian) {
      if (!(sigma_ > 0)) throw DomainError("Gaussian sigma must be positive");
      bound_ = static_cast<std::int64_t>(std::ceil(tail * sigma_));
      long double acc = 0;
      std::vector<long double> w;
      for (std::int64_t x = -bound_; x <= bound_; ++x) {
        long double r = std::exp(-static_cast<long double>(x) * x / (2.0L * sigma_ * sigma_));
        w.push_back(r);
        acc += r;
      }
      long double run = 0;
      for (auto r : w) {
        run += r;
        cdf_.push_back(static_cast<double>(run / acc));
      }
      cdf_.back() = 1.0;
    } else if (kind_ == ChiKind::Binomial) {
      bound_ = eta_;
    }
  }

  static ErrorSampler binomial(unsigned eta) { return ErrorSampler(ChiKind::Binomial, eta, 0.0); }
  static ErrorSampler gaussian(double sigma) { return ErrorSampler(ChiKind::Gaussian, 0, sigma); }
  static ErrorSampler zero() { return ErrorSampler(ChiKind::Zero, 0, 0.0); }

  ChiKind kind() const { return kind_; }
  unsigned eta() const { return eta_; }
  double sigma() const { return sigma_; }
  // Largest |x| ever returned.
  std::int64_t bound() const { return bound_; }

  template <class Rng>
  std::int64_t sample(Rng& rng) const {
    switch (kind_) {
      case ChiKind::Zero:
        return 0;
      case ChiKind::Binomial: {
        std::uint64_t bits = rng();
        std::uint64_t mask = (std::uint64_t{1} << eta_) - 1;
        return static_cast<std::int64_t>(__builtin_popcountll(bits & mask)) -
               static_cast<std::int64_t>(__builtin_popcountll((bits >> 32) & mask));
      }
      case ChiKind::Gaussian: {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return static_cast<std::int64_t>(it - cdf_.begin()) - bound_;
      }
    }
    return 0;
  }

  std::string describe() const {
    switch (kind_) {
      case ChiKind::Zero:
        return "zero";
      case ChiKind::Binomial:
        return "binomial(" + std::to_string(eta_) + ")";
      case ChiKind::Gaussian:
        return "gaussian(" + std::to_string(sigma_) + ")";
    }
    return "?";
  }

 private:
  ChiKind kind_;
  unsigned eta_;
  double sigma_;
  std::int64_t bound_ = 0;
  std::vector<double> cdf_;
};

struct LweParams {
  std::shared_ptr<const RingCtx> ring;
  ErrorSampler chi;
  unsigned beta = 1;  // bits per chunk
  unsigned ell = 1;   // number of secrets and of ciphertext vectors
  std::string name;

  std::size_t d() const { return ring->d(); }
  std::uint64_t q() const { return ring->field().p(); }
  std::size_t message_bits() const { return static_cast<std::size_t>(beta) * ell * ell; }
  // floor(q / 2^beta); floor(q/2) for single-bit messages.
  std::uint64_t delta_scale() const { return q() >> beta; }
};

using LweVec = std::vector<std::uint64_t>;

struct LwePublicKey {
  LweVec a;
  std::vector<LweVec> w;
  // Row j holds a (x) e_j, i.e. column j of phi_a; so row j dotted with y is
  // the j-th entry of the transpose applied to y.
  std::vector<LweVec> phiT;
};

struct LweSecretKey {
  std::vector<LweVec> s;
};

struct LweKeyPair {
  LwePublicKey pk;
  LweSecretKey sk;
  std::vector<LweVec> e;  // kept for white-box checks
};

struct LweCiphertext {
  std::vector<LweVec> c1;
  std::vector<std::uint64_t> c2;  // ell x ell, row i pairs with secret i
};

// Randomness of one encryption, for white-box checks.
struct LweEncryptionNoise {
  std::vector<LweVec> r, e1;
  std::vector<std::int64_t> e2;
};

namespace detail {

// sum a_i b_i mod p, accumulating in 128 bits when products fit 64 bits.
inline std::uint64_t dot_mod(const PrimeField& K, const LweVec& a, const LweVec& b, OpCounter* counter) {
  if (counter && !a.empty()) {
    counter->muls += a.size();
    counter->adds += a.size() - 1;
  }
  if (K.p() < (std::uint64_t{1} << 32)) {
    u128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<u128>(a[i] * b[i]);
    return static_cast<std::uint64_t>(acc % K.p());
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = K.add(acc, K.mul(a[i], b[i]));
  return acc;
}

template <class Rng>
LweVec sample_vec(const PrimeField& K, const ErrorSampler& chi, std::size_t d, Rng& rng) {
  LweVec v(d);
  for (auto& x : v) x = K.from_int(chi.sample(rng));
  return v;
}

}  // namespace detail

inline std::uint64_t lwe_dot(const PrimeField& K, const LweVec& a, const LweVec& b, OpCounter* counter = nullptr) {
  return detail::dot_mod(K, a, b, counter);
}

// phi_a(x) = a (x) x through the fast multiplication.
inline LweVec lwe_phi(const LweParams& P, const LweVec& a, const LweVec& x, OpCounter* counter = nullptr) {
  return ring_multiply(*P.ring, a, x, counter);
}

// Transpose of phi_a applied to y, from the explicit matrix.
inline LweVec lwe_phi_transpose(const LweParams& P, const LwePublicKey& pk, const LweVec& y,
                                OpCounter* counter = nullptr) {
  LweVec out(P.d());
  for (std::size_t j = 0; j < P.d(); ++j) out[j] = detail::dot_mod(P.ring->field(), pk.phiT[j], y, counter);
  return out;
}

inline std::vector<LweVec> lwe_transpose_matrix(const LweParams& P, const LweVec& a) {
  std::vector<LweVec> rows(P.d());
  LweVec e(P.d(), 0);
  for (std::size_t j = 0; j < P.d(); ++j) {
    e[j] = 1;
    rows[j] = ring_multiply(*P.ring, a, e);
    e[j] = 0;
  }
  return rows;
}

template <class Rng>
LweKeyPair lwe_keygen(const LweParams& P, Rng& rng) {
  const PrimeField& K = P.ring->field();
  const std::size_t d = P.d();
  LweKeyPair kp;
  kp.pk.a.resize(d);
  for (auto& x : kp.pk.a) x = K.random(rng);
  for (unsigned i = 0; i < P.ell; ++i) kp.sk.s.push_back(detail::sample_vec(K, P.chi, d, rng));
  for (unsigned i = 0; i < P.ell; ++i) kp.e.push_back(detail::sample_vec(K, P.chi, d, rng));
  for (unsigned i = 0; i < P.ell; ++i) {
    LweVec w = lwe_phi(P, kp.pk.a, kp.sk.s[i]);
    for (std::size_t l = 0; l < d; ++l) w[l] = K.add(w[l], kp.e[i][l]);
    kp.pk.w.push_back(std::move(w));
  }
  kp.pk.phiT = lwe_transpose_matrix(P, kp.pk.a);
  return kp;
}

// Encrypts beta * ell^2 bits; chunk (i, j) is bits [(i*ell + j)*beta, +beta),
// least significant first.
template <class Rng>
LweCiphertext lwe_encrypt(const LweParams& P, const LwePublicKey& pk, const std::vector<std::uint8_t>& bits, Rng& rng,
                          LweEncryptionNoise* noise = nullptr, OpCounter* counter = nullptr) {
  if (bits.size() != P.message_bits()) throw DomainError("message must have beta * ell^2 bits");
  const PrimeField& K = P.ring->field();
  const std::size_t d = P.d();
  const unsigned ell = P.ell;
  LweEncryptionNoise nz;
  for (unsigned j = 0; j < ell; ++j) nz.r.push_back(detail::sample_vec(K, P.chi, d, rng));
  for (unsigned j = 0; j < ell; ++j) nz.e1.push_back(detail::sample_vec(K, P.chi, d, rng));
  for (unsigned k = 0; k < ell * ell; ++k) nz.e2.push_back(P.chi.sample(rng));
  Ops<PrimeField> ops(K, counter);
  LweCiphertext ct;
  for (unsigned j = 0; j < ell; ++j) {
    LweVec c1 = lwe_phi_transpose(P, pk, nz.r[j], counter);
    for (std::size_t l = 0; l < d; ++l) c1[l] = ops.add(c1[l], nz.e1[j][l]);
    ct.c1.push_back(std::move(c1));
  }
  const std::uint64_t scale = P.delta_scale();
  for (unsigned i = 0; i < ell; ++i) {
    for (unsigned j = 0; j < ell; ++j) {
      std::uint64_t mu = 0;
      const std::size_t off = (static_cast<std::size_t>(i) * ell + j) * P.beta;
      for (unsigned k = 0; k < P.beta; ++k) mu |= static_cast<std::uint64_t>(bits[off + k] & 1) << k;
      std::uint64_t v = detail::dot_mod(K, nz.r[j], pk.w[i], counter);
      v = ops.add(v, K.from_int(nz.e2[static_cast<std::size_t>(i) * ell + j]));
      v = ops.add(v, ops.mul(K.from_u64(scale), mu));
      ct.c2.push_back(v);
    }
  }
  if (noise) *noise = std::move(nz);
  return ct;
}

// c2_ij - <c1_j, s_i> for every chunk.
inline std::vector<std::uint64_t> lwe_phases(const LweParams& P, const LweSecretKey& sk, const LweCiphertext& ct,
                                             OpCounter* counter = nullptr) {
  const PrimeField& K = P.ring->field();
  Ops<PrimeField> ops(K, counter);
  std::vector<std::uint64_t> out;
  for (unsigned i = 0; i < P.ell; ++i)
    for (unsigned j = 0; j < P.ell; ++j)
      out.push_back(ops.sub(ct.c2[static_cast<std::size_t>(i) * P.ell + j], detail::dot_mod(K, ct.c1[j], sk.s[i], counter)));
  return out;
}

inline std::vector<std::uint8_t> lwe_decrypt(const LweParams& P, const LweSecretKey& sk, const LweCiphertext& ct,
                                             OpCounter* counter = nullptr) {
  if (ct.c1.size() != P.ell || ct.c2.size() != static_cast<std::size_t>(P.ell) * P.ell)
    throw DomainError("ciphertext shape does not match the parameters");
  const std::uint64_t scale = P.delta_scale();
  const std::uint64_t mask = (std::uint64_t{1} << P.beta) - 1;
  std::vector<std::uint8_t> bits;
  for (std::uint64_t ph : lwe_phases(P, sk, ct, counter)) {
    std::uint64_t mu = static_cast<std::uint64_t>((2 * static_cast<u128>(ph) + scale) / (2 * static_cast<u128>(scale))) & mask;
    for (unsigned k = 0; k < P.beta; ++k) bits.push_back(static_cast<std::uint8_t>(mu >> k & 1));
  }
  return bits;
}

template <class Rng>
LweCiphertext lwe_encrypt_bit(const LweParams& P, const LwePublicKey& pk, int mu, Rng& rng,
                              LweEncryptionNoise* noise = nullptr) {
  if (P.beta != 1 || P.ell != 1) throw DomainError("single-bit encryption needs beta = ell = 1");
  return lwe_encrypt(P, pk, {static_cast<std::uint8_t>(mu & 1)}, rng, noise);
}

inline int lwe_decrypt_bit(const LweParams& P, const LweSecretKey& sk, const LweCiphertext& ct) {
  return lwe_decrypt(P, sk, ct)[0];
}

// Ring over F_q with points t of order d, R and b; b != R.
inline std::shared_ptr<const RingCtx> make_lwe_ring(std::uint64_t q, unsigned delta, std::uint64_t seed) {
  auto K = std::make_shared<const PrimeField>(q);
  TorsionCurve tc = find_torsion_curve(K, delta, seed);
  Point<PrimeField> b = tc.R;
  std::mt19937_64 rng(seed + 1);
  while (b == tc.R || tc.E.mul(static_cast<i128>(tc.d()), b).inf) b = tc.E.random_point(rng);
  return std::make_shared<const RingCtx>(make_ring(tc.E, tc.t, tc.R, b));
}

// "toy": q = 32749, d = 256, binomial(2). "guideline": d = 64, q = 4099,
// Gaussian with sigma = sqrt(d)/4. Both experimental.
inline LweParams lwe_preset(const std::string& name, std::uint64_t seed = 1, unsigned beta = 1, unsigned ell = 1) {
  LweParams P;
  P.name = name;
  P.beta = beta;
  P.ell = ell;
  if (name == "toy") {
    P.ring = make_lwe_ring(32749, 8, seed);
    P.chi = ErrorSampler::binomial(2);
  } else if (name == "guideline") {
    P.ring = make_lwe_ring(4099, 6, seed);
    P.chi = ErrorSampler::gaussian(2.0);
  } else {
    throw DomainError("unknown LWE preset: " + name);
  }
  if (beta < 1 || (std::uint64_t{1} << beta) >= P.q()) throw DomainError("beta out of range");
  return P;
}

}  // namespace ellbfly
