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
#include <charconv>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ellbfly/error.hpp"

namespace ellbfly {

using u128 = unsigned __int128;
using i128 = __int128;

inline std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, u128 e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t m = n - 1;
  int s = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = detail::powmod(a % n, m, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// The prime field F_p, p an odd prime below 2^64. Residues are plain uint64_t.
class PrimeField {
 public:
  using rep = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) {
      throw DomainError("modulus is not an odd prime: " + std::to_string(p));
    }
  }

  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::size_t degree() const { return 1; }
  u128 order() const { return p_; }

  rep zero() const { return 0; }
  rep one() const { return 1; }
  rep from_u64(std::uint64_t v) const { return v % p_; }
  rep from_int(std::int64_t v) const {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
    std::uint64_t m = (~static_cast<std::uint64_t>(v) + 1) % p_;
    return m == 0 ? 0 : p_ - m;
  }

  rep add(rep a, rep b) const {
    rep s = a + b;
    if (s < a || s >= p_) s -= p_;
    return s;
  }
  rep sub(rep a, rep b) const { return a >= b ? a - b : a + (p_ - b); }
  rep neg(rep a) const { return a == 0 ? 0 : p_ - a; }
  rep mul(rep a, rep b) const { return static_cast<rep>(static_cast<u128>(a) * b % p_); }
  rep half(rep a) const { return (a & 1) ? (a >> 1) + (p_ >> 1) + 1 : a >> 1; }

  rep inv(rep a) const {
    if (a == 0) throw ZeroDivisionError();
    i128 t = 0, nt = 1;
    std::uint64_t r = p_, nr = a;
    while (nr) {
      std::uint64_t q = r / nr;
      i128 tmp = t - static_cast<i128>(q) * nt;
      t = nt;
      nt = tmp;
      std::uint64_t rr = r - q * nr;
      r = nr;
      nr = rr;
    }
    if (t < 0) t += p_;
    return static_cast<rep>(t);
  }
  rep div(rep a, rep b) const { return mul(a, inv(b)); }
  rep pow(rep a, u128 e) const { return detail::powmod(a, e, p_); }

  bool eq(rep a, rep b) const { return a == b; }
  bool is_zero(rep a) const { return a == 0; }

  // 1, -1 or 0.
  int legendre(rep a) const {
    if (a == 0) return 0;
    return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
  }

  std::optional<rep> sqrt(rep a) const {
    if (a == 0) return rep{0};
    if (legendre(a) != 1) return std::nullopt;
    std::uint64_t q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    rep z = 2;
    while (legendre(z) != -1) ++z;
    int m = s;
    rep c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      int i = 0;
      rep t2 = t;
      while (t2 != 1) {
        t2 = mul(t2, t2);
        ++i;
      }
      rep b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

  // Representative in (-p/2, p/2].
  std::int64_t centered(rep a) const {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }

  template <class Rng>
  rep random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
  }

  std::string to_string(rep a) const { return std::to_string(a); }
  rep parse(const std::string& s) const {
    const bool minus = !s.empty() && s[0] == '-';
    const char* first = s.data() + (minus ? 1 : 0);
    const char* last = s.data() + s.size();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw DomainError("not an integer: " + s);
    v %= p_;
    return minus ? neg(v) : v;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

// Dense polynomials over F_p, low degree first, no trailing zeros.
namespace poly {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly sub(const PrimeField& K, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly mul(const PrimeField& K, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder).
inline std::pair<Poly, Poly> divmod(const PrimeField& K, Poly a, const Poly& b) {
  if (b.empty()) throw ZeroDivisionError();
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = K.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    std::uint64_t c = K.mul(a[i], lead_inv);
    q[i - b.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t idx = i - b.size() + 1 + j;
      a[idx] = K.sub(a[idx], K.mul(c, b[j]));
    }
  }
  trim(q);
  trim(a);
  return {q, a};
}

inline Poly mod(const PrimeField& K, const Poly& a, const Poly& m) { return divmod(K, a, m).second; }

inline Poly monic(const PrimeField& K, Poly a) {
  trim(a);
  if (a.empty()) return a;
  std::uint64_t li = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, li);
  return a;
}

inline Poly gcd(const PrimeField& K, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(K, a);
}

inline Poly powmod(const PrimeField& K, Poly base, u128 e, const Poly& m) {
  Poly r{1};
  base = mod(K, base, m);
  while (e) {
    if (e & 1) r = mod(K, mul(K, r, base), m);
    base = mod(K, mul(K, base, base), m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m via the extended Euclidean algorithm.
inline Poly inv_mod(const PrimeField& K, const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = mod(K, a, m);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(K, r0, r1);
    Poly s = sub(K, s0, mul(K, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw ZeroDivisionError();
  std::uint64_t c = K.inv(r0[0]);
  for (auto& x : s0) x = K.mul(x, c);
  return s0;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's irreducibility test for a monic polynomial.
inline bool is_irreducible(const PrimeField& K, const Poly& m) {
  int k = deg(m);
  if (k < 1 || m.back() != 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frob(k + 1);
  frob[0] = x;
  for (int i = 1; i <= k; ++i) frob[i] = powmod(K, frob[i - 1], K.p(), m);
  if (sub(K, frob[k], x).size() != 0) return false;
  for (std::size_t r : prime_divisors(static_cast<std::size_t>(k))) {
    Poly g = gcd(K, sub(K, frob[k / r], x), m);
    if (g.size() != 1) return false;
  }
  return true;
}

// Monic irreducible polynomial of degree k. seed 0 enumerates in lexicographic
// order of the coefficient vector (c_0 varying fastest); other seeds sample.
inline Poly find_irreducible(const PrimeField& K, std::size_t k, std::uint64_t seed = 0) {
  if (k < 1) throw DomainError("degree must be positive");
  Poly m(k + 1, 0);
  m[k] = 1;
  if (seed == 0) {
    std::vector<std::uint64_t> digits(k, 0);
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) m[i] = digits[i];
      if (is_irreducible(K, m)) return m;
      std::size_t i = 0;
      while (i < k && ++digits[i] == K.p()) digits[i++] = 0;
      if (i == k) throw SearchError("no irreducible polynomial found");
    }
  }
  std::mt19937_64 rng(seed);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) m[i] = K.random(rng);
    if (is_irreducible(K, m)) return m;
  }
}

}  // namespace poly

// F_p[X]/(m(X)) with m monic irreducible of degree k. Elements are coefficient
// vectors of length exactly k.
class ExtField {
 public:
  using rep = std::vector<std::uint64_t>;

  ExtField(PrimeField base, poly::Poly modulus, bool verify = true)
      : K_(base), m_(std::move(modulus)) {
    poly::trim(m_);
    if (m_.size() < 2 || m_.back() != 1) throw DomainError("extension modulus must be monic of degree >= 1");
    k_ = m_.size() - 1;
    if (verify && !poly::is_irreducible(K_, m_)) throw DomainError("extension modulus is reducible");
  }

  static ExtField with_degree(PrimeField base, std::size_t k, std::uint64_t seed = 0) {
    poly::Poly m = poly::find_irreducible(base, k, seed);
    return ExtField(base, std::move(m), false);
  }

  const PrimeField& base() const { return K_; }
  std::size_t degree() const { return k_; }
  std::uint64_t characteristic() const { return K_.p(); }
  const poly::Poly& modulus() const { return m_; }

  // q^k; throws when it does not fit in 127 bits.
  u128 order() const {
    u128 r = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (r > (static_cast<u128>(1) << 126) / K_.p()) throw DomainError("extension field order exceeds 2^127");
      r *= K_.p();
    }
    return r;
  }

  rep zero() const { return rep(k_, 0); }
  rep one() const { return embed(1); }
  rep embed(std::uint64_t c) const {
    rep r(k_, 0);
    r[0] = c % K_.p();
    return r;
  }
  rep from_u64(std::uint64_t v) const { return embed(K_.from_u64(v)); }
  rep from_int(std::int64_t v) const { return embed(K_.from_int(v)); }
  rep gen() const {
    rep r(k_, 0);
    if (k_ == 1) {
      r[0] = K_.neg(m_[0]);
    } else {
      r[1] = 1;
    }
    return r;
  }
  rep from_poly(const poly::Poly& a) const {
    poly::Poly r = poly::mod(K_, a, m_);
    r.resize(k_, 0);
    return r;
  }

  rep add(const rep& a, const rep& b) const {
    rep r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = K_.add(a[i], b[i]);
    return r;
  }
  rep sub(const rep& a, const rep& b) const {
    rep r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = K_.sub(a[i], b[i]);
    return r;
  }
  rep neg(const rep& a) const {
    rep r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = K_.neg(a[i]);
    return r;
  }
  rep half(const rep& a) const {
    rep r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = K_.half(a[i]);
    return r;
  }
  rep scale(const rep& a, std::uint64_t c) const {
    rep r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = K_.mul(a[i], c);
    return r;
  }

  rep mul(const rep& a, const rep& b) const {
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = K_.add(prod[i + j], K_.mul(a[i], b[j]));
    }
    for (std::size_t i = 2 * k_ - 1; i-- > k_;) {
      std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        std::size_t idx = i - k_ + j;
        prod[idx] = K_.sub(prod[idx], K_.mul(c, m_[j]));
      }
    }
    prod.resize(k_);
    return prod;
  }

  rep inv(const rep& a) const {
    if (is_zero(a)) throw ZeroDivisionError();
    poly::Poly pa(a.begin(), a.end());
    poly::trim(pa);
    poly::Poly r = poly::inv_mod(K_, pa, m_);
    r.resize(k_, 0);
    return r;
  }
  rep div(const rep& a, const rep& b) const { return mul(a, inv(b)); }

  rep pow(rep a, u128 e) const {
    rep r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  rep frobenius(const rep& a) const { return pow(a, K_.p()); }

  bool eq(const rep& a, const rep& b) const { return a == b; }
  bool is_zero(const rep& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
  }
  bool in_base(const rep& a) const {
    return std::all_of(a.begin() + 1, a.end(), [](std::uint64_t c) { return c == 0; });
  }
  std::uint64_t to_base(const rep& a) const {
    if (!in_base(a)) throw DescentError("element " + to_string(a) + " is not in the base field");
    return a[0];
  }

  std::optional<rep> sqrt(const rep& a) const {
    if (is_zero(a)) return zero();
    const u128 q1 = order() - 1;
    if (pow(a, q1 / 2) != one()) return std::nullopt;
    u128 q = q1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::mt19937_64 rng(0x5eed);
    rep z;
    do {
      z = random(rng);
    } while (is_zero(z) || pow(z, q1 / 2) == one());
    int m = s;
    rep c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    const rep o = one();
    while (t != o) {
      int i = 0;
      rep t2 = t;
      while (t2 != o) {
        t2 = mul(t2, t2);
        ++i;
      }
      rep b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

  template <class Rng>
  rep random(Rng& rng) const {
    rep r(k_);
    for (auto& c : r) c = K_.random(rng);
    return r;
  }

  std::string to_string(const rep& a) const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < k_; ++i) os << (i ? "," : "") << a[i];
    os << ']';
    return os.str();
  }

  bool operator==(const ExtField& o) const { return K_ == o.K_ && m_ == o.m_; }

 private:
  PrimeField K_;
  poly::Poly m_;
  std::size_t k_ = 1;
};

// Field element bound to its context, for formula-heavy code (curves,
// precomputation, oracles). The context must outlive the element.
template <class F>
class El {
 public:
  using rep = typename F::rep;

  El() = default;
  El(const F& f, rep v) : f_(&f), v_(std::move(v)) {}
  static El of(const F& f, std::int64_t v) { return El(f, f.from_int(v)); }

  const F& field() const { return *f_; }
  const rep& v() const { return v_; }
  bool bound() const { return f_ != nullptr; }

  El operator+(const El& o) const { return El(*f_, f_->add(v_, o.v_)); }
  El operator-(const El& o) const { return El(*f_, f_->sub(v_, o.v_)); }
  El operator*(const El& o) const { return El(*f_, f_->mul(v_, o.v_)); }
  El operator/(const El& o) const { return El(*f_, f_->div(v_, o.v_)); }
  El operator-() const { return El(*f_, f_->neg(v_)); }
  El operator*(std::int64_t c) const { return El(*f_, f_->mul(v_, f_->from_int(c))); }
  El& operator+=(const El& o) { return *this = *this + o; }
  El& operator-=(const El& o) { return *this = *this - o; }
  El& operator*=(const El& o) { return *this = *this * o; }

  El inv() const { return El(*f_, f_->inv(v_)); }
  El half() const { return El(*f_, f_->half(v_)); }
  El pow(u128 e) const { return El(*f_, f_->pow(v_, e)); }
  El zero() const { return El(*f_, f_->zero()); }
  El one() const { return El(*f_, f_->one()); }
  bool is_zero() const { return f_->is_zero(v_); }
  bool operator==(const El& o) const { return f_->eq(v_, o.v_); }
  bool operator!=(const El& o) const { return !(*this == o); }

  std::string str() const { return f_->to_string(v_); }

 private:
  const F* f_ = nullptr;
  rep v_{};
};

template <class F>
El<F> el(const F& f, std::int64_t v) {
  return El<F>::of(f, v);
}

// Base field elements viewed in an extension.
inline El<ExtField> embed(const ExtField& L, const El<PrimeField>& a) { return El<ExtField>(L, L.embed(a.v())); }

// Lexicographic order on representatives, used for deterministic choices.
inline bool rep_less(const PrimeField&, std::uint64_t a, std::uint64_t b) { return a < b; }
inline bool rep_less(const ExtField&, const ExtField::rep& a, const ExtField::rep& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace ellbfly
