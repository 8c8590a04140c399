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

#include <boost/crc.hpp>

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/level.hpp"
#include "ellbfly/tower.hpp"

// Text serialization of prime field towers. Layout:
//
//   ellbfly-tower 1
//   p <p>
//   delta <delta>
//   curve <k> <a1> <a2> <a3> <a4> <a6>        k = 0..delta
//   digest <name>.<k> <crc64>                 one per constant vector
//   point <k> <name> <x> <y> | O
//   vec <k> <name> <n> <v_0> ... <v_{n-1}>
//   scalars <k> <xT> <lstar> <pstar> <nmlast> <l0lstar> <has_eval>
//   base <xb> [<bx> <by>]
//   end <crc64 of all preceding lines>

namespace ellbfly {

using Crc64 = boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, 0, 0, false, false>;

inline std::uint64_t crc64(const std::string& s) {
  Crc64 c;
  c.process_bytes(s.data(), s.size());
  return c.checksum();
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

namespace detail {

inline const std::vector<std::pair<const char*, std::vector<std::uint64_t> LevelCtx<PrimeField>::*>>& level_vectors() {
  using L = LevelCtx<PrimeField>;
  static const std::vector<std::pair<const char*, std::vector<std::uint64_t> L::*>> v = {
      {"avec", &L::avec}, {"avec2", &L::avec2}, {"a1vec", &L::a1vec}, {"bvec", &L::bvec}, {"cvec", &L::cvec},
      {"vv", &L::vv},     {"mvec", &L::mvec},   {"nvec", &L::nvec},   {"xv", &L::xv},     {"tv", &L::tv},
      {"tinv", &L::tinv}, {"dvec", &L::dvec},   {"evec", &L::evec},   {"fvec", &L::fvec}, {"ivec", &L::ivec},
      {"hvec", &L::hvec}, {"lvec", &L::lvec},   {"pvec", &L::pvec},   {"xUl", &L::xUl}};
  return v;
}

inline std::string vec_line(std::size_t k, const std::string& name, const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << "vec " << k << ' ' << name << ' ' << v.size();
  for (auto x : v) os << ' ' << x;
  return os.str();
}

inline std::string point_line(std::size_t k, const std::string& name, const Point<PrimeField>& P) {
  std::ostringstream os;
  os << "point " << k << ' ' << name << ' ';
  if (P.inf)
    os << 'O';
  else
    os << P.x.v() << ' ' << P.y.v();
  return os.str();
}

}  // namespace detail

// Cache key over (p, curve, delta, t, b).
inline std::string tower_cache_key(const Curve<PrimeField>& E, const Point<PrimeField>& t,
                                   const Point<PrimeField>& b) {
  std::ostringstream os;
  os << E.field().p() << '|' << E.str() << '|' << two_power_order(E, t) << '|' << t.str() << '|' << b.str();
  return hex64(crc64(os.str()));
}

inline void write_tower(std::ostream& out, const Tower<PrimeField>& tw) {
  std::vector<std::string> head, body;
  head.push_back("ellbfly-tower 1");
  head.push_back("p " + std::to_string(tw.field().p()));
  head.push_back("delta " + std::to_string(tw.delta()));
  for (std::size_t k = 0; k < tw.curves.size(); ++k) {
    std::ostringstream os;
    os << "curve " << k;
    for (auto c : tw.curves[k].coeffs()) os << ' ' << c;
    head.push_back(os.str());
  }
  for (std::size_t k = 0; k < tw.levels.size(); ++k) {
    const auto& L = tw.levels[k];
    for (const auto& [name, mem] : detail::level_vectors()) {
      std::string line = detail::vec_line(k, name, L.*mem);
      head.push_back("digest " + std::string(name) + "." + std::to_string(k) + " " + hex64(crc64(line)));
      body.push_back(line);
    }
    body.push_back(detail::point_line(k, "t", L.t));
    body.push_back(detail::point_line(k, "T", L.T));
    body.push_back(detail::point_line(k, "t2", L.t2));
    body.push_back(detail::point_line(k, "U2", L.U2));
    if (L.b) body.push_back(detail::point_line(k, "b", *L.b));
    if (L.b2) body.push_back(detail::point_line(k, "b2", *L.b2));
    std::ostringstream os;
    os << "scalars " << k << ' ' << L.xT << ' ' << L.lstar << ' ' << L.pstar << ' ' << L.nmlast << ' ' << L.l0lstar
       << ' ' << (L.has_eval ? 1 : 0);
    body.push_back(os.str());
  }
  {
    std::ostringstream os;
    os << "base " << tw.base_xb;
    if (tw.base_b && !tw.base_b->inf) os << ' ' << tw.base_b->x.v() << ' ' << tw.base_b->y.v();
    body.push_back(os.str());
  }
  std::string all;
  for (const auto& s : head) all += s + "\n";
  for (const auto& s : body) all += s + "\n";
  out << all << "end " << hex64(crc64(all)) << "\n";
}

inline Tower<PrimeField> read_tower(std::istream& in) {
  std::vector<std::string> lines;
  std::string line, all, end_digest;
  while (std::getline(in, line)) {
    if (line.rfind("end ", 0) == 0) {
      end_digest = line.substr(4);
      break;
    }
    lines.push_back(line);
    all += line + "\n";
  }
  if (end_digest.empty()) throw DomainError("tower file is truncated");
  if (end_digest != hex64(crc64(all))) throw DomainError("tower file digest mismatch");
  if (lines.empty() || lines[0] != "ellbfly-tower 1") throw DomainError("not a tower file (version 1)");

  std::uint64_t p = 0;
  std::size_t delta = 0;
  std::map<std::size_t, std::array<std::uint64_t, 5>> curves;
  std::map<std::string, std::string> digests;
  std::map<std::pair<std::size_t, std::string>, std::vector<std::uint64_t>> vecs;
  std::map<std::pair<std::size_t, std::string>, std::vector<std::uint64_t>> pts;
  std::map<std::size_t, std::vector<std::uint64_t>> scalars;
  std::vector<std::uint64_t> base;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream is(lines[i]);
    std::string tag;
    is >> tag;
    if (tag == "p") {
      is >> p;
    } else if (tag == "delta") {
      is >> delta;
    } else if (tag == "curve") {
      std::size_t k;
      std::array<std::uint64_t, 5> a;
      is >> k >> a[0] >> a[1] >> a[2] >> a[3] >> a[4];
      curves[k] = a;
    } else if (tag == "digest") {
      std::string name, hex;
      is >> name >> hex;
      digests[name] = hex;
    } else if (tag == "vec") {
      std::size_t k, n;
      std::string name;
      is >> k >> name >> n;
      std::vector<std::uint64_t> v(n);
      for (auto& x : v) is >> x;
      auto it = digests.find(name + "." + std::to_string(k));
      if (it == digests.end() || it->second != hex64(crc64(lines[i])))
        throw DomainError("tower file: digest mismatch for " + name + "." + std::to_string(k));
      vecs[{k, name}] = v;
    } else if (tag == "point") {
      std::size_t k;
      std::string name, x;
      is >> k >> name >> x;
      std::vector<std::uint64_t> v;
      if (x != "O") {
        std::uint64_t y;
        is >> y;
        v = {std::stoull(x), y};
      }
      pts[{k, name}] = v;
    } else if (tag == "scalars") {
      std::size_t k;
      std::vector<std::uint64_t> v(6);
      is >> k;
      for (auto& x : v) is >> x;
      scalars[k] = v;
    } else if (tag == "base") {
      std::uint64_t x;
      while (is >> x) base.push_back(x);
      if (!is.eof()) throw DomainError("tower file: malformed base record");
      is.clear();
    } else {
      throw DomainError("tower file: unknown record '" + tag + "'");
    }
    if (is.fail()) throw DomainError("tower file: malformed line " + std::to_string(i + 1));
  }
  if (curves.size() != delta + 1 || scalars.size() != delta || base.empty())
    throw DomainError("tower file is incomplete");

  auto K = std::make_shared<const PrimeField>(p);
  Tower<PrimeField> tw(K);
  for (std::size_t k = 0; k <= delta; ++k) tw.curves.emplace_back(K, curves.at(k));
  auto point = [&](std::size_t k, const std::string& name) -> std::optional<Point<PrimeField>> {
    auto it = pts.find({k, name});
    if (it == pts.end()) return std::nullopt;
    if (it->second.empty()) return Point<PrimeField>::O();
    return Point<PrimeField>::affine(El<PrimeField>(*K, it->second[0]), El<PrimeField>(*K, it->second[1]));
  };
  for (std::size_t k = 0; k < delta; ++k) {
    auto T = point(k, "T");
    if (!T) throw DomainError("tower file: level " + std::to_string(k) + " lacks T");
    LevelCtx<PrimeField> L(velu_quotient(tw.curves[k], *T));
    if (!(L.E2() == tw.curves[k + 1])) throw DomainError("tower file: curves do not form a 2-isogeny chain");
    L.d = std::size_t{1} << (delta - k);
    L.dp = L.d / 2;
    L.T = *T;
    L.t = point(k, "t").value();
    L.t2 = point(k, "t2").value();
    L.U2 = point(k, "U2").value();
    L.b = point(k, "b");
    L.b2 = point(k, "b2");
    for (const auto& [name, mem] : detail::level_vectors()) {
      auto it = vecs.find({k, name});
      if (it == vecs.end()) throw DomainError("tower file: missing vector " + std::string(name));
      L.*mem = it->second;
    }
    const auto& s = scalars.at(k);
    L.xT = s[0];
    L.lstar = s[1];
    L.pstar = s[2];
    L.nmlast = s[3];
    L.l0lstar = s[4];
    L.has_eval = s[5] != 0;
    L.bd = make_bidiag(*K, L.bvec, L.cvec);
    tw.levels.push_back(std::move(L));
  }
  tw.base_xb = base[0];
  if (base.size() == 3)
    tw.base_b = Point<PrimeField>::affine(El<PrimeField>(*K, base[1]), El<PrimeField>(*K, base[2]));
  return tw;
}

inline void save_tower(const std::string& path, const Tower<PrimeField>& tw) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  write_tower(out, tw);
}

inline Tower<PrimeField> load_tower(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  return read_tower(in);
}

}  // namespace ellbfly
