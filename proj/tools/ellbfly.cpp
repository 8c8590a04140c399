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

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 math or config error,
// 3 selftest failure.

#include <CLI11.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ellbfly.hpp"

namespace fs = std::filesystem;
using namespace ellbfly;

namespace {

using Vec = std::vector<std::uint64_t>;
using Pt = Point<PrimeField>;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitSelftest = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw settings: config file first, flags override.
struct RunConfig {
  std::string p;
  std::string curve = "search";
  std::string delta;
  std::string t = "search";
  std::string b = "search";
  std::string R = "search";
  std::string seed = "1";
  std::string long_form = "0";
  std::string cache_dir;
  std::string tower;
  bool binary = false;
};

void load_config_file(const std::string& path, RunConfig& c) {
  boost::property_tree::ptree pt;
  try {
    boost::property_tree::read_ini(path, pt);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  const std::vector<std::pair<const char*, std::string*>> keys = {
      {"p", &c.p},         {"curve", &c.curve},         {"delta", &c.delta},
      {"t", &c.t},         {"b", &c.b},                 {"R", &c.R},
      {"seed", &c.seed},   {"long_form", &c.long_form}, {"cache_dir", &c.cache_dir},
      {"tower", &c.tower}};
  for (const auto& [k, _] : pt) {
    bool known = false;
    for (const auto& [name, slot] : keys) known = known || k == name;
    if (!known) throw ConfigError("config: unknown key '" + k + "'");
  }
  for (const auto& [name, slot] : keys)
    if (auto v = pt.get_optional<std::string>(name)) *slot = *v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError(what + ": not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

// Validated configuration with all searches resolved.
struct Resolved {
  std::shared_ptr<const PrimeField> K;
  std::optional<Curve<PrimeField>> E;
  Pt t, b, R;
  std::size_t d = 0;
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::string tower;
  bool binary = false;
};

Pt parse_point(const Curve<PrimeField>& E, const std::string& s, const std::string& what) {
  auto parts = split_commas(s);
  if (parts.size() != 2) throw ConfigError(what + ": expected x,y");
  const auto& K = E.field();
  Pt P = Pt::affine(El<PrimeField>(K, K.parse(parts[0])), El<PrimeField>(K, K.parse(parts[1])));
  if (!E.on(P)) throw ConfigError(what + " is not on the curve");
  return P;
}

std::string point_str(const Pt& P) { return P.inf ? "O" : P.x.str() + "," + P.y.str(); }

Resolved resolve(const RunConfig& c) {
  Resolved r;
  r.seed = parse_u64(c.seed, "seed");
  r.cache_dir = c.cache_dir;
  r.tower = c.tower;
  r.binary = c.binary;
  if (c.p.empty()) throw ConfigError("p is required (flag --p or config key p)");
  r.K = std::make_shared<const PrimeField>(parse_u64(c.p, "p"));
  std::optional<unsigned> delta;
  if (!c.delta.empty()) {
    delta = static_cast<unsigned>(parse_u64(c.delta, "delta"));
    if (*delta < 1 || *delta > 40) throw ConfigError("delta must be in [1, 40]");
  }
  std::optional<Pt> R_search;
  if (c.curve == "search") {
    if (!delta) throw ConfigError("delta is required when the curve is searched");
    if (c.t != "search") throw ConfigError("t cannot be given for a searched curve");
    TorsionCurve tc = find_torsion_curve(r.K, *delta, r.seed);
    if (parse_u64(c.long_form, "long_form")) tc = to_long_form(tc, r.seed);
    r.E = tc.E;
    r.t = tc.t;
    R_search = tc.R;
  } else {
    auto parts = split_commas(c.curve);
    if (parts.size() != 5) throw ConfigError("curve: expected a1,a2,a3,a4,a6 or 'search'");
    std::array<std::uint64_t, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = r.K->parse(parts[i]);
    r.E.emplace(r.K, a);
    if (c.t == "search") throw ConfigError("t is required for an explicit curve");
    r.t = parse_point(*r.E, c.t, "t");
  }
  const std::size_t ord = two_power_order(*r.E, r.t);
  r.d = delta ? std::size_t{1} << *delta : ord;
  if (r.d > ord || r.d < 2) throw ConfigError("t has order " + std::to_string(ord) + ", below 2^delta");
  r.t = r.E->mul(static_cast<i128>(ord / r.d), r.t);
  if (c.R != "search") {
    r.R = parse_point(*r.E, c.R, "R");
  } else if (R_search) {
    r.R = *R_search;
  } else {
    r.R = find_point_with_nonzero_multiple(*r.E, r.d, r.seed + 1);
  }
  if (c.b != "search") {
    r.b = parse_point(*r.E, c.b, "b");
  } else {
    std::mt19937_64 rng(r.seed + 2);
    do r.b = r.E->random_point(rng);
    while (r.b == r.R || r.E->mul(static_cast<i128>(r.d), r.b).inf);
  }
  if (r.E->mul(static_cast<i128>(r.d), r.R).inf) throw ConfigError("R: d R = O");
  if (r.E->mul(static_cast<i128>(r.d), r.b).inf) throw ConfigError("b: d b = O");
  return r;
}

Tower<PrimeField> get_tower(const Resolved& r, const Pt& b, bool verbose = false) {
  if (!r.tower.empty()) {
    Tower<PrimeField> tw = load_tower(r.tower);
    if (tw.field().p() != r.K->p() || tw.d() != r.d || !(tw.curves[0] == *r.E))
      throw ConfigError("tower file " + r.tower + " does not match the configuration");
    return tw;
  }
  if (r.cache_dir.empty()) return build_tower(*r.E, r.t, b);
  fs::create_directories(r.cache_dir);
  const fs::path path = fs::path(r.cache_dir) / (tower_cache_key(*r.E, r.t, b) + ".tower");
  if (fs::exists(path)) {
    if (verbose) std::cerr << "cache hit " << path.string() << "\n";
    return load_tower(path.string());
  }
  Tower<PrimeField> tw = build_tower(*r.E, r.t, b);
  save_tower(path.string(), tw);
  if (verbose) std::cerr << "cache store " << path.string() << "\n";
  return tw;
}

std::size_t elem_bytes(const PrimeField& K) {
  std::size_t bits = 0;
  for (std::uint64_t v = K.p() - 1; v; v >>= 1) ++bits;
  return std::max<std::size_t>(1, (bits + 7) / 8);
}

Vec read_vec(std::istream& in, const PrimeField& K, std::size_t n, bool binary) {
  Vec v;
  if (binary) {
    const std::size_t w = elem_bytes(K);
    std::vector<unsigned char> buf(w);
    while (v.size() < n && in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(w))) {
      std::uint64_t x = 0;
      for (std::size_t i = w; i-- > 0;) x = x << 8 | buf[i];
      if (x >= K.p()) throw ConfigError("binary input element out of range");
      v.push_back(x);
    }
  } else {
    std::string tok;
    while (v.size() < n && in >> tok) v.push_back(K.parse(tok));
  }
  if (v.size() != n) throw ConfigError("expected " + std::to_string(n) + " field elements on input, got " + std::to_string(v.size()));
  return v;
}

void write_vec(std::ostream& out, const PrimeField& K, const Vec& v, bool binary) {
  if (binary) {
    const std::size_t w = elem_bytes(K);
    for (auto x : v)
      for (std::size_t i = 0; i < w; ++i) out.put(static_cast<char>(x >> (8 * i) & 0xff));
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << "\n";
}

// Fixed-width lowercase hex, one vector per line.
std::string to_hex(const Vec& v, std::uint64_t q) {
  std::size_t w = 1;
  while ((q - 1) >> (4 * w)) ++w;
  std::ostringstream os;
  for (auto x : v) os << std::hex << std::setw(static_cast<int>(w)) << std::setfill('0') << x;
  return os.str();
}

Vec from_hex(const std::string& s, std::uint64_t q, std::size_t n) {
  std::size_t w = 1;
  while ((q - 1) >> (4 * w)) ++w;
  if (s.size() != w * n) throw ConfigError("hex vector has the wrong length");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [ptr, ec] = std::from_chars(s.data() + i * w, s.data() + (i + 1) * w, v[i], 16);
    if (ec != std::errc() || ptr != s.data() + (i + 1) * w || v[i] >= q) throw ConfigError("bad hex vector");
  }
  return v;
}

// LWE key files: "key value" lines.
struct LweFile {
  std::map<std::string, std::vector<std::string>> kv;

  static LweFile read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    LweFile f;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string k, v;
      if (!(ls >> k)) continue;
      ls >> v;
      f.kv[k].push_back(v);
    }
    return f;
  }
  const std::string& one(const std::string& k) const {
    auto it = kv.find(k);
    if (it == kv.end() || it->second.size() != 1) throw ConfigError("key file: missing '" + k + "'");
    return it->second[0];
  }
  const std::vector<std::string>& many(const std::string& k) const {
    static const std::vector<std::string> none;
    auto it = kv.find(k);
    return it == kv.end() ? none : it->second;
  }
};

LweParams lwe_params_from(const LweFile& f) {
  return lwe_preset(f.one("preset"), parse_u64(f.one("seed"), "seed"),
                    static_cast<unsigned>(parse_u64(f.one("beta"), "beta")),
                    static_cast<unsigned>(parse_u64(f.one("ell"), "ell")));
}

// Oracle cross-checks and roundtrips; returns the number of failures.
int run_selftest(std::uint64_t seed, std::ostream& log) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    log << (ok ? "ok   " : "FAIL ") << what << "\n";
    failures += !ok;
  };
  std::mt19937_64 rng(seed);
  auto K = std::make_shared<const PrimeField>(10007);
  TorsionCurve small = find_torsion_curve(K, 6, seed);
  TorsionCurve lng = to_long_form(find_torsion_curve(K, 6, seed + 1), seed);
  for (const TorsionCurve* tc : {&small, &lng}) {
    for (std::size_t d = 2; d <= 64; d *= 2) {
      Pt t = tc->E.mul(static_cast<i128>(64 / d), tc->t);
      Pt b;
      do b = tc->E.random_point(rng);
      while (tc->E.mul(static_cast<i128>(d), b).inf);
      auto tw = build_tower(tc->E, t, b);
      BasisCtx<PrimeField> B(tc->E, t, d);
      DenseOracle<PrimeField> oracle(B, b);
      bool ok = true;
      for (int i = 0; i < 10; ++i) {
        Vec f(d);
        for (auto& x : f) x = K->random(rng);
        ok = ok && butterfly_evaluate(tw, f) == oracle.evaluate(Coords::U, f);
        ok = ok && butterfly_interpolate(tw, f) == oracle.interpolate(f);
        ok = ok && butterfly_reduce(tw, f) == oracle.reduce(f);
      }
      report(ok, "oracle p=10007 " + std::string(tc == &small ? "short" : "long") + " d=" + std::to_string(d));
    }
  }
  const std::uint64_t p = cm_prime(12, 62, seed);
  auto KL = std::make_shared<const PrimeField>(p);
  TorsionCurve big = find_torsion_curve(KL, 12, seed);
  for (std::size_t d = 2; d <= 4096; d *= 2) {
    auto tw = build_tower(big.E, big.E.mul(static_cast<i128>(4096 / d), big.t), big.R);
    Vec f(d);
    for (auto& x : f) x = KL->random(rng);
    bool ok = butterfly_interpolate(tw, butterfly_evaluate(tw, f)) == f &&
              butterfly_evaluate(tw, butterfly_interpolate(tw, f)) == f;
    report(ok, "roundtrip p=" + std::to_string(p) + " d=" + std::to_string(d));
  }
  {
    auto tw = build_tower(small.E, small.E.mul(8, small.t), small.R);
    std::stringstream ss;
    write_tower(ss, tw);
    std::string s = ss.str();
    auto pos = s.find("vec 0 ");
    s[s.find(' ', s.find(' ', pos + 6) + 1) + 1] ^= 1;
    std::stringstream bad(s);
    bool detected = false;
    try {
      read_tower(bad);
    } catch (const DomainError&) {
      detected = true;
    }
    report(detected, "corrupted tower file is rejected");
  }
  return failures;
}

struct BenchRow {
  std::size_t d;
  std::string algo;
  double seconds;
  std::uint64_t ops;
};

template <class Fn>
BenchRow bench_one(std::size_t d, const std::string& algo, int reps, Fn&& fn) {
  OpCounter c;
  fn(&c);
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn(nullptr);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
  return BenchRow{d, algo, s, c.total()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic butterflies over prime fields"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "INI file with run settings")->check(CLI::ExistingFile);

  // Flags shared by the curve-based subcommands; applied after the config file.
  struct Overrides {
    std::string p, curve, delta, t, b, R, seed, cache_dir, tower;
    bool long_form = false;
    bool binary = false;
  } ov;
  auto add_curve_opts = [&](CLI::App* sc) {
    sc->add_option("--p", ov.p, "prime modulus");
    sc->add_option("--curve", ov.curve, "a1,a2,a3,a4,a6 or 'search'");
    sc->add_option("--delta", ov.delta, "log2 of the butterfly length d");
    sc->add_option("--t", ov.t, "point x,y of order a multiple of d");
    sc->add_option("--b", ov.b, "coset point x,y");
    sc->add_option("--R", ov.R, "auxiliary rational coset point x,y");
    sc->add_option("--seed", ov.seed, "seed for every search");
    sc->add_flag("--long-form", ov.long_form, "random long Weierstrass model of the searched curve");
    sc->add_option("--cache-dir", ov.cache_dir, "tower cache directory");
    sc->add_option("--tower", ov.tower, "precomputed tower file");
    sc->add_flag("--binary", ov.binary, "little-endian fixed-width binary vectors on stdin/stdout");
  };

  auto* search = app.add_subcommand("search", "find a curve with a rational point of order 2^delta");
  add_curve_opts(search);
  auto* precompute = app.add_subcommand("precompute", "build and cache the tower for b + <t>");
  std::string out_path;
  add_curve_opts(precompute);
  precompute->add_option("--out", out_path, "tower file to write");
  auto* eval = app.add_subcommand("eval", "u-coordinates on stdin -> values on b + <t>");
  auto* interp = app.add_subcommand("interp", "values on b + <t> -> u-coordinates");
  auto* reduce = app.add_subcommand("reduce", "x-coordinates -> u-coordinates modulo b + <t>");
  auto* mul = app.add_subcommand("mul", "product in the residue ring at b + <t> (2d inputs)");
  for (auto* sc : {eval, interp, reduce, mul}) add_curve_opts(sc);

  auto* goppa = app.add_subcommand("goppa", "Goppa code along b + <t>");
  goppa->require_subcommand(1);
  auto* g_enc = goppa->add_subcommand("encode", "d/2 message symbols -> d codeword symbols");
  auto* g_chk = goppa->add_subcommand("check", "d symbols -> 'valid <message>' or 'invalid'");
  for (auto* sc : {g_enc, g_chk}) add_curve_opts(sc);

  auto* lwe = app.add_subcommand("lwe", "toy Elliptic-LWE encryption (experimental, not secure)");
  lwe->require_subcommand(1);
  std::string preset = "toy", key_prefix, pub_path, sec_path;
  std::uint64_t lwe_seed = 1;
  unsigned beta = 1, ell = 1;
  auto* l_key = lwe->add_subcommand("keygen", "write PREFIX.pub and PREFIX.sec");
  l_key->add_option("--preset", preset, "toy or guideline")->check(CLI::IsMember({"toy", "guideline"}));
  l_key->add_option("--seed", lwe_seed, "seed for the ring and the key");
  l_key->add_option("--beta", beta, "bits per chunk");
  l_key->add_option("--ell", ell, "number of secrets");
  l_key->add_option("--out", key_prefix, "output prefix")->required();
  auto* l_enc = lwe->add_subcommand("enc", "bits (0/1 characters) on stdin -> ciphertext");
  l_enc->add_option("--pub", pub_path, "public key file")->required()->check(CLI::ExistingFile);
  l_enc->add_option("--seed", lwe_seed, "encryption randomness seed");
  auto* l_dec = lwe->add_subcommand("dec", "ciphertext on stdin -> bits");
  l_dec->add_option("--sec", sec_path, "secret key file")->required()->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "CSV op counts and timings for NTT and elliptic butterflies");
  unsigned dmin = 8, dmax = 16;
  int reps = 3;
  std::uint64_t bench_seed = 1;
  std::string bench_p;
  bench->add_option("--min", dmin, "smallest log2 d")->check(CLI::Range(1, 20));
  bench->add_option("--max", dmax, "largest log2 d")->check(CLI::Range(1, 20));
  bench->add_option("--reps", reps, "timed repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "seed");
  bench->add_option("--p", bench_p, "prime (default: searched, 1 mod 2^(max+1))");
  auto* selftest = app.add_subcommand("selftest", "oracle cross-checks and roundtrips");
  std::uint64_t st_seed = 1;
  selftest->add_option("--seed", st_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (!ov.p.empty()) cfg.p = ov.p;
    if (!ov.curve.empty()) cfg.curve = ov.curve;
    if (!ov.delta.empty()) cfg.delta = ov.delta;
    if (!ov.t.empty()) cfg.t = ov.t;
    if (!ov.b.empty()) cfg.b = ov.b;
    if (!ov.R.empty()) cfg.R = ov.R;
    if (!ov.seed.empty()) cfg.seed = ov.seed;
    if (!ov.cache_dir.empty()) cfg.cache_dir = ov.cache_dir;
    if (!ov.tower.empty()) cfg.tower = ov.tower;
    if (ov.long_form) cfg.long_form = "1";
    cfg.binary = ov.binary;
    if (cfg.binary) {
      std::ios::sync_with_stdio(false);
#ifdef _WIN32
      _setmode(_fileno(stdin), _O_BINARY);
      _setmode(_fileno(stdout), _O_BINARY);
#endif
    }

    if (*search) {
      Resolved r = resolve(cfg);
      std::cout << "p = " << r.K->p() << "\n"
                << "delta = " << std::countr_zero(r.d) << "\n"
                << "curve = " << [&] {
                     auto c = r.E->coeffs();
                     return std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
                            std::to_string(c[3]) + "," + std::to_string(c[4]);
                   }() << "\n"
                << "t = " << point_str(r.t) << "\n"
                << "R = " << point_str(r.R) << "\n"
                << "b = " << point_str(r.b) << "\n";
      return kExitOk;
    }
    if (*precompute) {
      Resolved r = resolve(cfg);
      if (out_path.empty() && r.cache_dir.empty()) throw ConfigError("precompute needs --out or a cache directory");
      Tower<PrimeField> tw = get_tower(r, r.b, true);
      if (!out_path.empty()) save_tower(out_path, tw);
      std::cout << tower_cache_key(*r.E, r.t, r.b) << "\n";
      return kExitOk;
    }
    if (*eval || *interp || *reduce) {
      Resolved r = resolve(cfg);
      Tower<PrimeField> tw = get_tower(r, r.b);
      Vec in = read_vec(std::cin, *r.K, r.d, r.binary);
      Vec out = *eval ? butterfly_evaluate(tw, in) : *interp ? butterfly_interpolate(tw, in) : butterfly_reduce(tw, in);
      write_vec(std::cout, *r.K, out, r.binary);
      return kExitOk;
    }
    if (*mul) {
      Resolved r = resolve(cfg);
      RingCtx ring = make_ring(get_tower(r, r.b), get_tower(r, r.R));
      Vec f = read_vec(std::cin, *r.K, r.d, r.binary);
      Vec g = read_vec(std::cin, *r.K, r.d, r.binary);
      write_vec(std::cout, *r.K, ring_multiply(ring, f, g), r.binary);
      return kExitOk;
    }
    if (*goppa) {
      Resolved r = resolve(cfg);
      if (r.E->mul(static_cast<i128>(2 * r.d), r.b).inf) throw ConfigError("b: Goppa codes need 2d b != O");
      GoppaCode code{get_tower(r, r.b), r.b};
      if (*g_enc) {
        write_vec(std::cout, *r.K, goppa_encode(code, read_vec(std::cin, *r.K, r.d / 2, r.binary)), r.binary);
      } else {
        auto m = goppa_check(code, read_vec(std::cin, *r.K, r.d, r.binary));
        if (!m) {
          std::cout << "invalid\n";
        } else {
          std::cout << "valid ";
          write_vec(std::cout, *r.K, *m, false);
        }
      }
      return kExitOk;
    }
    if (*lwe) {
      if (*l_key) {
        LweParams P = lwe_preset(preset, lwe_seed, beta, ell);
        std::mt19937_64 rng(lwe_seed);
        LweKeyPair kp = lwe_keygen(P, rng);
        std::ostringstream head;
        head << "preset " << preset << "\nseed " << lwe_seed << "\nbeta " << beta << "\nell " << ell << "\n";
        std::ofstream pub(key_prefix + ".pub"), sec(key_prefix + ".sec");
        if (!pub || !sec) throw ConfigError("cannot write key files with prefix " + key_prefix);
        pub << head.str() << "a " << to_hex(kp.pk.a, P.q()) << "\n";
        for (const auto& w : kp.pk.w) pub << "w " << to_hex(w, P.q()) << "\n";
        sec << head.str();
        for (const auto& s : kp.sk.s) sec << "s " << to_hex(s, P.q()) << "\n";
        std::cout << key_prefix << ".pub " << key_prefix << ".sec\n";
        return kExitOk;
      }
      if (*l_enc) {
        LweFile f = LweFile::read(pub_path);
        LweParams P = lwe_params_from(f);
        LwePublicKey pk;
        pk.a = from_hex(f.one("a"), P.q(), P.d());
        for (const auto& w : f.many("w")) pk.w.push_back(from_hex(w, P.q(), P.d()));
        if (pk.w.size() != P.ell) throw ConfigError("public key has the wrong number of w vectors");
        pk.phiT = lwe_transpose_matrix(P, pk.a);
        std::vector<std::uint8_t> bits;
        char ch;
        while (std::cin.get(ch)) {
          if (ch == '0' || ch == '1') bits.push_back(static_cast<std::uint8_t>(ch - '0'));
          else if (!std::isspace(static_cast<unsigned char>(ch))) throw ConfigError("message must consist of 0/1");
        }
        if (bits.size() != P.message_bits())
          throw ConfigError("message must have " + std::to_string(P.message_bits()) + " bits");
        std::mt19937_64 rng(lwe_seed);
        LweCiphertext ct = lwe_encrypt(P, pk, bits, rng);
        for (const auto& c1 : ct.c1) std::cout << "c1 " << to_hex(c1, P.q()) << "\n";
        std::cout << "c2 " << to_hex(ct.c2, P.q()) << "\n";
        return kExitOk;
      }
      LweFile f = LweFile::read(sec_path);
      LweParams P = lwe_params_from(f);
      LweSecretKey sk;
      for (const auto& s : f.many("s")) sk.s.push_back(from_hex(s, P.q(), P.d()));
      if (sk.s.size() != P.ell) throw ConfigError("secret key has the wrong number of s vectors");
      LweCiphertext ct;
      std::string tag, hex;
      while (std::cin >> tag >> hex) {
        if (tag == "c1") ct.c1.push_back(from_hex(hex, P.q(), P.d()));
        else if (tag == "c2") ct.c2 = from_hex(hex, P.q(), static_cast<std::size_t>(P.ell) * P.ell);
        else throw ConfigError("unknown ciphertext record '" + tag + "'");
      }
      for (auto bit : lwe_decrypt(P, sk, ct)) std::cout << static_cast<int>(bit);
      std::cout << "\n";
      return kExitOk;
    }
    if (*bench) {
      if (dmin > dmax) throw ConfigError("--min exceeds --max");
      const std::uint64_t p = bench_p.empty() ? cm_prime(dmax, 62, bench_seed) : parse_u64(bench_p, "p");
      auto K = std::make_shared<const PrimeField>(p);
      std::optional<TorsionCurve> tc;
      try {
        tc = find_torsion_curve(K, dmax, bench_seed);
      } catch (const MathError& e) {
        std::cerr << "warning: no elliptic context: " << e.what() << "\n";
      }
      std::mt19937_64 rng(bench_seed);
      std::cout << "d,algorithm,wall_time,op_count\n";
      auto emit = [](const BenchRow& r) {
        std::cout << r.d << ',' << r.algo << ',' << std::setprecision(6) << std::scientific << r.seconds << ','
                  << std::defaultfloat << r.ops << "\n";
      };
      for (unsigned k = dmin; k <= dmax; ++k) {
        const std::size_t d = std::size_t{1} << k;
        Vec f(d), g(d);
        for (auto& x : f) x = K->random(rng);
        for (auto& x : g) x = K->random(rng);
        try {
          NttCtx ntt(K, d);
          emit(bench_one(d, "ntt_eval", reps, [&](OpCounter* c) { return ntt.forward(f, c); }));
          emit(bench_one(d, "ntt_interp", reps, [&](OpCounter* c) { return ntt.inverse(f, c); }));
        } catch (const MathError& e) {
          std::cerr << "warning: skipping ntt rows at d=" << d << ": " << e.what() << "\n";
        }
        if (!tc) continue;
        Pt t = tc->E.mul(static_cast<i128>(tc->d() / d), tc->t);
        Pt b;
        do b = tc->E.random_point(rng);
        while (b == tc->R || tc->E.mul(static_cast<i128>(d), b).inf);
        RingCtx ring = make_ring(tc->E, t, tc->R, b);
        const auto& tw = ring.tr;
        emit(bench_one(d, "ell_eval", reps, [&](OpCounter* c) { return butterfly_evaluate(tw, f, c); }));
        emit(bench_one(d, "ell_interp", reps, [&](OpCounter* c) { return butterfly_interpolate(tw, f, c); }));
        emit(bench_one(d, "ell_reduce", reps, [&](OpCounter* c) { return butterfly_reduce(tw, f, c); }));
        emit(bench_one(d, "ring_mul", reps, [&](OpCounter* c) { return ring_multiply(ring, f, g, c); }));
      }
      return kExitOk;
    }
    if (*selftest) {
      int failures = run_selftest(st_seed, std::cout);
      std::cout << (failures ? "selftest FAILED (" + std::to_string(failures) + ")" : std::string("selftest passed"))
                << "\n";
      return failures ? kExitSelftest : kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}
