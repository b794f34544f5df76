#pragma once

// Shared helpers for the test binaries: shorthand constructors, independent
// oracles that do not go through the library's arithmetic, and a CLI runner.

#include <array>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <sys/wait.h>

#include "krull/krull.hpp"

namespace testing_support {

inline krull::RingSpec ring_q(std::size_t n) { return krull::RingSpec::standard(krull::FieldSpec::rationals(), n); }
inline krull::RingSpec ring_fp(std::uint64_t p, std::size_t n) {
  return krull::RingSpec::standard(krull::FieldSpec::prime(p), n);
}

inline krull::Polynomial P(const std::string& text, const krull::RingSpec& spec) {
  return krull::parse_polynomial(text, spec);
}

inline krull::FieldElement Q(long num, long den = 1) {
  return krull::FieldElement(krull::FieldSpec::rationals(), mpz_class(num), mpz_class(den));
}

// Dense-map polynomial over Q with schoolbook arithmetic, used as an oracle
// that shares no code with krull::Polynomial.
struct OraclePoly {
  std::map<std::vector<unsigned>, mpq_class> terms;
  std::size_t n = 0;

  static OraclePoly constant(std::size_t n, const mpq_class& c) {
    OraclePoly p{{}, n};
    if (c != 0) p.terms[std::vector<unsigned>(n, 0)] = c;
    return p;
  }
  static OraclePoly var(std::size_t n, std::size_t j) {
    OraclePoly p{{}, n};
    std::vector<unsigned> e(n, 0);
    e[j] = 1;
    p.terms[e] = 1;
    return p;
  }
  static OraclePoly from(const krull::Polynomial& f) {
    OraclePoly p{{}, f.nvars()};
    for (const auto& [e, c] : f.terms()) p.terms[std::vector<unsigned>(e.begin(), e.end())] = c.rational();
    return p;
  }

  void clean() {
    for (auto it = terms.begin(); it != terms.end();) it = it->second == 0 ? terms.erase(it) : std::next(it);
  }

  friend OraclePoly operator+(OraclePoly a, const OraclePoly& b) {
    for (const auto& [e, c] : b.terms) a.terms[e] += c;
    a.clean();
    return a;
  }
  friend OraclePoly operator*(const OraclePoly& a, const OraclePoly& b) {
    OraclePoly r{{}, a.n};
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        auto e = ea;
        for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
        r.terms[e] += ca * cb;
      }
    r.clean();
    return r;
  }
  friend OraclePoly operator*(const mpq_class& c, OraclePoly a) {
    for (auto& [e, x] : a.terms) x *= c;
    a.clean();
    return a;
  }

  friend bool operator==(const OraclePoly& a, const OraclePoly& b) { return a.terms == b.terms; }
};

inline OraclePoly oracle_pow(const OraclePoly& x, unsigned e) {
  auto r = OraclePoly::constant(x.n, 1);
  for (unsigned i = 0; i < e; ++i) r = r * x;
  return r;
}

/// f(images) computed term by term with repeated multiplication.
inline OraclePoly oracle_substitute(const OraclePoly& f, const std::vector<OraclePoly>& images) {
  auto r = OraclePoly::constant(images.at(0).n, 0);
  for (const auto& [e, c] : f.terms) {
    auto term = OraclePoly::constant(images[0].n, c);
    for (std::size_t j = 0; j < e.size(); ++j) term = term * oracle_pow(images[j], e[j]);
    r = r + term;
  }
  return r;
}

/// Remainder of t^i modulo t^d - sum_j c_j t^j over Q, by schoolbook long
/// division on a dense coefficient vector.
inline std::vector<mpq_class> oracle_power_remainder(const std::vector<mpq_class>& c, unsigned i) {
  const std::size_t d = c.size();
  std::vector<mpq_class> r(std::max<std::size_t>(i + 1, d), 0);
  r[i] = 1;
  for (std::size_t e = r.size(); e-- > d;) {
    if (r[e] == 0) continue;
    auto lead = r[e];
    r[e] = 0;
    for (std::size_t j = 0; j < d; ++j) r[e - d + j] += lead * c[j];
  }
  r.resize(d);
  return r;
}

struct CliResult {
  int code = -1;
  std::string out;
};

/// Runs the CLI with a shell-quoted argument string; stdout only.
inline CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(KRULL_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

}  // namespace testing_support
