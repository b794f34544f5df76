// Acceptance suite: one PASS/FAIL line per criterion, exact equality only.
// Every criterion also fails if it takes 60 seconds or more.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "invalid_corpus.hpp"
#include "krull/json.hpp"
#include "support.hpp"

using namespace krull;
using testing_support::P;
using testing_support::Q;
using testing_support::ring_fp;
using testing_support::ring_q;
using testing_support::shell_quote;

namespace {

const std::string kF = "t1^3 + 2*t1^2*t2 + 4*t2^3";
constexpr double kTimeLimitSeconds = 60.0;

// Collects the first few failures of a criterion.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::ostringstream out;
    out << failed_ << " of " << count_ << " checks failed";
    for (const auto& f : failures_) out << "\n      " << f;
    return out.str();
  }

private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Cli {
  int code = -1;
  std::string out;
};

// Runs the CLI with `redirect` applied to stderr ("2>/dev/null" or "2>&1").
Cli run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  std::string cmd = std::string(KRULL_CLI) + " " + args + " " + redirect;
  Cli r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string text(const Polynomial& f, const RingSpec& spec) { return format_polynomial(f, spec); }

// 1: split and member for the worked polynomial, byte-exact through the CLI.
void worked_example(Check& c) {
  const auto spec = ring_q(2);
  auto f = P(kF, spec);
  auto parts = split_by_support(f, 1);
  c.expect(parts.f1 == P("t1^3 + 2*t1^2*t2", spec), "library f1");
  c.expect(parts.f2 == P("4*t2^3", spec), "library f2");
  c.expect(!member(f, MonomialPrimeIdeal(spec.ring(), 1)), "library member");

  auto s = run("split --vars 2 -k 1 " + shell_quote(kF));
  c.expect(s.code == 0 && s.out == "f1 = t1^3 + 2*t1^2*t2\nf2 = 4*t2^3\n", "split transcript: " + s.out);
  auto m = run("member --vars 2 -k 1 " + shell_quote(kF));
  c.expect(m.code == 0 && m.out == "false\n", "member transcript: " + m.out);
}

// 2: f(lambda a) = lambda^d f(a) for homogeneous f.
void homogeneity(Check& c) {
  Rng rng(kDefaultSeed);
  int cases = 0;
  while (cases < 600) {
    const std::size_t n = 1 + static_cast<std::size_t>(cases % 4);
    const Ring ring{FieldSpec::rationals(), n};
    const auto d = static_cast<std::uint32_t>(rng() % 7);
    auto f = random_homogeneous(ring, d, rng, {6, 6, 9, 3});
    if (f.is_zero()) continue;
    ++cases;
    Point a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(random_element(ring.field, rng, 9, 5));
    auto lambda = random_element(ring.field, rng, 9, 5);
    Point scaled;
    for (const auto& x : a) scaled.push_back(lambda * x);
    c.expect(is_homogeneous(f), "homogeneous generator");
    c.expect(evaluate(f, scaled) == pow(lambda, d) * evaluate(f, a), "scaling law for " + format_polynomial(f));
  }
  const auto spec = ring_q(2);
  auto f = P(kF, spec);
  c.expect(evaluate(f, Point{Q(2), Q(2)}) == Q(56), "f(2,2) = 56");
  c.expect(evaluate(f, Point{Q(2), Q(2)}) == pow(Q(2), 3) * evaluate(f, Point{Q(1), Q(1)}), "f(2,2) = 8 f(1,1)");
  auto e = run("eval --vars 2 --at 2,2 " + shell_quote(kF));
  c.expect(e.code == 0 && e.out == "56\n", "eval transcript: " + e.out);
}

// 3: over F2 the form t1^2 + t1*t2 vanishes on every point with nonzero coordinates.
void small_field(Check& c) {
  const auto spec = ring_fp(2, 2);
  const auto F2 = spec.field();
  auto f = P("t1^2 + t1*t2", spec);
  c.expect(evaluate(f, Point{FieldElement(F2, 0), FieldElement(F2, 1)}).is_zero(), "f(0,1) = 0");
  c.expect(evaluate(f, Point{FieldElement(F2, 1), FieldElement(F2, 1)}).is_zero(), "f(1,1) = 0");
  bool reported = false;
  try {
    nonvanishing_point(f);
  } catch (const FieldTooSmall&) {
    reported = true;
  }
  c.expect(reported, "nonvanishing_point reports FieldTooSmall");
  auto r = run("nonvanish --field F2 --vars 2 " + shell_quote("t1^2 + t1*t2"), "2>&1");
  c.expect(r.code == 1 && r.out.rfind("error: FieldTooSmall: ", 0) == 0, "CLI: " + r.out);
}

// 4: lambda * g = f(phi) with g monic of the right degree in the last variable.
void monicization(Check& c) {
  Rng rng(kDefaultSeed + 4);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const Ring ring{FieldSpec::rationals(), n};
    auto f = random_nonzero_polynomial(ring, rng, {6, 6, 9, 3});
    auto r = monicize(f);
    const auto label = format_polynomial(f);
    c.expect(is_monic_in(r.g, n - 1), "monic: " + label);
    c.expect(degree_in(r.g, n - 1) == total_degree(f), "degree: " + label);
    c.expect(r.substitution.lambda * r.g == substitute(f, r.substitution.images(ring)), "identity: " + label);
  }
  const auto spec = ring_q(2);
  auto r = monicize(P(kF, spec));
  c.expect(r.g == P("t2^3 + t1*t2^2 + 5/7*t1^2*t2 + 1/7*t1^3", spec), "worked g: " + text(r.g, spec));
  c.expect(r.substitution.lambda == Q(7), "worked lambda");
}

// 5: the chain P_0 < ... < P_n through the CLI.
void chain(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = run("chain-verify --vars " + std::to_string(n) + " --checks 1000");
    c.expect(r.code == 0, "exit code for n = " + std::to_string(n));
    json::Json j;
    try {
      j = json::Json::parse(r.out);
    } catch (const std::exception& e) {
      c.expect(false, std::string("JSON for n = ") + std::to_string(n) + ": " + e.what());
      continue;
    }
    c.expect(j.at("accepted").get<bool>(), "accepted for n = " + std::to_string(n));
    c.expect(j.at("levels").size() == n, "level count");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& l = j.at("levels").at(k);
      c.expect(l.at("witness") == "t" + std::to_string(k + 1), "witness t" + std::to_string(k + 1));
      c.expect(l.at("in_upper").get<bool>() && !l.at("in_lower").get<bool>(), "witness placement");
      c.expect(l.at("product_checks_run").get<std::size_t>() >= 1000, "check count");
      c.expect(l.at("product_checks_passed") == l.at("product_checks_run"), "all product checks pass");
    }
  }
}

// 6: f = f1 + t_k^ell h for f in P_k \ P_{k-1}.
void min_power(Check& c) {
  Rng rng(kDefaultSeed + 6);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const Ring ring{FieldSpec::rationals(), n};
    const std::size_t k = 1 + rng() % n;
    auto tk = Polynomial::variable(ring, k - 1);
    auto lower = k > 1 ? random_polynomial(ring, rng) * Polynomial::variable(ring, rng() % (k - 1)) : Polynomial(ring);
    Exponents free(n, 0);
    for (std::size_t j = k; j < n; ++j) free[j] = static_cast<std::uint32_t>(rng() % 3);
    auto h = random_polynomial(ring, rng) * tk + Polynomial::monomial(ring, free, random_nonzero_element(ring.field, rng));
    auto f = lower + pow(tk, 1 + rng() % 4) * h;
    const auto label = format_polynomial(f) + " k=" + std::to_string(k);
    c.expect(member(f, MonomialPrimeIdeal(ring, k)) && !member(f, MonomialPrimeIdeal(ring, k - 1)), "in P_k \\ P_k-1: " + label);
    auto d = extract_min_power(f, k);
    c.expect(d.f1 + pow(tk, d.ell) * d.h == f, "reconstruction: " + label);
    c.expect(!member(d.h, MonomialPrimeIdeal(ring, k)), "h outside P_k: " + label);
    c.expect(member(d.f1, MonomialPrimeIdeal(ring, k - 1)), "f1 in P_k-1: " + label);
  }
}

MonicGenerator random_generator(const Ring& ring, std::size_t d, Rng& rng) {
  const Ring base{ring.field, ring.nvars - 1};
  auto tn = Polynomial::variable(ring, ring.nvars - 1);
  auto g = pow(tn, d);
  for (std::size_t i = 0; i < d; ++i)
    g += extend_ring(random_polynomial(base, rng, {2, 3, 5, 2}), ring.nvars) * pow(tn, i);
  return MonicGenerator(g);
}

// 7: monic division, the subring check and the Gaussian witness.
void division(Check& c) {
  Rng rng(kDefaultSeed + 7);
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    const Ring ring{FieldSpec::rationals(), n};
    auto g = random_generator(ring, 1 + i % 5, rng);
    auto f = random_polynomial(ring, rng, {7, 6, 9, 2});
    auto [q, r] = divide_monic(f, g);
    const auto label = format_polynomial(f) + " by " + format_polynomial(g.polynomial());
    c.expect(q * g.polynomial() + r == f, "identity: " + label);
    c.expect(r.is_zero() || *degree_in(r, n - 1) < g.degree(), "remainder degree: " + label);
    // Any other (q', r') with the same shape is the same pair.
    auto shifted = random_polynomial(ring, rng);
    auto again = divide_monic((q + shifted) * g.polynomial() + r, g);
    c.expect(again.q == q + shifted && again.r == r, "uniqueness: " + label);
  }
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const Ring ring{FieldSpec::rationals(), n};
    auto g = random_generator(ring, 1 + i % 5, rng);
    auto f = extend_ring(random_polynomial(Ring{ring.field, n - 1}, rng), n);
    c.expect(subring_intersection_trivial(g, f), "subring: " + format_polynomial(f));
  }
  // a + b i in Q[t]/(t^2 + 1), as a coset and as the matrix of multiplication.
  const auto R1 = ring_q(1);
  MonicGenerator gauss(P("t1^2 + 1", R1));
  std::vector<std::pair<long, long>> pairs{{1, 1}};
  std::uniform_int_distribution<long> dist(-20, 20);
  while (pairs.size() < 5) pairs.emplace_back(dist(rng), dist(rng));
  for (auto [a, b] : pairs) {
    auto element = Polynomial::constant(R1.ring(), Q(a)) + Polynomial::constant(R1.ring(), Q(b)) * P("t1", R1);
    auto w = integrality_witness(element, gauss);
    auto one = Polynomial::constant(R1.ring(), 1);
    std::vector<Polynomial> expected{Polynomial::constant(R1.ring(), Q(a * a + b * b)),
                                     Polynomial::constant(R1.ring(), Q(-2 * a)), one};
    const auto label = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    c.expect(w.witness.char_poly == expected, "coset witness " + label);
    c.expect(w.annihilates(), "coset annihilated " + label);
    Matrix<mpq_class> m{{a, b}, {-b, a}};
    auto p = characteristic_polynomial(m, mpq_class(1));
    c.expect(p == Univariate<mpq_class>{a * a + b * b, -2 * a, 1}, "matrix witness " + label);
  }
  auto w11 = run("witness --matrix " + shell_quote("1,1;-1,1"));
  c.expect(w11.code == 0 && json::Json::parse(w11.out).at("char_poly") == json::Json{"2", "-2", "1"},
           "CLI (1,1): " + w11.out);
}

// 8: power_reduce against remainders of t^i modulo t^d - sum c_j t^j.
void power_reduction(Check& c) {
  Rng rng(kDefaultSeed + 8);
  const auto R1 = ring_q(1);
  const Ring ring = R1.ring();
  auto t = Polynomial::variable(ring, 0);
  for (std::size_t d = 1; d <= 6; ++d) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> coeffs;
      for (std::size_t j = 0; j < d; ++j)
        coeffs.push_back(Polynomial::constant(ring, random_element(ring.field, rng, 7, 4)));
      auto g = pow(t, d);
      for (std::size_t j = 0; j < d; ++j) g -= coeffs[j] * pow(t, j);
      MonicGenerator gen(g);
      for (unsigned i = 0; i <= 25; ++i) {
        auto remainder = coefficients_in(divide_monic(pow(t, i), gen).r, 0);
        remainder.resize(d, Polynomial(ring));
        auto reduced = power_reduce(ReductionCoefficients<Polynomial>{coeffs}, i, Polynomial::constant(ring, 1));
        c.expect(reduced.coeffs == remainder, "d=" + std::to_string(d) + " i=" + std::to_string(i));
      }
    }
  }
  auto i4 = run("power-reduce --relation=-1,0 -i 4");
  c.expect(i4.code == 0 && i4.out == "1, 0\n", "CLI a^4 for a^2 = -1: " + i4.out);
}

// Eisenstein at t1: t_n^d + t1 * (...) with constant term t1 * (unit + ...),
// so the quotient is a domain and every nonzero coset has a contraction.
MonicGenerator eisenstein_generator(const Ring& ring, std::size_t d, Rng& rng) {
  const std::size_t n = ring.nvars;
  const Ring base{ring.field, n - 1};
  auto tn = Polynomial::variable(ring, n - 1);
  auto t1 = Polynomial::variable(ring, 0);
  auto g = pow(tn, d);
  for (std::size_t i = 1; i < d; ++i)
    g += t1 * extend_ring(random_polynomial(base, rng, {2, 2, 5, 1}), n) * pow(tn, i);
  // The cofactor of t1 in the constant term: a nonzero constant plus terms
  // in t2..t_{n-1}, so it is not divisible by t1.
  Polynomial rest(ring);
  for (std::size_t j = 1; j + 1 < n; ++j)
    rest += Polynomial::constant(ring, random_element(ring.field, rng, 5)) * Polynomial::variable(ring, j);
  g += t1 * (Polynomial::constant(ring, random_nonzero_element(ring.field, rng, 5)) + rest);
  return MonicGenerator(g);
}

// 9: Cayley-Hamilton on cosets and the contraction witness.
void contraction(Check& c) {
  Rng rng(kDefaultSeed + 9);
  int cases = 0;
  while (cases < 250) {
    const std::size_t n = 2 + static_cast<std::size_t>(cases % 2);
    const Ring ring{FieldSpec::rationals(), n};
    auto g = eisenstein_generator(ring, 1 + cases % 5, rng);
    auto f = random_polynomial(ring, rng, {3, 4, 5, 2});
    if (reduce(f, g).is_zero()) continue;
    ++cases;
    const auto label = format_polynomial(f) + " mod " + format_polynomial(g.polynomial());
    auto w = integrality_witness(f, g);
    c.expect(w.witness.degree() == g.degree(), "char poly degree: " + label);
    c.expect(w.annihilates(), "Cayley-Hamilton: " + label);
    try {
      auto cw = contraction_witness(f, g);
      c.expect(!cw.c0.is_zero(), "c0 nonzero: " + label);
      c.expect(degree_in(cw.c0, n - 1).value_or(0) == 0, "c0 free of the last variable: " + label);
      c.expect(reduce(f * cw.cofactor.residue() - cw.c0, g).is_zero(), "f w = c0: " + label);
    } catch (const Error& e) {
      c.expect(false, std::string(e.what()) + ": " + label);
    }
  }
  auto r = run("contract-witness --vars 2 t2 " + shell_quote("t2^2 - t1"));
  c.expect(r.code == 0, "CLI contract-witness");
  if (r.code == 0) {
    auto j = json::Json::parse(r.out);
    c.expect(j.at("c0") == "-t1" && j.at("cofactor") == "-t2" && j.at("check") == "zero", "CLI document: " + r.out);
  }
}

// 10: parse(format(f)) = f, and positioned errors on the invalid corpus.
void round_trip(Check& c) {
  Rng rng(kDefaultSeed + 10);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int i = 0; i < 2000; ++i) {
      const auto spec = RingSpec::standard(field, 1 + static_cast<std::size_t>(i % 4));
      auto f = random_polynomial(spec.ring(), rng, {6, 8, 20, 6});
      auto printed = format_polynomial(f, spec);
      c.expect(parse_polynomial(printed, spec) == f, field.to_string() + " round trip: " + printed);
    }
  }
  const auto spec = ring_q(2);
  for (const auto& bad : testing_support::invalid_corpus()) {
    try {
      parse_polynomial(bad.text, spec);
      c.expect(false, "accepted '" + bad.text + "'");
    } catch (const ParseError& e) {
      c.expect(e.offset() == bad.offset, "offset for '" + bad.text + "': " + e.what());
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "split and member transcript for the worked polynomial", worked_example},
      {2, "homogeneity law on random forms", homogeneity},
      {3, "F2 form with no nonvanishing point", small_field},
      {4, "monicization identity", monicization},
      {5, "chain verification for n = 1..5", chain},
      {6, "minimal power extraction", min_power},
      {7, "monic division, subring check, Gaussian witness", division},
      {8, "power reduction against division", power_reduction},
      {9, "Cayley-Hamilton and contraction witnesses", contraction},
      {10, "parser round trip and invalid corpus", round_trip},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && check.ok() && seconds < kTimeLimitSeconds;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " " << std::setw(2) << criterion.id << "  " << criterion.name << " ("
              << check.count() << " checks, " << std::fixed << std::setprecision(2) << seconds << "s)\n";
    if (!error.empty()) std::cout << "      exception: " << error << "\n";
    if (!check.ok()) std::cout << "      " << check.summary() << "\n";
    if (seconds >= kTimeLimitSeconds) std::cout << "      over the " << kTimeLimitSeconds << "s limit\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
