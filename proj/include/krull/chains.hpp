#pragma once

// The monomial prime ideals P_k = <t_1, ..., t_k> of F[t_1, ..., t_n]
// (P_0 = {0}), their membership test, a randomized certificate that
// P_0 < P_1 < ... < P_n is a strict chain of prime ideals, and the
// minimal-power decomposition f = f1 + t_k^ell * h used to show the chain
// cannot be refined.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "krull/error.hpp"
#include "krull/polynomial.hpp"
#include "krull/random.hpp"

namespace krull {

class MonomialPrimeIdeal {
public:
  MonomialPrimeIdeal(Ring ring, std::size_t k) : ring_(ring), k_(k) {
    if (k > ring.nvars)
      throw InvalidArgument("P_" + std::to_string(k) + " needs k <= n = " + std::to_string(ring.nvars));
  }

  const Ring& ring() const noexcept { return ring_; }
  /// Number of generators; 0 is the zero ideal.
  std::size_t k() const noexcept { return k_; }

  friend bool operator==(const MonomialPrimeIdeal&, const MonomialPrimeIdeal&) = default;

private:
  Ring ring_;
  std::size_t k_;
};

/// f is in P_k iff every term is divisible by one of t_1, ..., t_k, i.e. the
/// part of f free of those variables vanishes.
inline bool member(const Polynomial& f, const MonomialPrimeIdeal& ideal) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch("polynomial and ideal live in different rings");
  if (ideal.k() == 0) return f.is_zero();
  return split_by_support(f, ideal.k()).f2.is_zero();
}

/// One instance of the prime property: g*h in P implies g in P or h in P.
/// A false result means the library is wrong, not the mathematics.
inline bool primality_product_check(const MonomialPrimeIdeal& ideal, const Polynomial& g, const Polynomial& h) {
  g.check_ring(h);
  if (!member(g * h, ideal)) return true;
  return member(g, ideal) || member(h, ideal);
}

struct ProductCounterexample {
  Polynomial g;
  Polynomial h;
};

/// Greedily drops terms from a failing (g, h) while the check still fails.
inline ProductCounterexample shrink_counterexample(
    const ProductCounterexample& failing,
    const std::function<bool(const Polynomial&, const Polynomial&)>& check) {
  auto current = failing;
  auto try_drop = [&](Polynomial ProductCounterexample::*slot) {
    bool progress = true;
    while (progress) {
      progress = false;
      const auto& poly = current.*slot;
      for (const auto& [e, c] : poly.terms()) {
        auto candidate = current;
        (candidate.*slot).add_term(e, -c);
        if (!check(candidate.g, candidate.h)) {
          current = std::move(candidate);
          progress = true;
          break;
        }
      }
    }
  };
  try_drop(&ProductCounterexample::g);
  try_drop(&ProductCounterexample::h);
  return current;
}

struct ChainLevel {
  std::size_t level = 0;  // describes P_{level-1} < P_level
  Polynomial witness;     // t_level
  bool in_upper = false;  // witness in P_level
  bool in_lower = true;   // witness in P_{level-1}
  std::size_t product_checks_run = 0;
  std::size_t product_checks_passed = 0;
  std::optional<ProductCounterexample> counterexample;

  bool passed() const noexcept {
    return in_upper && !in_lower && product_checks_passed == product_checks_run;
  }
};

struct ChainReport {
  Ring ring;
  bool proper = false;  // 1 is not in P_n
  std::size_t zero_ideal_checks_run = 0;
  std::size_t zero_ideal_checks_passed = 0;
  std::vector<ChainLevel> levels;

  bool accepted() const noexcept {
    return proper && zero_ideal_checks_passed == zero_ideal_checks_run &&
           std::all_of(levels.begin(), levels.end(), [](const ChainLevel& l) { return l.passed(); });
  }
};

struct ChainCheckOptions {
  std::size_t product_checks_per_level = 1000;
  std::uint64_t seed = kDefaultSeed;
  RandomPolynomialOptions polynomials{3, 4, 5, 1};
};

namespace detail {

// Random (g, h) pairs for the prime check on P_k. A third of the pairs are
// unconstrained; the rest force g or h into P_k so the implication is
// exercised on products that really are members.
inline std::pair<Polynomial, Polynomial> random_product_pair(const Ring& ring, std::size_t k, std::size_t round,
                                                             Rng& rng, const RandomPolynomialOptions& opts) {
  auto g = random_polynomial(ring, rng, opts);
  auto h = random_polynomial(ring, rng, opts);
  auto force_into_ideal = [&](Polynomial& p) {
    if (k == 0) {
      p = Polynomial(ring);
      return;
    }
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    p *= Polynomial::variable(ring, pick(rng));
  };
  switch (round % 3) {
    case 1: force_into_ideal(g); break;
    case 2: force_into_ideal(h); break;
    default: break;
  }
  return {std::move(g), std::move(h)};
}

inline std::pair<std::size_t, std::optional<ProductCounterexample>> run_product_checks(
    const MonomialPrimeIdeal& ideal, std::size_t rounds, Rng& rng, const RandomPolynomialOptions& opts) {
  std::size_t passed = 0;
  std::optional<ProductCounterexample> failure;
  for (std::size_t i = 0; i < rounds; ++i) {
    auto [g, h] = random_product_pair(ideal.ring(), ideal.k(), i, rng, opts);
    if (primality_product_check(ideal, g, h)) {
      ++passed;
    } else if (!failure) {
      failure = shrink_counterexample({g, h}, [&](const Polynomial& a, const Polynomial& b) {
        return primality_product_check(ideal, a, b);
      });
    }
  }
  return {passed, std::move(failure)};
}

}  // namespace detail

/// Checks the chain P_0 < P_1 < ... < P_n: the witness t_k lies in P_k but
/// not P_{k-1}, P_n is proper, and every ideal (P_0 included) passes the
/// configured number of randomized prime checks.
inline ChainReport verify_chain(const Ring& ring, const ChainCheckOptions& opts = {}) {
  if (ring.nvars < 1) throw InvalidArgument("chain verification needs at least one variable");
  Rng rng(opts.seed);
  ChainReport report{ring, false, 0, 0, {}};
  report.proper = !member(Polynomial::constant(ring, 1), MonomialPrimeIdeal(ring, ring.nvars));

  auto [zero_passed, zero_failure] =
      detail::run_product_checks(MonomialPrimeIdeal(ring, 0), opts.product_checks_per_level, rng, opts.polynomials);
  report.zero_ideal_checks_run = opts.product_checks_per_level;
  report.zero_ideal_checks_passed = zero_passed;

  for (std::size_t k = 1; k <= ring.nvars; ++k) {
    MonomialPrimeIdeal upper(ring, k), lower(ring, k - 1);
    auto witness = Polynomial::variable(ring, k - 1);
    ChainLevel level{k, witness, member(witness, upper), member(witness, lower), 0, 0, std::nullopt};
    auto [passed, failure] = detail::run_product_checks(upper, opts.product_checks_per_level, rng, opts.polynomials);
    level.product_checks_run = opts.product_checks_per_level;
    level.product_checks_passed = passed;
    level.counterexample = std::move(failure);
    report.levels.push_back(std::move(level));
  }
  return report;
}

/// f = f1 + t_k^ell * h with f1 in P_{k-1} and h not in P_k.
struct MinPowerDecomposition {
  std::uint64_t ell;
  Polynomial f1;
  Polynomial h;
};

/// Requires f in P_k but not in P_{k-1} (k one-based). ell is the smallest
/// power of t_k among the terms of f free of t_1, ..., t_{k-1}.
inline MinPowerDecomposition extract_min_power(const Polynomial& f, std::size_t k) {
  if (k < 1 || k > f.nvars())
    throw InvalidArgument("k = " + std::to_string(k) + " outside 1.." + std::to_string(f.nvars()));
  if (!member(f, MonomialPrimeIdeal(f.ring(), k)) || member(f, MonomialPrimeIdeal(f.ring(), k - 1)))
    throw PreconditionViolated("polynomial must lie in P_" + std::to_string(k) + " but not in P_" +
                               std::to_string(k - 1));

  Polynomial f1(f.ring()), f2(f.ring());
  for (const auto& [e, c] : f.terms()) (touches_first(e, k - 1) ? f1 : f2).add_term(e, c);

  const std::size_t var = k - 1;
  std::uint64_t ell = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [e, c] : f2.terms()) ell = std::min<std::uint64_t>(ell, e[var]);

  Polynomial h(f.ring());
  for (const auto& [e, c] : f2.terms()) {
    auto lowered = e;
    lowered[var] -= static_cast<std::uint32_t>(ell);
    h.add_term(std::move(lowered), c);
  }
  return {ell, std::move(f1), std::move(h)};
}

/// P_k in n variables contracted to F[t_1, ..., t_{n-1}]: P_min(k, n-1).
inline MonomialPrimeIdeal contract_to_subring(const MonomialPrimeIdeal& ideal) {
  const auto& ring = ideal.ring();
  if (ring.nvars < 2) throw InvalidArgument("contraction needs at least two variables");
  return MonomialPrimeIdeal(Ring{ring.field, ring.nvars - 1}, std::min(ideal.k(), ring.nvars - 1));
}

}  // namespace krull
