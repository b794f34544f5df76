#pragma once

// Seedable random generation of field elements and polynomials, used by the
// randomized prime-ideal checks and the property tests.

#include <algorithm>
#include <cstdint>
#include <random>

#include "krull/field.hpp"
#include "krull/polynomial.hpp"

namespace krull {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct RandomPolynomialOptions {
  std::uint32_t max_degree = 4;
  std::size_t max_terms = 6;
  long long coefficient_bound = 9;  // numerators in [-bound, bound]
  long long denominator_bound = 1;  // denominators in [1, bound] over Q
};

inline FieldElement random_element(const FieldSpec& spec, Rng& rng, long long bound = 9,
                                   long long denominator_bound = 1) {
  if (!spec.is_rationals()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, spec.modulus() - 1);
    return FieldElement(spec, static_cast<long long>(dist(rng)));
  }
  std::uniform_int_distribution<long long> num(-bound, bound);
  std::uniform_int_distribution<long long> den(1, std::max(1LL, denominator_bound));
  return FieldElement(spec, mpz_class(static_cast<long>(num(rng))), mpz_class(static_cast<long>(den(rng))));
}

inline FieldElement random_nonzero_element(const FieldSpec& spec, Rng& rng, long long bound = 9,
                                           long long denominator_bound = 1) {
  while (true) {
    auto x = random_element(spec, rng, bound, denominator_bound);
    if (!x.is_zero()) return x;
  }
}

/// Uniformly chosen exponent vector of total degree exactly d.
inline Exponents random_exponents_of_degree(std::size_t nvars, std::uint32_t d, Rng& rng) {
  Exponents e(nvars, 0);
  if (nvars == 0) return e;
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (std::uint32_t i = 0; i < d; ++i) ++e[pick(rng)];
  return e;
}

inline Polynomial random_polynomial(const Ring& ring, Rng& rng, const RandomPolynomialOptions& opts = {}) {
  Polynomial f(ring);
  std::uniform_int_distribution<std::size_t> count(0, opts.max_terms);
  std::uniform_int_distribution<std::uint32_t> degree(0, opts.max_degree);
  auto terms = count(rng);
  for (std::size_t i = 0; i < terms; ++i)
    f.add_term(random_exponents_of_degree(ring.nvars, degree(rng), rng),
               random_element(ring.field, rng, opts.coefficient_bound, opts.denominator_bound));
  return f;
}

inline Polynomial random_nonzero_polynomial(const Ring& ring, Rng& rng, const RandomPolynomialOptions& opts = {}) {
  while (true) {
    auto f = random_polynomial(ring, rng, opts);
    if (!f.is_zero()) return f;
  }
}

/// Random polynomial with every term of total degree d (possibly zero).
inline Polynomial random_homogeneous(const Ring& ring, std::uint32_t d, Rng& rng,
                                     const RandomPolynomialOptions& opts = {}) {
  Polynomial f(ring);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, opts.max_terms));
  auto terms = count(rng);
  for (std::size_t i = 0; i < terms; ++i)
    f.add_term(random_exponents_of_degree(ring.nvars, d, rng),
               random_element(ring.field, rng, opts.coefficient_bound, opts.denominator_bound));
  return f;
}

}  // namespace krull
