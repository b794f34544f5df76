#pragma once

// Sparse multivariate polynomials over an exact field.
//
// A polynomial is a map from exponent vectors to nonzero coefficients. Terms
// iterate in graded-lex descending order (higher total degree first, ties
// broken lexicographically with t1 most significant), which is also the
// printing order. Variables are addressed by zero-based index: variable j is
// t_{j+1}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "krull/error.hpp"
#include "krull/field.hpp"

namespace krull {

/// Polynomial ring F[t1, ..., tn].
struct Ring {
  FieldSpec field;
  std::size_t nvars;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using Exponents = std::vector<std::uint32_t>;

/// Largest exponent the library stores.
inline constexpr std::uint64_t kMaxExponent = 2147483647;

inline std::uint64_t total_degree(const Exponents& e) noexcept {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Degree of a polynomial; empty for the zero polynomial, whose degree is
/// undefined.
using Degree = std::optional<std::uint64_t>;

class Polynomial {
public:
  using TermMap = std::map<Exponents, FieldElement, GradedLexGreater>;

  /// The zero polynomial of `ring`.
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const FieldElement& c) {
    Polynomial p(ring);
    p.add_term(Exponents(ring.nvars, 0), c);
    return p;
  }

  static Polynomial constant(Ring ring, long long c) { return constant(ring, FieldElement(ring.field, c)); }

  static Polynomial variable(Ring ring, std::size_t var) {
    if (var >= ring.nvars)
      throw InvalidArgument("variable index " + std::to_string(var) + " out of range for " +
                            std::to_string(ring.nvars) + " variables");
    Exponents e(ring.nvars, 0);
    e[var] = 1;
    return monomial(ring, std::move(e), FieldElement::one(ring.field));
  }

  static Polynomial monomial(Ring ring, Exponents e, const FieldElement& c) {
    Polynomial p(ring);
    p.add_term(std::move(e), c);
    return p;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.nvars; }
  const FieldSpec& field() const noexcept { return ring_.field; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  FieldElement coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement::zero(ring_.field) : it->second;
  }

  /// Accumulates c * t^e, dropping the term if it cancels.
  void add_term(Exponents e, const FieldElement& c) {
    if (e.size() != ring_.nvars)
      throw InvalidArgument("exponent vector has " + std::to_string(e.size()) + " entries, ring has " +
                            std::to_string(ring_.nvars) + " variables");
    if (!(c.spec() == ring_.field))
      throw FieldMismatch("coefficient in " + c.spec().to_string() + ", ring over " +
                          ring_.field.to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  Polynomial& operator*=(const FieldElement& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const FieldElement& c, Polynomial f) { return f *= c; }
  friend Polynomial operator*(Polynomial f, const FieldElement& c) { return f *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    Exponents e(a.ring_.nvars);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = add_exponents(ea[j], eb[j]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  void check_ring(const Polynomial& rhs) const {
    if (!(ring_ == rhs.ring_))
      throw RingMismatch("polynomials live in different rings (" + ring_.field.to_string() + "[" +
                         std::to_string(ring_.nvars) + " vars] vs " + rhs.ring_.field.to_string() + "[" +
                         std::to_string(rhs.ring_.nvars) + " vars])");
  }

private:
  static std::uint32_t add_exponents(std::uint32_t a, std::uint32_t b) {
    auto s = std::uint64_t{a} + b;
    if (s > kMaxExponent) throw InvalidArgument("exponent overflow (limit 2^31 - 1)");
    return static_cast<std::uint32_t>(s);
  }

  Ring ring_;
  TermMap terms_;
};

inline bool is_zero(const Polynomial& f) noexcept { return f.is_zero(); }

inline Polynomial pow(const Polynomial& f, std::uint64_t e) {
  auto result = Polynomial::constant(f.ring(), 1);
  auto base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

inline Degree total_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  // Graded order puts a term of maximal degree first.
  return total_degree(f.terms().begin()->first);
}

inline Degree degree_in(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars())
    throw InvalidArgument("variable index " + std::to_string(var) + " out of range");
  if (f.is_zero()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max<std::uint64_t>(d, e[var]);
  return d;
}

inline FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  if (point.size() != f.nvars())
    throw InvalidArgument("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                          std::to_string(f.nvars()) + " variables");
  for (const auto& a : point)
    if (!(a.spec() == f.field())) throw FieldMismatch("point coordinate outside " + f.field().to_string());
  auto value = FieldElement::zero(f.field());
  for (const auto& [e, c] : f.terms()) {
    auto term = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) term *= pow(point[j], e[j]);
    value += term;
  }
  return value;
}

/// Ring homomorphism t_j -> images[j]. The images fix the target ring, which
/// may have a different number of variables than f's ring.
inline Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars())
    throw InvalidArgument("substitution needs " + std::to_string(f.nvars()) + " images, got " +
                          std::to_string(images.size()));
  if (images.empty()) return f;  // zero-variable ring: only constants
  const Ring target = images.front().ring();
  for (const auto& img : images) images.front().check_ring(img);
  if (!(target.field == f.field())) throw RingMismatch("substitution images live over a different field");

  // powers[j][k] = images[j]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t j, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[j]);
    return cache[k];
  };

  Polynomial result(target);
  for (const auto& [e, c] : f.terms()) {
    auto term = Polynomial::constant(target, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) term *= power(j, e[j]);
    result += term;
  }
  return result;
}

/// Terms of total degree exactly d.
inline Polynomial homogeneous_component(const Polynomial& f, std::uint64_t d) {
  Polynomial r(f.ring());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) == d) r.add_term(e, c);
  return r;
}

/// The homogeneous component at the total degree. Undefined for zero.
inline Polynomial leading_form(const Polynomial& f) {
  auto d = total_degree(f);
  if (!d) throw ZeroPolynomial("the zero polynomial has no leading form");
  return homogeneous_component(f, *d);
}

/// True iff all terms share one total degree. The zero polynomial counts as
/// homogeneous.
inline bool is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  auto d = total_degree(f.terms().begin()->first);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [d](const auto& term) { return total_degree(term.first) == d; });
}

/// f = f1 + f2, where f1 collects the terms divisible by some t_j with
/// j <= k (one-based) and f2 the terms free of t_1, ..., t_k.
struct SupportSplit {
  Polynomial f1;
  Polynomial f2;
};

inline bool touches_first(const Exponents& e, std::size_t k) {
  return std::any_of(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k),
                     [](std::uint32_t x) { return x != 0; });
}

inline SupportSplit split_by_support(const Polynomial& f, std::size_t k) {
  if (k < 1 || k > f.nvars())
    throw InvalidArgument("k = " + std::to_string(k) + " outside 1.." + std::to_string(f.nvars()));
  SupportSplit s{Polynomial(f.ring()), Polynomial(f.ring())};
  for (const auto& [e, c] : f.terms()) (touches_first(e, k) ? s.f1 : s.f2).add_term(e, c);
  return s;
}

/// Dense view in one variable: result[i] is the coefficient of t_var^i, a
/// polynomial (in the same ring) free of t_var. Empty for zero.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  auto d = degree_in(f, var);
  if (!d) return {};
  std::vector<Polynomial> coeffs(*d + 1, Polynomial(f.ring()));
  for (const auto& [e, c] : f.terms()) {
    auto stripped = e;
    stripped[var] = 0;
    coeffs[e[var]].add_term(std::move(stripped), c);
  }
  return coeffs;
}

/// Inverse of coefficients_in: sum of coeffs[i] * t_var^i.
inline Polynomial from_coefficients_in(Ring ring, std::size_t var, std::span<const Polynomial> coeffs) {
  Polynomial r(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    r.check_ring(coeffs[i]);
    for (const auto& [e, c] : coeffs[i].terms()) {
      if (e[var] != 0) throw InvalidArgument("coefficient depends on the collected variable");
      auto shifted = e;
      shifted[var] = static_cast<std::uint32_t>(i);
      r.add_term(std::move(shifted), c);
    }
  }
  return r;
}

/// Monic in t_var: the top coefficient in t_var is the constant 1.
inline bool is_monic_in(const Polynomial& f, std::size_t var) {
  auto coeffs = coefficients_in(f, var);
  return !coeffs.empty() && coeffs.back() == Polynomial::constant(f.ring(), 1);
}

/// Embeds f into a ring with more variables (new exponents are zero).
inline Polynomial extend_ring(const Polynomial& f, std::size_t nvars) {
  if (nvars < f.nvars()) throw InvalidArgument("extend_ring cannot drop variables");
  Ring ring{f.field(), nvars};
  Polynomial r(ring);
  for (const auto& [e, c] : f.terms()) {
    auto wide = e;
    wide.resize(nvars, 0);
    r.add_term(std::move(wide), c);
  }
  return r;
}

/// Views f in the ring of its first `nvars` variables; f must not involve
/// the dropped ones.
inline Polynomial restrict_ring(const Polynomial& f, std::size_t nvars) {
  if (nvars > f.nvars()) throw InvalidArgument("restrict_ring cannot add variables");
  Ring ring{f.field(), nvars};
  Polynomial r(ring);
  for (const auto& [e, c] : f.terms()) {
    if (std::any_of(e.begin() + static_cast<std::ptrdiff_t>(nvars), e.end(),
                    [](std::uint32_t x) { return x != 0; }))
      throw PreconditionViolated("polynomial involves a variable being dropped");
    r.add_term(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nvars)), c);
  }
  return r;
}

}  // namespace krull
