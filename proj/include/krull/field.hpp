#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and residues modulo a
// prime p < 2^32. Values are immutable once built and always canonical, so
// equality is structural.

#include <cstdint>
#include <gmpxx.h>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "krull/error.hpp"

namespace krull {

class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }

  static FieldSpec prime(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max())
      throw InvalidFieldSpec("modulus " + std::to_string(p) + " exceeds 2^32 - 1");
    if (!is_prime(p))
      throw InvalidFieldSpec("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::PrimeField, p);
  }

  /// Textual form used by the CLI: `Q` or `F<p>`.
  static FieldSpec parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text.front() == 'F') {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9') throw InvalidFieldSpec("malformed field '" + std::string(text) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p > std::numeric_limits<std::uint32_t>::max())
          throw InvalidFieldSpec("modulus in '" + std::string(text) + "' exceeds 2^32 - 1");
      }
      return prime(p);
    }
    throw InvalidFieldSpec("malformed field '" + std::string(text) + "' (expected Q or F<p>)");
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::string to_string() const {
    return is_rationals() ? std::string("Q") : "F" + std::to_string(modulus_);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  // Trial division; moduli are below 2^32.
  static bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
      if (p % q == 0) return false;
    return true;
  }

  Kind kind_;
  std::uint64_t modulus_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldSpec& spec) {
  return os << spec.to_string();
}

class FieldElement {
public:
  FieldElement(FieldSpec spec, long long value) : FieldElement(spec, mpz_class(static_cast<long>(value))) {}

  FieldElement(FieldSpec spec, const mpz_class& value) : spec_(spec), value_(residue_of(spec, value)) {
    if (spec.is_rationals()) value_ = mpq_class(value);
  }

  /// Exact rational value; over F_p it is reduced like `num/den`.
  FieldElement(FieldSpec spec, const mpq_class& value)
      : FieldElement(spec, value.get_num(), value.get_den()) {}

  /// `num/den` reduced into the field. Over F_p this is num * den^-1 and
  /// fails when p divides den.
  FieldElement(FieldSpec spec, const mpz_class& num, const mpz_class& den) : spec_(spec), value_(0ULL) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (spec.is_rationals()) {
      mpq_class q(num, den);
      q.canonicalize();
      value_ = std::move(q);
    } else {
      auto d = residue_of(spec, den);
      if (d == 0)
        throw DivisionByZero("denominator " + den.get_str() + " vanishes in " + spec.to_string());
      value_ = mul_mod(residue_of(spec, num), inv_mod(d, spec.modulus()), spec.modulus());
    }
  }

  static FieldElement zero(FieldSpec spec) { return FieldElement(spec, 0); }
  static FieldElement one(FieldSpec spec) { return FieldElement(spec, 1); }

  const FieldSpec& spec() const noexcept { return spec_; }

  bool is_zero() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
  }

  bool is_one() const noexcept {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
  }

  /// Rational value; requires a rational element.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Residue in [0, p); requires a prime-field element.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  /// True when the printed form needs a leading minus sign (rationals only;
  /// residues print as nonnegative representatives).
  bool is_negative() const noexcept {
    auto* q = std::get_if<mpq_class>(&value_);
    return q != nullptr && sgn(*q) < 0;
  }

  std::string to_string() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
  }

  FieldElement operator-() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return FieldElement(Raw{}, spec_, mpq_class(-*q));
    auto r = std::get<std::uint64_t>(value_);
    return FieldElement(Raw{}, spec_, r == 0 ? std::uint64_t{0} : spec_.modulus() - r);
  }

  FieldElement& operator+=(const FieldElement& rhs) {
    check_same(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
      *q += rhs.rational();
    } else {
      auto& r = std::get<std::uint64_t>(value_);
      r = (r + rhs.residue()) % spec_.modulus();
    }
    return *this;
  }

  FieldElement& operator-=(const FieldElement& rhs) { return *this += -rhs; }

  FieldElement& operator*=(const FieldElement& rhs) {
    check_same(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
      *q *= rhs.rational();
    } else {
      auto& r = std::get<std::uint64_t>(value_);
      r = mul_mod(r, rhs.residue(), spec_.modulus());
    }
    return *this;
  }

  FieldElement& operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (auto* q = std::get_if<mpq_class>(&value_)) return FieldElement(Raw{}, spec_, mpq_class(1 / *q));
    return FieldElement(Raw{}, spec_, inv_mod(std::get<std::uint64_t>(value_), spec_.modulus()));
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

private:
  struct Raw {};
  FieldElement(Raw, FieldSpec spec, mpq_class q) : spec_(spec), value_(std::move(q)) {}
  FieldElement(Raw, FieldSpec spec, std::uint64_t residue) : spec_(spec), value_(residue) {}

  void check_same(const FieldElement& rhs) const {
    if (!(spec_ == rhs.spec_))
      throw FieldMismatch("cannot combine elements of " + spec_.to_string() + " and " +
                          rhs.spec_.to_string());
  }

  static std::uint64_t residue_of(const FieldSpec& spec, const mpz_class& value) {
    if (spec.is_rationals()) return 0;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), spec.modulus());
    return r.get_ui();
  }

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return (a * b) % p;  // a, b < p < 2^32
  }

  static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul_mod(result, base, p);
      base = mul_mod(base, base, p);
      e >>= 1;
    }
    return result;
  }

  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t> value_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

inline bool is_zero(const FieldElement& x) noexcept { return x.is_zero(); }

inline FieldElement pow(const FieldElement& x, std::uint64_t e) {
  auto result = FieldElement::one(x.spec());
  auto base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// The index-th nonzero element of a fixed enumeration: 1, 2, 3, ... over Q,
/// and 1, ..., p-1 over F_p. Past the end of a finite field this throws
/// Exhausted, which is how the search routines detect that an infinite
/// field was needed.
inline FieldElement enumerate_nonzero(const FieldSpec& spec, std::uint64_t index) {
  if (!spec.is_rationals() && index >= spec.modulus() - 1)
    throw Exhausted(spec.to_string() + " has only " + std::to_string(spec.modulus() - 1) +
                    " nonzero elements");
  if (index >= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
    throw Exhausted("enumeration index out of range");
  return FieldElement(spec, static_cast<long long>(index + 1));
}

/// Number of nonzero elements, or 0 for an infinite field.
inline std::uint64_t nonzero_count(const FieldSpec& spec) noexcept {
  return spec.is_rationals() ? 0 : spec.modulus() - 1;
}

}  // namespace krull
