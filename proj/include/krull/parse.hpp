#pragma once

// Text format for polynomials.
//
//   expr     := term (("+" | "-") term)*
//   term     := ("-")? factor ("*" factor)*
//   factor   := atom ("^" nat)?
//   atom     := rational | varname | "(" expr ")"
//   rational := int ("/" posint)?
//   varname  := [A-Za-z][A-Za-z0-9]*
//
// Whitespace between tokens is ignored. Multiplication is always explicit.
// Exponents are capped at 2^31 - 1. Over F_p, `a/b` means a * b^-1 mod p.
//
// The canonical printer emits terms in graded-lex descending order joined by
// " + " / " - ", suppresses a unit coefficient on nonconstant monomials,
// writes `coef*var^e*var` otherwise, and prints "0" for the zero polynomial.
// Printing then parsing returns the same polynomial.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "krull/error.hpp"
#include "krull/field.hpp"
#include "krull/polynomial.hpp"

namespace krull {

/// A ring together with the names its variables are printed and parsed as.
class RingSpec {
public:
  RingSpec(FieldSpec field, std::vector<std::string> variables)
      : field_(field), variables_(std::move(variables)) {
    if (variables_.empty()) throw InvalidRingSpec("a ring needs at least one variable");
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (!is_valid_name(variables_[i]))
        throw InvalidRingSpec("invalid variable name '" + variables_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (variables_[j] == variables_[i])
          throw InvalidRingSpec("duplicate variable name '" + variables_[i] + "'");
    }
  }

  /// Variables t1, ..., tn.
  static RingSpec standard(FieldSpec field, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
    return RingSpec(field, std::move(names));
  }

  static RingSpec standard(const Ring& ring) { return standard(ring.field, ring.nvars); }

  /// `vars` is either a count ("3") or a comma-separated list of names.
  static RingSpec parse(std::string_view field, std::string_view vars) {
    auto spec = FieldSpec::parse(field);
    if (!vars.empty() && std::all_of(vars.begin(), vars.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      if (vars.size() > 6) throw InvalidRingSpec("too many variables");
      return standard(spec, std::stoul(std::string(vars)));
    }
    std::vector<std::string> names;
    std::size_t start = 0;
    while (true) {
      auto comma = vars.find(',', start);
      auto name = vars.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      names.emplace_back(trim(name));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return RingSpec(spec, std::move(names));
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::string& name(std::size_t var) const { return variables_.at(var); }
  Ring ring() const noexcept { return Ring{field_, variables_.size()}; }

  /// Index of `name`, or nvars() when absent.
  std::size_t index_of(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == name) return i;
    return variables_.size();
  }

  /// The subring on all variables but the last.
  RingSpec without_last() const {
    if (variables_.size() < 2) throw InvalidArgument("cannot drop the only variable");
    return RingSpec(field_, std::vector<std::string>(variables_.begin(), variables_.end() - 1));
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

  static bool is_valid_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 128;
    });
  }

private:
  static std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
  }

  FieldSpec field_;
  std::vector<std::string> variables_;
};

namespace detail {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, const RingSpec& spec) : text_(text), spec_(spec) {}

  Polynomial parse() {
    skip_space();
    auto result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character", {"'+'", "'-'", "'*'", "'^'", "end of input"});
    return result;
  }

private:
  Polynomial expr() {
    auto acc = term();
    while (true) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    skip_space();
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    }
    auto acc = factor();
    while (true) {
      skip_space();
      if (!peek('*')) break;
      ++pos_;
      acc *= factor();
    }
    return negate ? -acc : acc;
  }

  Polynomial factor() {
    auto base = atom();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    if (!is_digit()) fail("expected exponent", {"natural number"});
    auto start = pos_;
    std::uint64_t e = 0;
    while (is_digit()) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (e > kMaxExponent) {
        pos_ = start;
        fail("exponent exceeds 2^31 - 1", {});
      }
      ++pos_;
    }
    return pow(base, e);
  }

  Polynomial atom() {
    skip_space();
    const std::vector<std::string> expected{"number", "variable", "'('"};
    if (pos_ >= text_.size()) fail("unexpected end of input", expected);
    if (peek('(')) {
      if (++depth_ > kMaxDepth) fail("parentheses nested too deeply", {});
      ++pos_;
      auto inner = expr();
      --depth_;
      skip_space();
      if (!peek(')')) fail("unbalanced parenthesis", {"')'"});
      ++pos_;
      return inner;
    }
    if (is_digit()) return Polynomial::constant(spec_.ring(), rational());
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      auto start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) &&
             static_cast<unsigned char>(text_[pos_]) < 128)
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto var = spec_.index_of(name);
      if (var == spec_.nvars()) throw UnknownVariable(start, std::string(name));
      return Polynomial::variable(spec_.ring(), var);
    }
    fail("unexpected character", expected);
  }

  FieldElement rational() {
    auto num = integer();
    skip_space();
    if (!peek('/')) return FieldElement(spec_.field(), num);
    ++pos_;
    skip_space();
    if (!is_digit()) fail("expected denominator", {"positive integer"});
    auto den_pos = pos_;
    auto den = integer();
    if (den == 0) {
      pos_ = den_pos;
      fail("denominator must be positive", {"positive integer"});
    }
    try {
      return FieldElement(spec_.field(), num, den);
    } catch (const DivisionByZero&) {
      throw FieldLiteralError("at offset " + std::to_string(den_pos) + ": denominator " + den.get_str() +
                              " is not invertible in " + spec_.field().to_string());
    }
  }

  mpz_class integer() {
    auto start = pos_;
    while (is_digit()) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError(pos_, message, std::move(expected));
  }

  bool peek(char c) const noexcept { return pos_ < text_.size() && text_[pos_] == c; }
  bool is_digit() const noexcept { return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9'; }

  void skip_space() noexcept {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  static constexpr std::size_t kMaxDepth = 512;

  std::string_view text_;
  const RingSpec& spec_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RingSpec& spec) {
  return detail::PolynomialParser(text, spec).parse();
}

inline std::string format_polynomial(const Polynomial& f, const RingSpec& spec) {
  if (!(f.ring() == spec.ring())) throw RingMismatch("ring spec does not match the polynomial's ring");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    bool negative = c.is_negative();
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    auto magnitude = negative ? -c : c;
    std::string monomial;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += spec.name(j);
      if (e[j] > 1) monomial += "^" + std::to_string(e[j]);
    }
    if (monomial.empty())
      out += magnitude.to_string();
    else if (magnitude.is_one())
      out += monomial;
    else
      out += magnitude.to_string() + "*" + monomial;
  }
  return out;
}

/// Canonical text with the default names t1, ..., tn.
inline std::string format_polynomial(const Polynomial& f) {
  if (f.nvars() == 0) return f.is_zero() ? "0" : f.terms().begin()->second.to_string();
  return format_polynomial(f, RingSpec::standard(f.ring()));
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << format_polynomial(f); }

}  // namespace krull
