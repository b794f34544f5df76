#pragma once

// Arithmetic in R / <g> for g monic in the last variable t_n, with
// R' = F[t_1, ..., t_{n-1}] as the base ring: division with remainder,
// principal-ideal membership, the multiplication action of a coset on the
// basis 1, t_n, ..., t_n^{d-1}, its characteristic polynomial as an
// integrality witness, and a nonzero element of R' in the ideal generated
// by a nonzero coset.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "krull/algebra.hpp"
#include "krull/error.hpp"
#include "krull/polynomial.hpp"

namespace krull {

/// g = t_n^d + sum_{i<d} c_i t_n^i with every c_i free of t_n and d >= 1.
class MonicGenerator {
public:
  explicit MonicGenerator(Polynomial g) : g_(std::move(g)) {
    if (g_.nvars() < 1) throw InvalidArgument("generator needs at least one variable");
    coeffs_ = coefficients_in(g_, last_var());
    if (coeffs_.size() < 2) throw NotMonic("generator must have degree >= 1 in the last variable");
    const auto& lead = coeffs_.back();
    if (lead.term_count() != 1 || !(lead == Polynomial::constant(g_.ring(), 1)))
      throw NotMonic("leading coefficient in the last variable is not 1");
    coeffs_.pop_back();
  }

  const Polynomial& polynomial() const noexcept { return g_; }
  const Ring& ring() const noexcept { return g_.ring(); }
  std::size_t last_var() const noexcept { return g_.nvars() - 1; }
  std::size_t degree() const noexcept { return coeffs_.size(); }
  /// c_i for i < d.
  const Polynomial& coefficient(std::size_t i) const { return coeffs_.at(i); }

  friend bool operator==(const MonicGenerator& a, const MonicGenerator& b) { return a.g_ == b.g_; }

private:
  Polynomial g_;
  std::vector<Polynomial> coeffs_;
};

struct MonicDivision {
  Polynomial q;
  Polynomial r;
};

/// f = q*g + r with deg_{t_n} r < d, by long division on the coefficients of
/// f in t_n. No field division is needed since g is monic.
inline MonicDivision divide_monic(const Polynomial& f, const MonicGenerator& g) {
  f.check_ring(g.polynomial());
  const auto var = g.last_var();
  const auto d = g.degree();
  auto coeffs = coefficients_in(f, var);
  if (coeffs.size() <= d) return {Polynomial(f.ring()), f};

  std::vector<Polynomial> quotient(coeffs.size() - d, Polynomial(f.ring()));
  for (std::size_t e = coeffs.size() - 1; e >= d; --e) {
    if (!coeffs[e].is_zero()) {
      const auto c = coeffs[e];
      quotient[e - d] = c;
      for (std::size_t i = 0; i < d; ++i) coeffs[e - d + i] -= c * g.coefficient(i);
      coeffs[e] = Polynomial(f.ring());
    }
    if (e == d) break;
  }
  coeffs.resize(d, Polynomial(f.ring()));
  return {from_coefficients_in(f.ring(), var, quotient), from_coefficients_in(f.ring(), var, coeffs)};
}

inline Polynomial reduce(const Polynomial& f, const MonicGenerator& g) { return divide_monic(f, g).r; }

/// f in <g>.
inline bool principal_member(const Polynomial& f, const MonicGenerator& g) { return reduce(f, g).is_zero(); }

/// R' meets <g> only in 0: a nonzero element free of t_n is its own
/// remainder. False would mean division is broken.
inline bool subring_intersection_trivial(const MonicGenerator& g, const Polynomial& f) {
  f.check_ring(g.polynomial());
  if (degree_in(f, g.last_var()).value_or(0) != 0)
    throw PreconditionViolated("polynomial must not involve the last variable");
  return f.is_zero() || !principal_member(f, g);
}

/// A coset f + <g>, stored as its remainder.
class QuotientElement {
public:
  QuotientElement(MonicGenerator g, const Polynomial& f) : g_(std::move(g)), residue_(reduce(f, g_)) {}

  const MonicGenerator& generator() const noexcept { return g_; }
  const Polynomial& residue() const noexcept { return residue_; }
  bool is_zero() const noexcept { return residue_.is_zero(); }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    a.check(b);
    return {a.g_, a.residue_ + b.residue_};
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    a.check(b);
    return {a.g_, a.residue_ - b.residue_};
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    a.check(b);
    return {a.g_, a.residue_ * b.residue_};
  }
  QuotientElement operator-() const { return {g_, -residue_}; }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.g_ == b.g_ && a.residue_ == b.residue_;
  }

private:
  void check(const QuotientElement& other) const {
    if (!(g_ == other.g_)) throw RingMismatch("cosets of different quotient rings");
  }

  MonicGenerator g_;
  Polynomial residue_;
};

inline bool is_zero(const QuotientElement& x) noexcept { return x.is_zero(); }

/// Row i: coordinates of f * t_n^i mod g in the basis 1, t_n, ..., t_n^{d-1}.
inline Matrix<Polynomial> coset_action_matrix(const Polynomial& f, const MonicGenerator& g) {
  f.check_ring(g.polynomial());
  const auto d = g.degree();
  const auto var = g.last_var();
  const auto tn = Polynomial::variable(g.ring(), var);
  Matrix<Polynomial> m;
  m.reserve(d);
  auto row = reduce(f, g);
  for (std::size_t i = 0; i < d; ++i) {
    if (i > 0) row = reduce(row * tn, g);
    auto coords = coefficients_in(row, var);
    coords.resize(d, Polynomial(g.ring()));
    m.push_back(std::move(coords));
  }
  return m;
}

/// p(f) mod g for p with coefficients in R'.
inline Polynomial evaluate_mod(const Univariate<Polynomial>& p, const Polynomial& f, const MonicGenerator& g) {
  Polynomial acc(g.ring());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = reduce(acc * f + *it, g);
  return acc;
}

/// The characteristic polynomial of the action of f + <g> together with the
/// coset it annihilates.
struct CosetIntegralityWitness {
  IntegralityWitness<Polynomial> witness;
  QuotientElement element;

  /// Cayley-Hamilton: p(f) is 0 in R / <g>.
  bool annihilates() const {
    return evaluate_mod(witness.char_poly, element.residue(), element.generator()).is_zero();
  }
};

inline CosetIntegralityWitness integrality_witness(const Polynomial& f, const MonicGenerator& g) {
  auto action = coset_action_matrix(f, g);
  return {integrality_witness_from_action(action, Polynomial::constant(g.ring(), 1)), QuotientElement(g, f)};
}

struct ContractionWitness {
  Polynomial c0;            // nonzero, in R' and in <f, g>
  QuotientElement cofactor;  // w with f*w = c0 mod g
  Univariate<Polynomial> char_poly;
  std::size_t stripped_power = 0;  // e with char_poly = t^e * q
};

/// For a nonzero coset f, writes the characteristic polynomial as t^e * q
/// with q(0) != 0. If q(f) = 0 then
///   c0 = q(0) = -f (f^{m-1} + q_{m-1} f^{m-2} + ... + q_1),
/// so w = -(f^{m-1} + ... + q_1) satisfies f*w = c0. When e = 0 this is
/// Cayley-Hamilton; otherwise q(f) = 0 is checked, and fails exactly when f
/// is a zero divisor in R / <g>.
inline ContractionWitness contraction_witness(const Polynomial& f, const MonicGenerator& g) {
  QuotientElement coset(g, f);
  if (coset.is_zero()) throw ZeroCoset("f is zero modulo g");

  auto p = characteristic_polynomial(coset_action_matrix(f, g), Polynomial::constant(g.ring(), 1));
  std::size_t e = 0;
  while (e < p.size() && p[e].is_zero()) ++e;
  if (e + 1 >= p.size()) throw DegenerateCharPoly("characteristic polynomial is a pure power of t");
  Univariate<Polynomial> q(p.begin() + static_cast<std::ptrdiff_t>(e), p.end());
  const auto& residue = coset.residue();
  if (e > 0 && !evaluate_mod(q, residue, g).is_zero())
    throw DegenerateCharPoly("f is a zero divisor modulo g; t^" + std::to_string(e) +
                             " cannot be stripped from its characteristic polynomial");

  Polynomial acc(g.ring());
  for (std::size_t i = q.size() - 1; i >= 1; --i) acc = reduce(acc * residue + q[i], g);
  QuotientElement w(g, -acc);
  auto c0 = q[0];
  if (!reduce(residue * w.residue() - c0, g).is_zero())
    throw std::logic_error("contraction witness does not satisfy f*w = c0");
  return {std::move(c0), std::move(w), std::move(p), e};
}

}  // namespace krull
