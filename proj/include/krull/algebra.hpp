#pragma once

// Generic algorithms over a commutative ring with identity: dense univariate
// polynomials, the division-free characteristic polynomial det(t*I - M), and
// the reduction of powers a^i to the basis 1, a, ..., a^{d-1} given a monic
// relation for a^d.
//
// T only needs +, -, *, unary -, and an `is_zero` found by lookup. The
// identity element is passed explicitly since T may carry runtime context
// (a polynomial's ring, a residue's modulus).

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "krull/error.hpp"

namespace krull {

template <std::integral I>
constexpr bool is_zero(I x) noexcept {
  return x == 0;
}

inline bool is_zero(const mpz_class& x) noexcept { return sgn(x) == 0; }
inline bool is_zero(const mpq_class& x) noexcept { return sgn(x) == 0; }

template <class T>
concept CommutativeRing = std::copyable<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

/// Square matrix, row-major.
template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Dense univariate polynomial over T, coefficients in ascending order.
template <class T>
using Univariate = std::vector<T>;

namespace univariate {

template <CommutativeRing T>
Univariate<T> add(const Univariate<T>& a, const Univariate<T>& b) {
  const auto& longer = a.size() >= b.size() ? a : b;
  const auto& shorter = a.size() >= b.size() ? b : a;
  Univariate<T> r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = T(r[i] + shorter[i]);
  return r;
}

template <CommutativeRing T>
Univariate<T> negate(Univariate<T> a) {
  for (auto& c : a) c = T(-c);
  return a;
}

template <CommutativeRing T>
Univariate<T> multiply(const Univariate<T>& a, const Univariate<T>& b, const T& zero) {
  if (a.empty() || b.empty()) return {};
  Univariate<T> r(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      r[i + j] = T(r[i + j] + T(a[i] * b[j]));
    }
  }
  return r;
}

template <CommutativeRing T>
bool is_zero_poly(const Univariate<T>& a) {
  for (const auto& c : a)
    if (!is_zero(c)) return false;
  return true;
}

}  // namespace univariate

/// Largest matrix the characteristic polynomial routine accepts.
inline constexpr std::size_t kMaxActionDimension = 8;

/// det(t*I - M) by Laplace expansion along rows, memoized over the set of
/// columns still available (2^d subproblems, no division). Returned in
/// ascending order; it is monic of degree d.
template <CommutativeRing T>
Univariate<T> characteristic_polynomial(const Matrix<T>& m, const T& one) {
  const std::size_t d = m.size();
  if (d == 0) throw InvalidArgument("action matrix is empty");
  for (const auto& row : m)
    if (row.size() != d)
      throw InvalidArgument("action matrix is not square (" + std::to_string(d) + " rows, a row of " +
                            std::to_string(row.size()) + ")");
  if (d > kMaxActionDimension)
    throw InvalidArgument("action matrix dimension " + std::to_string(d) + " exceeds " +
                          std::to_string(kMaxActionDimension));
  const T zero = T(one - one);

  auto entry = [&](std::size_t i, std::size_t j) {
    Univariate<T> e{T(-m[i][j])};
    if (i == j) e.push_back(one);
    return e;
  };

  // minors[mask]: determinant of the last popcount(mask) rows restricted to
  // the columns in mask.
  const std::size_t full = (std::size_t{1} << d) - 1;
  std::vector<Univariate<T>> minors(full + 1);
  minors[0] = Univariate<T>{one};
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t row = d - static_cast<std::size_t>(std::popcount(mask));
    Univariate<T> acc;
    std::size_t position = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      auto e = entry(row, j);
      if (!univariate::is_zero_poly(e)) {
        auto term = univariate::multiply(e, minors[mask & ~(std::size_t{1} << j)], zero);
        acc = univariate::add(acc, position % 2 == 0 ? term : univariate::negate(std::move(term)));
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }

  auto p = std::move(minors[full]);
  p.resize(d + 1, zero);
  return p;
}

/// A monic polynomial (ascending coefficients) that annihilates an element
/// whose multiplication action on a finite generating set is known.
template <CommutativeRing T>
struct IntegralityWitness {
  Univariate<T> char_poly;

  std::size_t degree() const noexcept { return char_poly.size() - 1; }
};

/// If s * x_i = sum_j action[i][j] * x_j on generators x_1, ..., x_d, then
/// det(t*I - action) is monic of degree d and vanishes at s.
template <CommutativeRing T>
IntegralityWitness<T> integrality_witness_from_action(const Matrix<T>& action, const T& one) {
  return {characteristic_polynomial(action, one)};
}

template <CommutativeRing T>
Matrix<T> matrix_multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  const std::size_t d = a.size();
  Matrix<T> r(d, std::vector<T>(d, zero));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) r[i][j] = T(r[i][j] + T(a[i][k] * b[k][j]));
  return r;
}

/// p(M) by Horner's rule; Cayley-Hamilton says this is zero for the
/// characteristic polynomial.
template <CommutativeRing T>
Matrix<T> evaluate_at_matrix(const Univariate<T>& p, const Matrix<T>& m, const T& one) {
  const T zero = T(one - one);
  const std::size_t d = m.size();
  Matrix<T> acc(d, std::vector<T>(d, zero));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = matrix_multiply(acc, m, zero);
    for (std::size_t i = 0; i < d; ++i) acc[i][i] = T(acc[i][i] + *it);
  }
  return acc;
}

template <CommutativeRing T>
bool annihilates_action(const IntegralityWitness<T>& w, const Matrix<T>& action, const T& one) {
  for (const auto& row : evaluate_at_matrix(w.char_poly, action, one))
    for (const auto& x : row)
      if (!is_zero(x)) return false;
  return true;
}

/// Coefficients (r_0, ..., r_{d-1}) with a^i = sum_j r_j a^j.
template <class T>
struct ReductionCoefficients {
  std::vector<T> coeffs;

  friend bool operator==(const ReductionCoefficients&, const ReductionCoefficients&) = default;
};

/// Given the relation a^d = sum_j c_j a^j (relation.coeffs = c_0..c_{d-1}),
/// expresses a^i in the basis 1, a, ..., a^{d-1}. Multiplying by a shifts
/// the coordinates up and folds the overflow a^d back through the relation:
///   r'_0 = r_{d-1} c_0,  r'_j = r_{j-1} + r_{d-1} c_j.
template <CommutativeRing T>
ReductionCoefficients<T> power_reduce(const ReductionCoefficients<T>& relation, std::uint64_t i, const T& one) {
  const std::size_t d = relation.coeffs.size();
  if (d == 0) throw InvalidArgument("relation must have degree d >= 1");
  const T zero = T(one - one);
  std::vector<T> r(d, zero);
  if (i < d) {
    r[i] = one;
    return {std::move(r)};
  }
  r = relation.coeffs;
  for (std::uint64_t power = d; power < i; ++power) {
    const T top = r[d - 1];
    for (std::size_t j = d - 1; j >= 1; --j) r[j] = T(r[j - 1] + T(top * relation.coeffs[j]));
    r[0] = T(top * relation.coeffs[0]);
  }
  return {std::move(r)};
}

}  // namespace krull
