#pragma once

// Deterministic search for points where a polynomial does not vanish, and the
// linear change of coordinates t_j -> t_j + a_j t_n (j < n) that makes a
// polynomial monic in its last variable after scaling by lambda^-1.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "krull/error.hpp"
#include "krull/field.hpp"
#include "krull/polynomial.hpp"

namespace krull {

using Point = std::vector<FieldElement>;

namespace detail {

// Evaluates f at a point given for its first prefix.size() variables; the
// remaining variables must not occur in f.
inline FieldElement evaluate_prefix(const Polynomial& f, std::span<const FieldElement> prefix) {
  auto value = FieldElement::zero(f.field());
  for (const auto& [e, c] : f.terms()) {
    auto term = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (j >= prefix.size()) throw std::logic_error("evaluate_prefix: variable outside the prefix");
      term *= pow(prefix[j], e[j]);
    }
    value += term;
  }
  return value;
}

inline FieldElement horner(std::span<const FieldElement> coeffs, const FieldElement& x) {
  auto acc = FieldElement::zero(x.spec());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

using PointVisitor = std::function<bool(const Point&)>;

// Enumerates points of (F \ {0})^m where f (a polynomial in its first m
// variables) does not vanish, stopping as soon as `visit` returns true.
// Writing f = sum_j f_j t_m^j with f_d != 0, every point found for f_d
// turns f into a univariate polynomial of degree d in t_m, which has a
// nonzero value at one of any d + 1 distinct candidates. Over a finite field
// fewer candidates may exist and the branch is abandoned.
inline bool search_nonvanishing(const Polynomial& f, std::size_t m, const PointVisitor& visit) {
  if (m == 0) return !f.is_zero() && visit(Point{});
  auto coeffs = coefficients_in(f, m - 1);
  if (coeffs.empty()) return false;
  const std::size_t d = coeffs.size() - 1;
  const auto& field = f.field();
  std::uint64_t candidates = d + 1;
  if (auto available = nonzero_count(field); available != 0) candidates = std::min(candidates, available);

  return search_nonvanishing(coeffs.back(), m - 1, [&](const Point& prefix) {
    std::vector<FieldElement> univariate;
    univariate.reserve(coeffs.size());
    for (const auto& c : coeffs) univariate.push_back(evaluate_prefix(c, prefix));
    for (std::uint64_t idx = 0; idx < candidates; ++idx) {
      auto x = enumerate_nonzero(field, idx);
      if (horner(univariate, x).is_zero()) continue;
      Point point = prefix;
      point.push_back(x);
      if (visit(point)) return true;
    }
    return false;
  });
}

}  // namespace detail

/// A point with all coordinates nonzero at which f does not vanish. Over an
/// infinite field this always succeeds after at most prod_j (d_j + 1)
/// evaluations; over a finite field the candidate supply can run out, which
/// is reported as FieldTooSmall.
inline Point nonvanishing_point(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("the zero polynomial vanishes everywhere");
  std::optional<Point> found;
  detail::search_nonvanishing(f, f.nvars(), [&](const Point& p) {
    found = p;
    return true;
  });
  if (!found)
    throw FieldTooSmall("no nonvanishing point with nonzero coordinates among the candidates of " +
                        f.field().to_string());
  return *found;
}

/// For homogeneous f: a point (b_1, ..., b_{n-1}, 1) with all b_j nonzero and
/// f nonzero there, obtained by rescaling a nonvanishing point by a_n^-1.
inline Point nonvanishing_point_homogeneous(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("the zero polynomial vanishes everywhere");
  if (!is_homogeneous(f)) throw NotHomogeneous("polynomial is not homogeneous");
  const auto& field = f.field();
  if (f.nvars() <= 1) return Point(f.nvars(), FieldElement::one(field));

  auto a = nonvanishing_point(f);
  auto scale = a.back().inverse();
  Point b;
  b.reserve(a.size());
  for (std::size_t j = 0; j + 1 < a.size(); ++j) b.push_back(a[j] * scale);
  b.push_back(FieldElement::one(field));
  if (evaluate(f, b).is_zero()) throw std::logic_error("homogeneous rescaling produced a zero");
  return b;
}

/// The data (a_1, ..., a_{n-1}, lambda) of the coordinate change.
struct LinearSubstitution {
  std::vector<FieldElement> a;
  FieldElement lambda;

  /// Images t_j + a_j t_n (j < n) and t_n, in `ring`.
  std::vector<Polynomial> images(const Ring& ring) const {
    if (a.size() + 1 != ring.nvars) throw InvalidArgument("substitution does not match the ring");
    std::vector<Polynomial> out;
    out.reserve(ring.nvars);
    auto last = Polynomial::variable(ring, ring.nvars - 1);
    for (std::size_t j = 0; j < a.size(); ++j) out.push_back(Polynomial::variable(ring, j) + a[j] * last);
    out.push_back(last);
    return out;
  }
};

struct MonicizationResult {
  LinearSubstitution substitution;
  Polynomial g;       // lambda^-1 * f(t_1 + a_1 t_n, ..., t_{n-1} + a_{n-1} t_n, t_n)
  std::uint64_t degree;  // deg_{t_n} g = total degree of f
};

/// Makes f monic in its last variable. a comes from a nonvanishing point of
/// the leading form with last coordinate 1, and lambda is the leading form's
/// value there, which is exactly the t_n^d coefficient after substitution.
/// A nonzero constant f gives g = 1, degree 0, lambda = f.
inline MonicizationResult monicize(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("cannot monicize the zero polynomial");
  if (f.nvars() < 1) throw InvalidArgument("monicize needs at least one variable");
  const auto& ring = f.ring();
  auto form = leading_form(f);
  auto degree = *total_degree(f);

  auto point = nonvanishing_point_homogeneous(form);
  LinearSubstitution sub{Point(point.begin(), point.end() - 1), evaluate(form, point)};
  auto images = sub.images(ring);
  auto g = sub.lambda.inverse() * substitute(f, images);

  const std::size_t last = ring.nvars - 1;
  if (!is_monic_in(g, last) || degree_in(g, last) != degree)
    throw std::logic_error("monicize: substitution did not produce a monic polynomial");
  return {std::move(sub), std::move(g), degree};
}

}  // namespace krull
