#pragma once

// JSON documents for the structured results. Field elements and polynomials
// are written as strings in the canonical text format so nothing is lost to
// floating point; readers parse them back against a RingSpec.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "krull/algebra.hpp"
#include "krull/chains.hpp"
#include "krull/error.hpp"
#include "krull/field.hpp"
#include "krull/integral.hpp"
#include "krull/normalize.hpp"
#include "krull/parse.hpp"
#include "krull/polynomial.hpp"

namespace krull::json {

using Json = nlohmann::ordered_json;

/// Field element from its printed form ("-3/4", "5").
inline FieldElement parse_element(const std::string& text, const FieldSpec& field) {
  auto f = parse_polynomial(text, RingSpec::standard(field, 1));
  if (f.is_zero()) return FieldElement::zero(field);
  if (f.term_count() != 1 || total_degree(f) != 0) throw InvalidArgument("not a field element: '" + text + "'");
  return f.terms().begin()->second;
}

inline Json polynomials(const std::vector<Polynomial>& ps, const RingSpec& spec) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(format_polynomial(p, spec));
  return out;
}

inline std::vector<Polynomial> read_polynomials(const Json& j, const RingSpec& spec) {
  std::vector<Polynomial> out;
  for (const auto& x : j) out.push_back(parse_polynomial(x.get<std::string>(), spec));
  return out;
}

inline Json matrix(const Matrix<Polynomial>& m, const RingSpec& spec) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(polynomials(row, spec));
  return out;
}

// monicize

inline Json to_json(const MonicizationResult& r, const RingSpec& spec) {
  Json a = Json::array();
  for (const auto& x : r.substitution.a) a.push_back(x.to_string());
  return Json{{"a", a},
              {"lambda", r.substitution.lambda.to_string()},
              {"g", format_polynomial(r.g, spec)},
              {"degree", r.degree}};
}

inline MonicizationResult monicization_from_json(const Json& j, const RingSpec& spec) {
  std::vector<FieldElement> a;
  for (const auto& x : j.at("a")) a.push_back(parse_element(x.get<std::string>(), spec.field()));
  return {LinearSubstitution{std::move(a), parse_element(j.at("lambda").get<std::string>(), spec.field())},
          parse_polynomial(j.at("g").get<std::string>(), spec), j.at("degree").get<std::uint64_t>()};
}

// chain-verify

inline Json to_json(const ChainReport& r, const RingSpec& spec, std::uint64_t seed) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json level{{"level", l.level},
               {"witness", format_polynomial(l.witness, spec)},
               {"in_upper", l.in_upper},
               {"in_lower", l.in_lower},
               {"product_checks_passed", l.product_checks_passed},
               {"product_checks_run", l.product_checks_run}};
    if (l.counterexample)
      level["counterexample"] = {{"g", format_polynomial(l.counterexample->g, spec)},
                                 {"h", format_polynomial(l.counterexample->h, spec)}};
    levels.push_back(std::move(level));
  }
  return Json{{"accepted", r.accepted()},
              {"field", spec.field().to_string()},
              {"variables", spec.variables()},
              {"seed", seed},
              {"proper", r.proper},
              {"zero_ideal_checks_passed", r.zero_ideal_checks_passed},
              {"zero_ideal_checks_run", r.zero_ideal_checks_run},
              {"levels", levels}};
}

inline ChainReport chain_report_from_json(const Json& j, const RingSpec& spec) {
  ChainReport r{spec.ring(), false, 0, 0, {}};
  r.proper = j.at("proper").get<bool>();
  r.zero_ideal_checks_passed = j.at("zero_ideal_checks_passed").get<std::size_t>();
  r.zero_ideal_checks_run = j.at("zero_ideal_checks_run").get<std::size_t>();
  for (const auto& l : j.at("levels")) {
    ChainLevel level{l.at("level").get<std::size_t>(), parse_polynomial(l.at("witness").get<std::string>(), spec),
                     l.at("in_upper").get<bool>(), l.at("in_lower").get<bool>(),
                     l.at("product_checks_run").get<std::size_t>(),
                     l.at("product_checks_passed").get<std::size_t>(), std::nullopt};
    if (l.contains("counterexample"))
      level.counterexample = ProductCounterexample{
          parse_polynomial(l["counterexample"].at("g").get<std::string>(), spec),
          parse_polynomial(l["counterexample"].at("h").get<std::string>(), spec)};
    r.levels.push_back(std::move(level));
  }
  return r;
}

// witness

/// A witness read back from JSON. `element` is the residue text for coset
/// witnesses, or the action matrix for matrix witnesses.
struct WitnessDocument {
  std::vector<Polynomial> char_poly;
  Json element;
  std::string check;
};

inline Json to_json(const CosetIntegralityWitness& w, const RingSpec& spec) {
  return Json{{"char_poly", polynomials(w.witness.char_poly, spec)},
              {"element", format_polynomial(w.element.residue(), spec)},
              {"generator", format_polynomial(w.element.generator().polynomial(), spec)},
              {"check", w.annihilates() ? "zero" : "nonzero"}};
}

inline Json to_json(const IntegralityWitness<Polynomial>& w, const Matrix<Polynomial>& action, const RingSpec& spec) {
  auto one = Polynomial::constant(spec.ring(), 1);
  return Json{{"char_poly", polynomials(w.char_poly, spec)},
              {"element", matrix(action, spec)},
              {"check", annihilates_action(w, action, one) ? "zero" : "nonzero"}};
}

inline WitnessDocument witness_from_json(const Json& j, const RingSpec& spec) {
  return {read_polynomials(j.at("char_poly"), spec), j.at("element"), j.at("check").get<std::string>()};
}

// contract-witness

inline Json to_json(const ContractionWitness& w, const RingSpec& spec) {
  const auto& g = w.cofactor.generator();
  return Json{{"c0", format_polynomial(w.c0, spec)},
              {"cofactor", format_polynomial(w.cofactor.residue(), spec)},
              {"char_poly", polynomials(w.char_poly, spec)},
              {"stripped_power", w.stripped_power},
              {"generator", format_polynomial(g.polynomial(), spec)}};
}

/// Adds "check" after verifying f * w = c0 mod g.
inline Json to_json(const ContractionWitness& w, const Polynomial& f, const RingSpec& spec) {
  auto j = to_json(w, spec);
  const auto& g = w.cofactor.generator();
  j["check"] = reduce(f * w.cofactor.residue() - w.c0, g).is_zero() ? "zero" : "nonzero";
  return j;
}

inline ContractionWitness contraction_from_json(const Json& j, const RingSpec& spec) {
  MonicGenerator g(parse_polynomial(j.at("generator").get<std::string>(), spec));
  return {parse_polynomial(j.at("c0").get<std::string>(), spec),
          QuotientElement(g, parse_polynomial(j.at("cofactor").get<std::string>(), spec)),
          read_polynomials(j.at("char_poly"), spec), j.at("stripped_power").get<std::size_t>()};
}

}  // namespace krull::json
