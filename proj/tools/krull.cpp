// krull: command-line front end. One command per process; results go to
// stdout as canonical text or a JSON document, errors to stderr as
// "error: <Id>: message".
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krull/json.hpp"
#include "krull/krull.hpp"

namespace {

using krull::json::Json;

struct Options {
  std::string vars;
  std::string field = "Q";
  bool json = false;
  std::uint64_t seed = krull::kDefaultSeed;
  std::optional<std::size_t> k;
  std::vector<std::string> polys;

  // command specific
  std::string at;
  std::string in;
  std::optional<std::uint64_t> component;
  bool leading = false;
  bool homogeneous = false;
  std::size_t checks = 1000;
  std::string matrix;
  std::string relation;
  std::uint64_t power = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

class Runner {
public:
  explicit Runner(const Options& o) : o_(o), spec_(krull::RingSpec::parse(o.field, o.vars)) {}

  krull::Polynomial poly(std::size_t i) const { return krull::parse_polynomial(o_.polys.at(i), spec_); }
  std::string text(const krull::Polynomial& f) const { return krull::format_polynomial(f, spec_); }

  std::size_t k() const {
    if (!o_.k) throw krull::InvalidArgument("this command needs -k");
    return *o_.k;
  }

  krull::MonicGenerator generator(std::size_t i) const { return krull::MonicGenerator(poly(i)); }

  void emit(const Json& j) const { std::cout << j.dump(2) << "\n"; }

  // Text mode prints `text`; --json prints `j`.
  void emit(const std::string& text, const Json& j) const {
    if (o_.json)
      emit(j);
    else
      std::cout << text << "\n";
  }

  int eval() const {
    auto f = poly(0);
    std::vector<krull::FieldElement> point;
    for (const auto& x : split(o_.at, ',')) point.push_back(krull::json::parse_element(x, spec_.field()));
    if (point.size() != spec_.nvars())
      throw krull::InvalidArgument("--at needs " + std::to_string(spec_.nvars()) + " coordinates");
    auto value = krull::evaluate(f, point).to_string();
    emit(value, Json{{"value", value}});
    return 0;
  }

  int degree() const {
    auto f = poly(0);
    krull::Degree d;
    if (o_.in.empty()) {
      d = krull::total_degree(f);
    } else {
      auto var = spec_.index_of(o_.in);
      if (var == spec_.nvars()) throw krull::InvalidArgument("unknown variable '" + o_.in + "'");
      d = krull::degree_in(f, var);
    }
    emit(d ? std::to_string(*d) : "undefined", Json{{"degree", d ? Json(*d) : Json(nullptr)}});
    return 0;
  }

  int homog() const {
    auto f = poly(0);
    if (o_.component) {
      auto c = text(krull::homogeneous_component(f, *o_.component));
      emit(c, Json{{"degree", *o_.component}, {"component", c}});
    } else if (o_.leading) {
      auto c = text(krull::leading_form(f));
      emit(c, Json{{"leading_form", c}});
    } else {
      bool h = krull::is_homogeneous(f);
      emit(h ? "true" : "false", Json{{"homogeneous", h}});
    }
    return 0;
  }

  int split_cmd() const {
    auto parts = krull::split_by_support(poly(0), k());
    auto f1 = text(parts.f1), f2 = text(parts.f2);
    emit("f1 = " + f1 + "\nf2 = " + f2, Json{{"f1", f1}, {"f2", f2}});
    return 0;
  }

  int member() const {
    bool m = krull::member(poly(0), krull::MonomialPrimeIdeal(spec_.ring(), k()));
    emit(m ? "true" : "false", Json{{"member", m}});
    return 0;
  }

  int minpow() const {
    auto r = krull::extract_min_power(poly(0), k());
    auto f1 = text(r.f1), h = text(r.h);
    emit("ell = " + std::to_string(r.ell) + "\nf1 = " + f1 + "\nh = " + h,
         Json{{"ell", r.ell}, {"f1", f1}, {"h", h}});
    return 0;
  }

  int chain_verify() const {
    krull::ChainCheckOptions opts;
    opts.product_checks_per_level = o_.checks;
    opts.seed = o_.seed;
    auto report = krull::verify_chain(spec_.ring(), opts);
    emit(krull::json::to_json(report, spec_, o_.seed));
    return report.accepted() ? 0 : 1;
  }

  int nonvanish() const {
    auto f = poly(0);
    auto point = o_.homogeneous ? krull::nonvanishing_point_homogeneous(f) : krull::nonvanishing_point(f);
    std::vector<std::string> coords;
    for (const auto& x : point) coords.push_back(x.to_string());
    auto value = krull::evaluate(f, point).to_string();
    emit("point = (" + join(coords, ", ") + ")\nvalue = " + value, Json{{"point", coords}, {"value", value}});
    return 0;
  }

  int monicize() const {
    emit(krull::json::to_json(krull::monicize(poly(0)), spec_));
    return 0;
  }

  int divide() const {
    auto r = krull::divide_monic(poly(0), generator(1));
    auto q = text(r.q), rem = text(r.r);
    emit("q = " + q + "\nr = " + rem, Json{{"q", q}, {"r", rem}});
    return 0;
  }

  int pmember() const {
    bool m = krull::principal_member(poly(0), generator(1));
    emit(m ? "true" : "false", Json{{"member", m}});
    return 0;
  }

  int witness() const {
    if (!o_.matrix.empty()) {
      if (!o_.polys.empty()) throw krull::InvalidArgument("give either --matrix or polynomials, not both");
      krull::Matrix<krull::Polynomial> m;
      for (const auto& row : split(o_.matrix, ';')) {
        m.emplace_back();
        for (const auto& x : split(row, ',')) m.back().push_back(krull::parse_polynomial(x, spec_));
      }
      auto w = krull::integrality_witness_from_action(m, krull::Polynomial::constant(spec_.ring(), 1));
      emit(krull::json::to_json(w, m, spec_));
      return 0;
    }
    if (o_.polys.size() != 2) throw krull::InvalidArgument("witness needs f and g, or --matrix");
    emit(krull::json::to_json(krull::integrality_witness(poly(0), generator(1)), spec_));
    return 0;
  }

  int power_reduce() const {
    if (o_.relation.empty()) throw krull::InvalidArgument("power-reduce needs --relation");
    krull::ReductionCoefficients<krull::Polynomial> relation;
    for (const auto& x : split(o_.relation, ',')) relation.coeffs.push_back(krull::parse_polynomial(x, spec_));
    auto r = krull::power_reduce(relation, o_.power, krull::Polynomial::constant(spec_.ring(), 1));
    std::vector<std::string> coeffs;
    for (const auto& c : r.coeffs) coeffs.push_back(text(c));
    emit(join(coeffs, ", "), Json{{"i", o_.power}, {"coeffs", coeffs}});
    return 0;
  }

  int contract_witness() const {
    auto f = poly(0);
    emit(krull::json::to_json(krull::contraction_witness(f, generator(1)), f, spec_));
    return 0;
  }

private:
  const Options& o_;
  krull::RingSpec spec_;
};

struct Command {
  const char* name;
  const char* help;
  std::size_t min_polys;
  std::size_t max_polys;
  int (Runner::*run)() const;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial-ring toolkit: prime ideal chains, normalization and integrality witnesses"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const std::vector<Command> commands{
      {"eval", "Evaluate f at a point", 1, 1, &Runner::eval},
      {"degree", "Total degree of f, or its degree in one variable", 1, 1, &Runner::degree},
      {"homog", "Homogeneity test, homogeneous component or leading form", 1, 1, &Runner::homog},
      {"split", "Split f into the part in P_k and the rest", 1, 1, &Runner::split_cmd},
      {"member", "Membership of f in P_k = <t1, ..., tk>", 1, 1, &Runner::member},
      {"minpow", "Write f in P_k \\ P_{k-1} as f1 + tk^ell * h", 1, 1, &Runner::minpow},
      {"chain-verify", "Check the prime chain P_0 < P_1 < ... < P_n", 0, 0, &Runner::chain_verify},
      {"nonvanish", "Point with nonzero coordinates where f does not vanish", 1, 1, &Runner::nonvanish},
      {"monicize", "Linear change of coordinates making f monic in the last variable", 1, 1, &Runner::monicize},
      {"divide", "Divide f by g, monic in the last variable", 2, 2, &Runner::divide},
      {"pmember", "Membership of f in <g>, g monic in the last variable", 2, 2, &Runner::pmember},
      {"witness", "Characteristic polynomial of the coset f + <g>, or of an action matrix", 0, 2, &Runner::witness},
      {"power-reduce", "Reduce a^i given a^d = c_0 + c_1 a + ... + c_{d-1} a^{d-1}", 0, 0, &Runner::power_reduce},
      {"contract-witness", "Nonzero c0 free of the last variable with f*w = c0 mod g", 2, 2,
       &Runner::contract_witness},
  };

  Options o;
  const Command* chosen = nullptr;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    bool optional_vars = std::string(cmd.name) == "power-reduce" || std::string(cmd.name) == "witness";
    auto* vars = sub->add_option("--vars", o.vars, "Variable count or comma-separated names");
    if (optional_vars)
      vars->default_val("1");
    else
      vars->required();
    sub->add_option("--field", o.field, "Q or F<p> for a prime p")->default_val("Q");
    sub->add_flag("--json", o.json, "Print a JSON document");
    sub->add_option("--seed", o.seed, "Seed for randomized checks")->default_val(krull::kDefaultSeed);
    if (cmd.max_polys > 0) {
      auto* polys = sub->add_option("polynomials", o.polys, cmd.max_polys == 1 ? "f" : "f g");
      polys->expected(static_cast<int>(cmd.min_polys), static_cast<int>(cmd.max_polys));
      if (cmd.min_polys > 0) polys->required();
    }

    std::string name = cmd.name;
    if (name == "split" || name == "member" || name == "minpow") sub->add_option("-k", o.k, "Ideal index")->required();
    if (name == "eval") sub->add_option("--at", o.at, "Comma-separated coordinates")->required();
    if (name == "degree") sub->add_option("--in", o.in, "Variable name");
    if (name == "homog") {
      auto* d = sub->add_option("-d,--component", o.component, "Homogeneous component of this degree");
      sub->add_flag("--leading", o.leading, "Leading form")->excludes(d);
    }
    if (name == "chain-verify") sub->add_option("--checks", o.checks, "Product checks per level")->default_val(1000);
    if (name == "nonvanish") sub->add_flag("--homogeneous", o.homogeneous, "Rescale so the last coordinate is 1");
    if (name == "witness") sub->add_option("--matrix", o.matrix, "Action matrix, rows ';' entries ','");
    if (name == "power-reduce") {
      sub->add_option("--relation", o.relation, "c_0,...,c_{d-1}")->required();
      sub->add_option("-i", o.power, "Exponent")->required();
    }
    sub->callback([&chosen, &cmd] { chosen = &cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << e.what() << "\n";
    return 2;
  }

  try {
    Runner runner(o);
    return (runner.*(chosen->run))();
  } catch (const krull::Error& e) {
    std::cerr << "error: " << e.id() << ": " << e.what() << "\n";
    return e.is_usage_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
}
