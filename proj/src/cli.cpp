#include "powmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "powmat/census.hpp"
#include "powmat/dynamics.hpp"
#include "powmat/format.hpp"
#include "powmat/power_matrix.hpp"
#include "powmat/selftest.hpp"

namespace powmat {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string field = "";
  std::string modulus;
  std::string poly;
  std::string with;
  std::string value;
  std::string seed;
  std::string a = "0";
  std::string b = "1";
  std::size_t samples = 100;
  std::uint64_t size_cap = 0;
  bool json = false;
  bool pretty = false;
  bool inject_fault = false;
};

std::uint64_t resolve_size_cap(const Options& o) {
  if (o.size_cap != 0) return o.size_cap;
  if (const char* env = std::getenv("POWMAT_SIZE_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 2) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("POWMAT_SIZE_CAP must be an integer >= 2");
  }
  return kDefaultSizeCap;
}

Field make_field(const Options& o) {
  const FieldSpec spec = parse_field_spec(o.field);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!o.modulus.empty()) modulus = parse_modulus(o.modulus);
  return FieldCtx::create(spec.p, spec.n, modulus, resolve_size_cap(o));
}

Json elems_json(std::span<const Elem> v) {
  Json arr = Json::array();
  for (Elem e : v) arr.push_back(e.value);
  return arr;
}

std::string elems_text(const FieldCtx& F, std::span<const Elem> v, bool pretty) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_element(F, v[i], pretty);
  }
  return out;
}

Json envelope(const std::string& command, const Field& field) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["field"] = {{"p", field->p()}, {"n", field->n()}, {"q", field->q()}};
  if (field->n() > 1) j["field"]["modulus"] = field->modulus();
  return j;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void run(const std::string& command) {
    const Field field = make_field(o_);
    if (command == "selftest") return selftest(field);
    const ParsedPoly parsed = parse_poly(field, o_.poly);
    const ReducedPoly& f = parsed.poly;
    Json j = envelope(command, field);
    j["poly"] = format_poly(f, parsed.format);

    if (command == "matrix") {
      const Matrix a = build_direct(f);
      if (!o_.json) {
        out_ << format_matrix(a, o_.pretty);
        return;
      }
      Json rows = Json::array();
      for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(elems_json(a.row(i)));
      j["matrix"] = rows;
    } else if (command == "rank") {
      const auto r = rank(build_direct(f));
      if (!o_.json) return text(std::to_string(r));
      j["rank"] = r;
    } else if (command == "census") {
      census(f, j);
      if (!o_.json) return;
    } else if (command == "count") {
      const Elem c = parse_element(field, o_.value);
      const auto k = konig_rados_count(f, c);
      if (!o_.json) {
        return text("nonzero_solutions: " + std::to_string(k.nonzero_solutions) +
                    "\nmultiplicity: " + std::to_string(k.multiplicity) +
                    "\ncirculant_rank: " + std::to_string(k.circulant_rank));
      }
      j["value"] = c.value;
      j["nonzero_solutions"] = k.nonzero_solutions;
      j["multiplicity"] = k.multiplicity;
      j["circulant_rank"] = k.circulant_rank;
    } else if (command == "is-perm") {
      const bool by_row = hermite_last_row(build_direct(f));
      if (!o_.json) return text(by_row ? "true" : "false");
      j["is_permutation"] = by_row;
      j["last_row"] = elems_json(build_direct(f).row(field->q() - 1));
    } else if (command == "invert") {
      const Matrix inv = inverse_via_conjugation(build_direct(f));
      const std::string g = format_poly(column_poly(inv, 1), parsed.format);
      if (!o_.json) return text(g);
      j["inverse"] = g;
    } else if (command == "compose") {
      const ParsedPoly g = parse_poly(field, o_.with);
      const std::string h = format_poly(compose(g.poly, f), parsed.format);
      if (!o_.json) return text(h);
      j["with"] = format_poly(g.poly, g.format);
      j["composition"] = h;
    } else if (command == "cycles") {
      const auto dec = cycle_decomposition(build_graph(f));
      if (!o_.json) {
        std::string s;
        for (const auto& c : dec.cycles) s += "(" + elems_text(*field, c, o_.pretty) + ")\n";
        s += "leaves: " + elems_text(*field, dec.leaves, o_.pretty);
        return text(s);
      }
      Json cycles = Json::array();
      for (const auto& c : dec.cycles) cycles.push_back(elems_json(c));
      j["cycles"] = cycles;
      j["lengths"] = dec.lengths();
      j["leaves"] = elems_json(dec.leaves);
    } else if (command == "period") {
      const Elem seed = parse_element(field, o_.seed);
      const auto s = sequence_period(f, seed);
      if (!o_.json) {
        return text("preperiod: " + std::to_string(s.preperiod) + "\nperiod: " + std::to_string(s.period));
      }
      j["seed"] = seed.value;
      j["preperiod"] = s.preperiod;
      j["period"] = s.period;
    } else if (command == "order") {
      const auto t = matrix_order(f);
      if (!o_.json) return text(std::to_string(t));
      j["order"] = t;
    } else if (command == "diagonalize") {
      diagonalize_cmd(f, j);
      if (!o_.json) return;
    } else if (command == "commute") {
      const Elem a = parse_element(field, o_.a), b = parse_element(field, o_.b);
      const bool c = commutes_with_linear(f, a, b);
      if (!o_.json) return text(c ? "true" : "false");
      j["a"] = a.value;
      j["b"] = b.value;
      j["commutes"] = c;
    }
    out_ << j.dump() << '\n';
  }

 private:
  void text(const std::string& s) { out_ << s << '\n'; }

  void census(const ReducedPoly& f, Json& j) {
    const auto c = census_brute(f);
    std::optional<bool> mvs;
    try {
      mvs = minimum_value_set_check(f).is_minimum_value_set;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegreeZero) throw;
    }
    const auto gap = das_mullen_bound(f);
    if (o_.json) {
      j["size"] = c.size;
      Json mult = Json::object();
      for (std::size_t v = 0; v < c.multiplicity.size(); ++v) {
        if (c.multiplicity[v] > 0) mult[std::to_string(v)] = c.multiplicity[v];
      }
      j["multiplicity"] = mult;
      j["min_value_set"] = mvs ? Json(*mvs) : Json(nullptr);
      j["gap_bound"] = gap.gaps.max_gap;
      j["gap_bound_holds"] = gap.holds;
      return;
    }
    out_ << "size: " << c.size << '\n' << "multiplicity:\n";
    for (std::size_t v = 0; v < c.multiplicity.size(); ++v) {
      if (c.multiplicity[v] > 0) {
        out_ << "  " << format_element(*f.field(), Elem{static_cast<std::uint32_t>(v)}, o_.pretty)
             << ": " << c.multiplicity[v] << '\n';
      }
    }
    out_ << "min_value_set: " << (mvs ? (*mvs ? "true" : "false") : "n/a") << '\n';
    out_ << "L_f: " << gap.gaps.max_gap << " (bound " << gap.bound
         << (gap.holds ? ", holds" : ", violated") << ")\n";
  }

  void diagonalize_cmd(const ReducedPoly& f, Json& j) {
    const auto d = diagonalize(f);
    const FieldCtx& K = *d.extension.embedding.ext;
    const auto eig = d.eigenvalues();
    if (o_.json) {
      j["m"] = d.extension.degree;
      j["extension_modulus"] = K.n() > 1 ? Json(K.modulus()) : Json(nullptr);
      j["eigenvalues"] = elems_json(eig);
      j["diagonalizable"] = d.diagonalizable;
      return;
    }
    out_ << "m: " << d.extension.degree << '\n';
    out_ << "extension: F_" << K.q();
    if (K.n() > 1) {
      out_ << " modulus ";
      for (std::size_t i = 0; i < K.modulus().size(); ++i) out_ << (i ? "," : "") << K.modulus()[i];
    }
    out_ << '\n' << "eigenvalues: " << elems_text(K, eig, o_.pretty) << '\n';
    out_ << "diagonalizable: " << (d.diagonalizable ? "true" : "false") << '\n';
  }

  void selftest(const Field& field) {
    SelftestOptions so;
    so.samples = o_.samples;
    so.inject_fault = o_.inject_fault;
    const auto report = run_selftest(field, so);
    out_ << report.to_text();
    if (!report.passed()) throw SelftestFailure{};
  }

 public:
  struct SelftestFailure {};

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient-of-powers matrices of polynomials over finite fields", "powmat"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& desc, bool needs_poly) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--field", o.field, "field as p or p^n")->required();
    sub->add_option("--modulus", o.modulus, "irreducible modulus c0,c1,...,cn");
    if (needs_poly) {
      sub->add_option("--poly", o.poly, "coefficients a0,a1,... or monomials 1+2x+x^3")->required();
    }
    sub->add_flag("--json", o.json, "structured output");
    sub->add_flag("--pretty", o.pretty, "print extension-field elements in the t basis");
    sub->add_option("--size-cap", o.size_cap, "maximum field order (overrides POWMAT_SIZE_CAP)");
    return sub;
  };

  add("matrix", "print A(f)", true);
  add("rank", "rank of A(f), i.e. the value-set size", true);
  add("census", "value-set size, multiplicities, minimum-value-set verdict and L_f", true);
  add("count", "Konig-Rados count of solutions of f(x) = c", true)
      ->add_option("--value", o.value, "the value c")->required();
  add("is-perm", "last-row permutation test", true);
  add("invert", "compositional inverse of a permutation polynomial", true);
  add("compose", "print g o f", true)->add_option("--with", o.with, "the outer polynomial g")->required();
  add("cycles", "cycle decomposition of the functional graph", true);
  add("period", "period of a_n = f^(n)(a_0)", true)->add_option("--seed", o.seed, "a_0")->required();
  add("order", "order of A(f) for a permutation polynomial", true);
  add("diagonalize", "eigenbasis of A(f) over an extension field", true);
  CLI::App* commute = add("commute", "does f(bx+a) = b f(x) + a hold", true);
  commute->add_option("--a", o.a, "translation a");
  commute->add_option("--b", o.b, "nonzero scale b");
  CLI::App* selftest = add("selftest", "run the property suites on one field", false);
  selftest->add_option("--samples", o.samples, "random samples per check");
  selftest->add_flag("--inject-fault", o.inject_fault, "corrupt one check (negative control)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto subs = app.get_subcommands();
  const std::string command = subs.front()->get_name();
  try {
    Runner(o, out).run(command);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Runner::SelftestFailure&) {
    return 1;
  }
  return 0;
}

}  // namespace powmat
