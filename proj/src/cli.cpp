#include "k3br/cli.hpp"

#include <CLI11.hpp>

#include "k3br/brauer.hpp"
#include "k3br/enumerate.hpp"
#include "k3br/errors.hpp"
#include "k3br/ideal.hpp"
#include "k3br/k3group.hpp"
#include "k3br/lattice.hpp"
#include "k3br/literal.hpp"
#include "k3br/report.hpp"
#include "k3br/verify.hpp"

namespace k3br::cli {

namespace {

struct Options {
  std::int64_t d = 0;
  std::string n;
  bool json = false;
  bool md = false;
  std::int64_t norm_bound = 100;
  std::optional<int> two_exp_cap;
  bool force = false;
  std::int64_t residue_bound = kDefaultResidueBound;
  std::vector<std::string> positional;
  std::string scale_by;
  std::string equivalent_to;
};

Integer parse_n(const std::string& s) {
  Integer n;
  if (s.empty() || n.set_str(s, 10) != 0 || n < 1) throw ValidationError("n must be a positive integer, got '" + s + "'");
  return n;
}

void need_args(const Options& o, std::size_t lo, std::size_t hi, const char* usage) {
  if (o.positional.size() < lo || o.positional.size() > hi) throw ValidationError(std::string("usage: ") + usage);
}

int cmd_field_info(const Options& o, std::ostream& out) {
  const ImQuadField E = make_field(o.d);
  const Integer base = g_k3_base_order(E);
  if (o.json) {
    auto j = field_json(E);
    j["schema"] = kJsonSchema;
    j["command"] = "field-info";
    j["k3_class_number"] = to_json(base);
    out << j.dump(2) << "\n";
  } else {
    out << field_text(E) << "K3 class number: " << base.get_str() << "\n";
  }
  return kExitOk;
}

int cmd_splitting(const Options& o, std::ostream& out) {
  need_args(o, 1, 1, "splitting -d D P");
  const ImQuadField E = make_field(o.d);
  std::int64_t p = 0;
  try {
    p = std::stoll(o.positional[0]);
  } catch (const std::exception&) {
    throw ValidationError("not an integer: '" + o.positional[0] + "'");
  }
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  const Splitting s = splitting_type(E, p);
  if (o.json) {
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& P : primes_above(E, p)) primes.push_back(format_ideal(FactoredIdeal::prime(P)));
    out << nlohmann::json{{"schema", kJsonSchema}, {"command", "splitting"}, {"p", p}, {"splitting", to_string(s)}, {"primes", primes}}.dump(2)
        << "\n";
  } else {
    out << to_string(s) << "\n";
  }
  return kExitOk;
}

int cmd_ideal_op(const Options& o, std::ostream& out) {
  static const char* usage =
      "ideal-op -d D OP A [B]; OP is show, mul, div, gcd, lcm, divides, pow, conj, inverse, principal, phi, ray-class";
  need_args(o, 2, 3, usage);
  const ImQuadField E = make_field(o.d);
  const std::string& op = o.positional[0];
  const FactoredIdeal A = parse_ideal(E, o.positional[1]);
  auto second = [&]() {
    if (o.positional.size() != 3) throw ValidationError(std::string("usage: ") + usage);
    return o.positional[2];
  };
  auto print_ideal = [&](const FactoredIdeal& I) {
    if (o.json) {
      out << nlohmann::json{{"schema", kJsonSchema}, {"command", "ideal-op"}, {"op", op}, {"ideal", format_ideal(I)}, {"norm", I.norm().get_str()}}.dump(2)
          << "\n";
    } else {
      out << format_ideal(I) << "\n";
    }
    return kExitOk;
  };
  auto print_value = [&](const std::string& v) {
    if (o.json) {
      out << nlohmann::json{{"schema", kJsonSchema}, {"command", "ideal-op"}, {"op", op}, {"value", v}}.dump(2) << "\n";
    } else {
      out << v << "\n";
    }
    return kExitOk;
  };
  if (op == "show") {
    const ZBasisIdeal Z = to_zbasis(E, A);
    nlohmann::json j = {{"schema", kJsonSchema},
                        {"command", "ideal-op"},
                        {"op", op},
                        {"ideal", format_ideal(A)},
                        {"norm", A.norm().get_str()},
                        {"integral", A.is_integral()},
                        {"ambiguous", is_ambiguous(A)},
                        {"zbasis", {Z.a.get_str(), Z.b.get_str(), Z.c.get_str()}}};
    if (A.is_integral()) j["invariants"] = to_json(abelian_invariants(A));
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << "ideal: " << format_ideal(A) << "\nnorm: " << A.norm().get_str()
          << "\nintegral: " << (A.is_integral() ? "yes" : "no") << "\nambiguous: " << (is_ambiguous(A) ? "yes" : "no")
          << "\nz-basis: [" << Z.a.get_str() << ", " << Z.b.get_str() << " + " << Z.c.get_str() << "*w]\n";
      if (A.is_integral()) out << "group: " << group_notation(abelian_invariants(A)) << "\n";
    }
    return kExitOk;
  }
  if (op == "mul") return print_ideal(A * parse_ideal(E, second()));
  if (op == "div") return print_ideal(A / parse_ideal(E, second()));
  if (op == "gcd") return print_ideal(gcd(A, parse_ideal(E, second())));
  if (op == "lcm") return print_ideal(lcm(A, parse_ideal(E, second())));
  if (op == "divides") return print_value(divides(A, parse_ideal(E, second())) ? "true" : "false");
  if (op == "pow") {
    long k = 0;
    try {
      k = std::stol(second());
    } catch (const std::exception&) {
      throw ValidationError("pow needs an integer exponent");
    }
    return print_ideal(A.pow(k));
  }
  if (op == "conj") return print_ideal(conj(A));
  if (op == "inverse") return print_ideal(A.inverse());
  if (op == "principal") {
    const auto g = is_principal(E, A);
    return print_value(g ? to_string(*g) : "none");
  }
  if (op == "phi") return print_value(euler_phi_E(A).get_str());
  if (op == "ray-class") return print_value(ray_class_number(E, A).get_str());
  throw ValidationError("unknown ideal operation '" + op + "'");
}

int cmd_g_order(const Options& o, std::ostream& out) {
  need_args(o, 1, 1, "g-order -d D IDEAL");
  const ImQuadField E = make_field(o.d);
  const K3OrderEstimate est = g_k3_order(E, parse_ideal(E, o.positional[0]));
  if (o.json) {
    auto j = estimate_json(est);
    j["schema"] = kJsonSchema;
    j["command"] = "g-order";
    j["field"] = field_json(E);
    out << j.dump(2) << "\n";
  } else {
    out << estimate_text(E, est);
  }
  return kExitOk;
}

EnumerationReport run_enumeration(const Options& o) {
  const ImQuadField E = make_field(o.d);
  if (o.n.empty()) throw ValidationError("-n is required");
  EnumerationOptions opts;
  opts.two_exp_cap = o.two_exp_cap;
  return enumerate_kept(E, parse_n(o.n), opts);
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const EnumerationReport rep = run_enumeration(o);
  if (o.json) {
    out << enumeration_json(rep).dump(2) << "\n";
  } else {
    out << enumeration_text(rep);
  }
  if (!rep.certified()) {
    err << "enumeration is not certified";
    err << (o.force ? " (forced)\n" : "; rerun with a larger --two-exp-cap\n");
    return o.force ? kExitOk : kExitUncertified;
  }
  return kExitOk;
}

int cmd_brauer(const Options& o, std::ostream& out) {
  const BrauerCatalog cat = brauer_superset(run_enumeration(o), o.force);
  if (o.json) {
    out << catalog_json(cat).dump(2) << "\n";
  } else if (o.md) {
    out << catalog_markdown(cat);
  } else {
    out << catalog_text(cat);
  }
  return kExitOk;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  const ImQuadField E = make_field(o.d);
  const auto set = hilbert_brauer_set(E, o.norm_bound, o.residue_bound);
  if (o.json) {
    out << hilbert_json(E, o.norm_bound, set).dump(2) << "\n";
  } else {
    out << hilbert_text(E, o.norm_bound, set);
  }
  return kExitOk;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  need_args(o, 1, 1, "lattice -d D 'lat(I; alpha=a; J=J)' [--scale ELEMENT] [--equivalent LATTICE]");
  const ImQuadField E = make_field(o.d);
  IdealLatticeLS L = parse_lattice(E, o.positional[0]);
  if (!o.scale_by.empty()) L = scale(E, parse_element(E, o.scale_by), L);
  std::optional<std::optional<FieldElement>> equiv;
  if (!o.equivalent_to.empty()) equiv = equivalent(E, L, parse_lattice(E, o.equivalent_to));
  if (o.json) {
    const Gram g = gram(E, L.I, L.alpha);
    const FactoredIdeal IB = level_ideal(E, L);
    nlohmann::json j = {{"schema", kJsonSchema},
                        {"command", "lattice"},
                        {"lattice", format_lattice(L)},
                        {"gram", {{g[0][0].get_str(), g[0][1].get_str()}, {g[1][0].get_str(), g[1][1].get_str()}}},
                        {"det", det(g).get_str()},
                        {"integral", is_integral_lattice(E, L.I, L.alpha)},
                        {"dual", format_ideal(dual_lattice(E, L))},
                        {"level_ideal", format_ideal(IB)},
                        {"invariants", to_json(abelian_invariants(IB))}};
    if (equiv) j["equivalent"] = *equiv ? nlohmann::json(to_string(**equiv)) : nlohmann::json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << lattice_text(E, L);
    if (equiv) out << "equivalent: " << (*equiv ? to_string(**equiv) : "no") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = verify_reference();
  int failed = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    if (o.json) {
      arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
  }
  if (o.json) {
    out << nlohmann::json{{"schema", kJsonSchema}, {"command", "verify-paper"}, {"failed", failed}, {"checks", arr}}.dump(2) << "\n";
  } else {
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Possible Galois-fixed Brauer groups of CM K3 surfaces over imaginary quadratic fields"};
  app.name("k3br");
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* sub) { sub->add_option("-d", o.d, "squarefree d < 0, E = Q(sqrt(d))")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto add_residue = [&](CLI::App* sub) {
    sub->add_option("--residue-bound", o.residue_bound, "largest residue ring enumerated by brute force");
  };
  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "degree n = [KE : E]")->required();
    sub->add_option("--two-exp-cap", o.two_exp_cap, "exponent ceiling for a ramified 2");
    sub->add_flag("--force-uncertified", o.force, "report even if the enumeration hit a cap");
  };

  auto* field_info = app.add_subcommand("field-info", "discriminant, class number, units, ramification");
  add_field(field_info);
  add_json(field_info);

  auto* splitting = app.add_subcommand("splitting", "splitting type of a rational prime");
  add_field(splitting);
  add_json(splitting);
  splitting->add_option("p", o.positional, "prime")->required();

  auto* ideal_op = app.add_subcommand("ideal-op", "ideal arithmetic on literals");
  add_field(ideal_op);
  add_json(ideal_op);
  ideal_op->add_option("args", o.positional, "OP A [B]")->required();

  auto* g_order = app.add_subcommand("g-order", "order of the K3 class group modulo an ideal");
  add_field(g_order);
  add_json(g_order);
  g_order->add_option("ideal", o.positional, "ideal literal")->required();

  auto* enumerate = app.add_subcommand("enumerate", "ambiguous ideals compatible with the degree n");
  add_field(enumerate);
  add_json(enumerate);
  add_enum(enumerate);

  auto* brauer = app.add_subcommand("brauer", "possible Galois-fixed Brauer groups");
  add_field(brauer);
  add_json(brauer);
  add_enum(brauer);
  brauer->add_flag("--md", o.md, "Markdown table");

  auto* hilbert = app.add_subcommand("hilbert-brauer", "Brauer groups possible over the Hilbert class field");
  add_field(hilbert);
  add_json(hilbert);
  add_residue(hilbert);
  hilbert->add_option("--norm-bound", o.norm_bound, "largest ideal norm searched");

  auto* lattice = app.add_subcommand("lattice", "ideal lattice with level structure");
  add_field(lattice);
  add_json(lattice);
  lattice->add_option("literal", o.positional, "lat(I; alpha=a; J=J)")->required();
  lattice->add_option("--scale", o.scale_by, "scale by a field element first");
  lattice->add_option("--equivalent", o.equivalent_to, "test equivalence with another lattice");

  auto* verify = app.add_subcommand("verify-paper", "recompute the worked examples and compare with the reference tables");
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (field_info->parsed()) return cmd_field_info(o, out);
    if (splitting->parsed()) return cmd_splitting(o, out);
    if (ideal_op->parsed()) return cmd_ideal_op(o, out);
    if (g_order->parsed()) return cmd_g_order(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (brauer->parsed()) return cmd_brauer(o, out);
    if (hilbert->parsed()) return cmd_hilbert(o, out);
    if (lattice->parsed()) return cmd_lattice(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUncertified;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace k3br::cli
