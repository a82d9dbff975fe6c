#include "k3br/report.hpp"

#include <sstream>

#include "k3br/ideal.hpp"
#include "k3br/literal.hpp"

namespace k3br {

using nlohmann::json;

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json to_json(const Invariants& inv) {
  json a = json::array();
  for (const auto& d : inv) a.push_back(to_json(d));
  return a;
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string orders_text(const std::vector<Integer>& orders) {
  std::vector<std::string> s;
  for (const auto& o : orders) s.push_back(o.get_str());
  return join(s, ", ");
}

json literals(const std::vector<FactoredIdeal>& ideals) {
  json a = json::array();
  for (const auto& I : ideals) a.push_back(format_ideal(I));
  return a;
}

}  // namespace

json field_json(const ImQuadField& E) {
  json ram = json::array();
  for (auto p : E.ramified_primes) ram.push_back(p);
  return {{"d", E.d},
          {"D", E.D},
          {"name", E.name()},
          {"omega", E.omega_half ? "(1+sqrt(d))/2" : "sqrt(d)"},
          {"class_number", E.h},
          {"roots_of_unity", E.mu_order},
          {"ramified_primes", ram},
          {"different", format_ideal(E.different)}};
}

json estimate_json(const K3OrderEstimate& est) {
  json orders = json::array();
  for (const auto& o : est.possible_orders) orders.push_back(to_json(o));
  json j = {{"ideal", format_ideal(est.ideal)},
            {"A", to_json(est.numerator_A)},
            {"h1_exact", est.exact()},
            {"h1", to_json(est.exact() ? *est.h1_exact : est.h1_upper)},
            {"J", to_json(est.J)},
            {"phi_E", to_json(est.phi_E)},
            {"phi_J", to_json(est.phi_J)},
            {"unit_index", to_json(est.unit_index)},
            {"e_factor", to_json(est.e_factor)},
            {"possible_orders", orders}};
  if (est.exact()) j["order"] = to_json(est.possible_orders.front());
  return j;
}

json enumeration_json(const EnumerationReport& rep) {
  json kept = json::array();
  for (const auto& k : rep.kept) kept.push_back(estimate_json(k.estimate));
  json caps = json::object();
  for (const auto& [p, c] : rep.prime_caps) caps[std::to_string(p)] = c;
  return {{"schema", kJsonSchema},
          {"command", "enumerate"},
          {"field", field_json(rep.field)},
          {"n", to_json(rep.n)},
          {"certified", rep.certified()},
          {"cap_saturated", rep.cap_saturated},
          {"global_slack", to_json(rep.global_slack)},
          {"prime_caps", caps},
          {"kept", kept}};
}

json catalog_json(const BrauerCatalog& cat) {
  json entries = json::array();
  for (const auto& e : cat.entries) {
    entries.push_back({{"ideal", format_ideal(e.ideal)},
                       {"norm", to_json(e.norm)},
                       {"invariants", to_json(e.invariants)},
                       {"witnesses", literals(e.witnesses)}});
  }
  json groups = json::array();
  for (const auto& g : cat.distinct_groups) {
    groups.push_back({{"invariants", to_json(g)}, {"notation", group_notation(g)}, {"order", to_json(group_order(g))}});
  }
  return {{"schema", kJsonSchema},
          {"command", "brauer"},
          {"field", field_json(cat.field)},
          {"n", to_json(cat.n)},
          {"certified", cat.certified},
          {"groups", groups},
          {"entries", entries}};
}

json hilbert_json(const ImQuadField& E, std::int64_t norm_bound, const std::vector<HilbertEntry>& set) {
  json entries = json::array();
  for (const auto& h : set) {
    entries.push_back({{"ideal", format_ideal(h.ideal)}, {"invariants", to_json(h.invariants)}});
  }
  return {{"schema", kJsonSchema},
          {"command", "hilbert-brauer"},
          {"field", field_json(E)},
          {"norm_bound", norm_bound},
          {"entries", entries}};
}

std::string group_table_markdown(const std::vector<Invariants>& groups) {
  std::ostringstream os;
  os << "| # | group | order |\n|---|---|---|\n";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    os << "| " << i + 1 << " | " << group_notation(groups[i]) << " | " << group_order(groups[i]).get_str() << " |\n";
  }
  return os.str();
}

std::string catalog_markdown(const BrauerCatalog& cat) {
  std::ostringstream os;
  os << "### Br(E, K) for E = " << cat.field.name() << ", n = " << cat.n.get_str() << "\n\n";
  if (!cat.certified) os << "**uncertified**: the enumeration kept an ideal at an exponent ceiling.\n\n";
  os << group_table_markdown(cat.distinct_groups);
  return os.str();
}

std::string field_text(const ImQuadField& E) {
  std::ostringstream os;
  std::vector<std::string> ram;
  for (auto p : E.ramified_primes) ram.push_back(std::to_string(p));
  os << "field: " << E.name() << "\n"
     << "discriminant: " << E.D << "\n"
     << "omega: " << (E.omega_half ? "(1+sqrt(d))/2" : "sqrt(d)") << "\n"
     << "class number: " << E.h << "\n"
     << "roots of unity: " << E.mu_order << "\n"
     << "ramified primes: " << join(ram, ", ") << "\n"
     << "different: " << format_ideal(E.different) << "\n";
  return os.str();
}

std::string estimate_text(const ImQuadField& E, const K3OrderEstimate& est) {
  std::ostringstream os;
  os << "field: " << E.name() << "\n"
     << "ideal: " << format_ideal(est.ideal) << "\n"
     << "J: " << est.J.get_str() << "\n"
     << "phi_E(I): " << est.phi_E.get_str() << "\n"
     << "phi(J): " << est.phi_J.get_str() << "\n"
     << "unit index: " << est.unit_index.get_str() << "\n"
     << "e-factor: " << est.e_factor.get_str() << "\n"
     << "A: " << est.numerator_A.get_str() << "\n";
  if (est.exact()) {
    os << "h1: " << est.h1_exact->get_str() << "\n"
       << "order: " << est.possible_orders.front().get_str() << "\n";
  } else {
    os << "h1: <= " << est.h1_upper.get_str() << "\n"
       << "possible orders: " << orders_text(est.possible_orders) << "\n";
  }
  return os.str();
}

std::string enumeration_text(const EnumerationReport& rep) {
  std::ostringstream os;
  os << "field: " << rep.field.name() << "\n"
     << "n: " << rep.n.get_str() << "\n"
     << "certified: " << (rep.certified() ? "yes" : "no") << "\n";
  os << "kept: " << rep.kept.size() << "\n";
  for (const auto& k : rep.kept) {
    os << "  " << format_ideal(k.ideal) << "  A=" << k.estimate.numerator_A.get_str()
       << "  orders=" << orders_text(k.estimate.possible_orders) << "\n";
  }
  return os.str();
}

std::string catalog_text(const BrauerCatalog& cat) {
  std::ostringstream os;
  os << "field: " << cat.field.name() << "\n"
     << "n: " << cat.n.get_str() << "\n"
     << "certified: " << (cat.certified ? "yes" : "no") << "\n"
     << "groups: " << cat.distinct_groups.size() << "\n";
  for (const auto& g : cat.distinct_groups) os << "  " << group_notation(g) << "\n";
  return os.str();
}

std::string hilbert_text(const ImQuadField& E, std::int64_t norm_bound, const std::vector<HilbertEntry>& set) {
  std::ostringstream os;
  os << "field: " << E.name() << "\n"
     << "norm bound: " << norm_bound << "\n"
     << "ideals: " << set.size() << "\n";
  for (const auto& h : set) os << "  " << format_ideal(h.ideal) << "  " << group_notation(h.invariants) << "\n";
  return os.str();
}

std::string lattice_text(const ImQuadField& E, const IdealLatticeLS& L) {
  const Gram g = gram(E, L.I, L.alpha);
  const FactoredIdeal IB = level_ideal(E, L);
  std::ostringstream os;
  os << "lattice: " << format_lattice(L) << "\n"
     << "gram: [[" << g[0][0].get_str() << ", " << g[0][1].get_str() << "], [" << g[1][0].get_str() << ", "
     << g[1][1].get_str() << "]]\n"
     << "det: " << det(g).get_str() << "\n"
     << "integral: " << (is_integral_lattice(E, L.I, L.alpha) ? "yes" : "no") << "\n"
     << "dual: " << format_ideal(dual_lattice(E, L)) << "\n"
     << "level ideal: " << format_ideal(IB) << "\n"
     << "brauer group: " << group_notation(abelian_invariants(IB)) << "\n";
  return os.str();
}

}  // namespace k3br
