#include "k3br/brauer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k3br/errors.hpp"
#include "k3br/ideal.hpp"
#include "k3br/literal.hpp"
#include "k3br/reference_tables.hpp"

namespace k3br {

Integer group_order(const Invariants& inv) {
  Integer r = 1;
  for (const auto& d : inv) r *= d;
  return r;
}

bool group_less(const Invariants& a, const Invariants& b) {
  const Integer oa = group_order(a), ob = group_order(b);
  if (oa != ob) return oa < ob;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string group_notation(const Invariants& inv) {
  // (p, p^k) pairs, p descending then p^k descending
  std::vector<std::pair<Integer, Integer>> parts;
  for (const auto& d : inv) {
    for (const auto& [p, k] : factor_integer(d)) parts.emplace_back(Integer(static_cast<long>(p)), ipow(Integer(static_cast<long>(p)), k));
  }
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::string out;
  for (const auto& [p, q] : parts) {
    if (!out.empty()) out += " x ";
    out += "Z/" + q.get_str();
  }
  return out;
}

Invariants parse_group_notation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return {};
  std::map<std::int64_t, std::vector<Integer>> by_prime;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(" x ", start);
    const auto piece = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (piece.size() < 3 || piece.substr(0, 2) != "Z/") {
      throw ParseError("expected a cyclic factor Z/k", start, std::string(piece));
    }
    Integer k;
    if (k.set_str(std::string(piece.substr(2)), 10) != 0 || k < 1) {
      throw ParseError("bad cyclic order", start + 2, std::string(piece.substr(2)));
    }
    for (const auto& [p, e] : factor_integer(k)) by_prime[p].push_back(ipow(Integer(static_cast<long>(p)), e));
    if (pos == std::string_view::npos) break;
    start = pos + 3;
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  Invariants inv(len, Integer(1));
  for (const auto& [p, v] : by_prime) {
    for (std::size_t j = 0; j < v.size(); ++j) inv[j] *= v[j];
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::vector<Invariants> distinct_sorted(std::vector<Invariants> groups) {
  std::sort(groups.begin(), groups.end(), group_less);
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  return groups;
}

BrauerCatalog brauer_superset(const EnumerationReport& report, bool force) {
  if (!report.certified() && !force) {
    throw BoundExceeded("enumeration is not certified (a kept ideal sits at an exponent ceiling); rerun with a larger cap or force");
  }
  BrauerCatalog cat;
  cat.field = report.field;
  cat.n = report.n;
  cat.certified = report.certified();

  auto less = [](const FactoredIdeal& a, const FactoredIdeal& b) { return canonical_less(a, b); };
  std::map<FactoredIdeal, std::vector<FactoredIdeal>, decltype(less)> divisors(less);
  for (const auto& k : report.kept) {
    for (const auto& d : integral_divisors(k.ideal)) divisors[d].push_back(k.ideal);
  }
  std::vector<Invariants> groups;
  for (auto& [ideal, witnesses] : divisors) {
    CatalogEntry e;
    e.ideal = ideal;
    e.norm = ideal.norm().get_num();
    e.invariants = abelian_invariants(ideal);
    e.witnesses = std::move(witnesses);
    groups.push_back(e.invariants);
    cat.entries.push_back(std::move(e));
  }
  cat.distinct_groups = distinct_sorted(std::move(groups));
  return cat;
}

OddDiscCase odd_disc_case(const ImQuadField& E) {
  if (E.is_ramified(2)) throw ValidationError("odd discriminant cases need 2 unramified in " + E.name());
  if (E.mu_order != 2) throw ValidationError("odd discriminant cases need mu(E) = {1, -1}");
  OddDiscCase c;
  c.two = splitting_type(E, 2);
  c.three = splitting_type(E, 3);
  static const std::map<std::pair<Splitting, Splitting>, char> labels = {
      {{Splitting::Split, Splitting::Split}, 'a'},   {{Splitting::Split, Splitting::Inert}, 'b'},
      {{Splitting::Split, Splitting::Ramified}, 'c'}, {{Splitting::Inert, Splitting::Split}, 'd'},
      {{Splitting::Inert, Splitting::Inert}, 'e'},   {{Splitting::Inert, Splitting::Ramified}, 'f'},
  };
  c.label = labels.at({c.two, c.three});
  const ReferenceCase& ref = reference_case(std::string("odd-") + c.label);
  for (const auto& lit : ref.kept) c.kept.push_back(parse_ideal(E, lit));
  std::sort(c.kept.begin(), c.kept.end(), canonical_less);
  std::vector<Invariants> groups;
  for (const auto& g : ref.groups) groups.push_back(parse_group_notation(g));
  c.groups = distinct_sorted(std::move(groups));
  return c;
}

std::vector<HilbertEntry> hilbert_brauer_set(const ImQuadField& E, std::int64_t norm_bound, std::int64_t residue_bound) {
  if (norm_bound < 1) throw ValidationError("norm bound must be positive");
  std::vector<HilbertEntry> out;
  for (const auto& I : integral_ideals_up_to(E, norm_bound)) {
    const FactoredIdeal c = conj(I);
    if (canonical_less(c, I)) continue;
    if (residue_units_galois_trivial(E, lcm(I, c), residue_bound)) out.push_back({I, abelian_invariants(I)});
  }
  return out;
}

}  // namespace k3br
