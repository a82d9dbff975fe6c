#include "k3br/verify.hpp"

#include <algorithm>
#include <functional>

#include "k3br/brauer.hpp"
#include "k3br/enumerate.hpp"
#include "k3br/ideal.hpp"
#include "k3br/k3group.hpp"
#include "k3br/literal.hpp"
#include "k3br/reference_tables.hpp"
#include "k3br/report.hpp"

namespace k3br {

namespace {

template <class T, class Less, class Show>
std::string set_diff(const std::vector<T>& got, const std::vector<T>& want, Less less, Show show) {
  std::vector<T> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing), less);
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra), less);
  std::string out;
  for (const auto& m : missing) out += (out.empty() ? "" : "; ") + std::string("missing ") + show(m);
  for (const auto& e : extra) out += (out.empty() ? "" : "; ") + std::string("extra ") + show(e);
  return out;
}

std::vector<FactoredIdeal> kept_ideals(const EnumerationReport& rep) {
  std::vector<FactoredIdeal> out;
  for (const auto& k : rep.kept) out.push_back(k.ideal);
  return out;
}

CheckResult compare_kept(std::string name, const EnumerationReport& rep, std::vector<FactoredIdeal> want) {
  std::sort(want.begin(), want.end(), canonical_less);
  const auto got = kept_ideals(rep);
  CheckResult r{std::move(name), false, {}};
  r.detail = set_diff(got, want, canonical_less, [](const FactoredIdeal& I) { return format_ideal(I); });
  if (!rep.certified()) r.detail += (r.detail.empty() ? "" : "; ") + std::string("enumeration not certified");
  r.passed = r.detail.empty();
  if (r.passed) r.detail = std::to_string(got.size()) + " ideals";
  return r;
}

CheckResult compare_groups(std::string name, const std::vector<Invariants>& got, std::vector<Invariants> want) {
  want = distinct_sorted(std::move(want));
  CheckResult r{std::move(name), false, {}};
  r.detail = set_diff(got, want, group_less, group_notation);
  if (r.detail.empty() && group_table_markdown(got) != group_table_markdown(want)) r.detail = "table differs";
  r.passed = r.detail.empty();
  if (r.passed) r.detail = std::to_string(got.size()) + " groups";
  return r;
}

std::vector<FactoredIdeal> parse_all(const ImQuadField& E, const std::vector<std::string>& lits) {
  std::vector<FactoredIdeal> out;
  for (const auto& l : lits) out.push_back(parse_ideal(E, l));
  return out;
}

std::vector<Invariants> parse_groups(const std::vector<std::string>& groups) {
  std::vector<Invariants> out;
  for (const auto& g : groups) out.push_back(parse_group_notation(g));
  return out;
}

void run_case(const ReferenceCase& ref, std::vector<CheckResult>& out) {
  const ImQuadField E = make_field(ref.d);
  const Integer n = ref.n ? *ref.n : g_k3_base_order(E);
  const std::string tag = ref.key + " " + E.name() + " n=" + n.get_str();
  const EnumerationReport rep = enumerate_kept(E, n);
  out.push_back(compare_kept(tag + ": kept ideals", rep, parse_all(E, ref.kept)));
  const BrauerCatalog cat = brauer_superset(rep, true);
  out.push_back(compare_groups(tag + ": groups", cat.distinct_groups, parse_groups(ref.groups)));
  if (ref.key.starts_with("odd-")) {
    const OddDiscCase c = odd_disc_case(E);
    const bool ok = std::string("odd-") + c.label == ref.key;
    out.push_back({tag + ": case label", ok, std::string("classified as (") + c.label + ")"});
  }
}

CheckResult order_check(std::string name, std::int64_t d, const char* lit, std::function<bool(const Integer&)> pred,
                        const char* expect) {
  const ImQuadField E = make_field(d);
  const K3OrderEstimate est = g_k3_order(E, parse_ideal(E, lit));
  const bool ok = est.exact() && pred(est.possible_orders.front());
  std::string detail = "orders " ;
  for (std::size_t i = 0; i < est.possible_orders.size(); ++i) detail += (i ? "," : "") + est.possible_orders[i].get_str();
  return {std::move(name), ok, detail + " (want " + expect + ")"};
}

}  // namespace

std::vector<CheckResult> verify_reference() {
  std::vector<CheckResult> out;
  for (const auto& ref : reference_cases()) run_case(ref, out);

  auto eq = [](long v) { return [v](const Integer& x) { return x == v; }; };
  out.push_back(order_check("order at (3) in Q(sqrt(-1))", -1, "(3)", eq(1), "1"));
  out.push_back(order_check("order at (7) in Q(sqrt(-1))", -1, "(7)", eq(2), "2"));
  out.push_back(order_check("order at (2) in Q(sqrt(-3))", -3, "(2)", eq(1), "1"));
  out.push_back(order_check("order at 3r^4 in Q(sqrt(-3))", -3, "3r^4", [](const Integer& x) { return x > 1; }, "> 1"));

  // Every ramified prime passes the Hilbert-class-field criterion.
  {
    std::string bad;
    int count = 0;
    for (std::int64_t d : {-1, -2, -3, -5, -6, -7, -10, -11, -13, -15, -19, -21, -23, -30, -35, -39, -51, -105}) {
      const ImQuadField E = make_field(d);
      for (auto p : E.ramified_primes) {
        ++count;
        const auto P = FactoredIdeal::prime(prime_ideal(E, p, PrimeTag::Ramified));
        if (!residue_units_galois_trivial(E, P)) bad += " " + format_ideal(P) + " in " + E.name();
      }
    }
    out.push_back({"ramified primes pass the Hilbert criterion", bad.empty(),
                   bad.empty() ? std::to_string(count) + " primes" : "failing:" + bad});
  }
  // Unramified l in {5, 7, 11} with mu = {1, -1}: (l)^k and primes above l fail.
  {
    std::string bad;
    int count = 0;
    for (std::int64_t d : {-2, -5, -6, -7, -11, -15, -19, -23}) {
      const ImQuadField E = make_field(d);
      for (std::int64_t l : {5, 7, 11}) {
        if (E.is_ramified(l)) continue;
        std::vector<FactoredIdeal> tests;
        for (const auto& P : primes_above(E, l)) tests.push_back(FactoredIdeal::prime(P));
        for (long k = 1; ipow(Integer(l), 2 * k) <= 10000; ++k) tests.push_back(factor_rational(E, Rational(l)).pow(k));
        for (const auto& I : tests) {
          ++count;
          if (residue_units_galois_trivial(E, lcm(I, conj(I)))) bad += " " + format_ideal(I) + " in " + E.name();
        }
      }
    }
    out.push_back({"unramified 5, 7, 11 fail the Hilbert criterion", bad.empty(),
                   bad.empty() ? std::to_string(count) + " ideals" : "passing:" + bad});
  }
  return out;
}

}  // namespace k3br
