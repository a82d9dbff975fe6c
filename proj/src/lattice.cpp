#include "k3br/lattice.hpp"

#include "k3br/errors.hpp"
#include "k3br/ideal.hpp"
#include "k3br/literal.hpp"

namespace k3br {

IdealLatticeLS make_lattice(const ImQuadField& E, FactoredIdeal I, Rational alpha, FactoredIdeal level_J) {
  if (alpha == 0) throw ValidationError("lattice scale alpha must be nonzero");
  IdealLatticeLS L{std::move(I), std::move(alpha), std::move(level_J)};
  if (!divides(L.level_J, dual_lattice(E, L))) {
    throw ValidationError("level ideal J must contain the dual lattice I*");
  }
  return L;
}

Gram gram(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha) {
  const auto [b0, b1] = basis_elements(E, to_zbasis(E, I));
  const FieldElement b[2] = {b0, b1};
  Gram g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g[i][j] = trace(alpha * (b[i] * conj(b[j])));
  }
  return g;
}

Rational det(const Gram& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

bool is_integral(const Gram& g) {
  for (const auto& row : g) {
    for (const auto& v : row) {
      if (v.get_den() != 1) return false;
    }
  }
  return true;
}

bool is_integral_lattice(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha) {
  if (alpha == 0) return false;
  return divides(E.different.inverse(), factor_rational(E, alpha) * I * conj(I));
}

FactoredIdeal dual_lattice(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha) {
  if (alpha == 0) throw ValidationError("lattice scale alpha must be nonzero");
  return (factor_rational(E, alpha) * E.different * conj(I)).inverse();
}

FactoredIdeal dual_lattice(const ImQuadField& E, const IdealLatticeLS& L) { return dual_lattice(E, L.I, L.alpha); }

FactoredIdeal gram_dual(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha) {
  if (alpha == 0) throw ValidationError("lattice scale alpha must be nonzero");
  const auto [b0, b1] = basis_elements(E, to_zbasis(E, I));
  const Gram g = gram(E, I, alpha);
  const Rational dt = det(g);
  // dual basis b*_i = Σ_k (G⁻¹)_{ik} b_k
  const Gram inv = {{{g[1][1] / dt, -g[0][1] / dt}, {-g[1][0] / dt, g[0][0] / dt}}};
  const FieldElement gens[2] = {inv[0][0] * b0 + inv[0][1] * b1, inv[1][0] * b0 + inv[1][1] * b1};
  return from_zbasis(E, hnf_span(gens));
}

FactoredIdeal level_ideal(const ImQuadField& E, const IdealLatticeLS& L) {
  return dual_lattice(E, L) / L.level_J;
}

IdealLatticeLS scale(const ImQuadField& E, const FieldElement& e, const IdealLatticeLS& L) {
  if (e.is_zero()) throw ValidationError("cannot scale a lattice by zero");
  const FactoredIdeal fe = factor_element(E, e);
  IdealLatticeLS out{fe * L.I, L.alpha / norm(e), fe * L.level_J};
  if (dual_lattice(E, out) != fe * dual_lattice(E, L)) throw InternalError("dual does not commute with scaling");
  if (level_ideal(E, out) != level_ideal(E, L)) throw InternalError("level ideal changed under scaling");
  return out;
}

std::optional<FieldElement> equivalent(const ImQuadField& E, const IdealLatticeLS& L1, const IdealLatticeLS& L2) {
  if (L2.alpha == 0 || L1.alpha == 0) return std::nullopt;
  const Rational t = L1.alpha / L2.alpha;
  if (t <= 0) return std::nullopt;
  const FactoredIdeal Q = L2.I / L1.I;
  if (Q.norm() != t) return std::nullopt;
  const auto g = is_principal(E, Q);
  if (!g || norm(*g) != t) return std::nullopt;
  for (const auto& zeta : roots_of_unity(E)) {
    const FieldElement e = zeta * *g;
    if (factor_element(E, e) * L1.level_J == L2.level_J) return e;
  }
  return std::nullopt;
}

IdealLatticeLS level_from_brauer_order(const ImQuadField& E, const FactoredIdeal& I, const Rational& alpha,
                                       const FactoredIdeal& target) {
  require_integral(target, "level_from_brauer_order");
  const FactoredIdeal dual = dual_lattice(E, I, alpha);
  return make_lattice(E, I, alpha, dual / target);
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && s.front() == ' ') {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

IdealLatticeLS parse_lattice(const ImQuadField& E, std::string_view text) {
  constexpr std::string_view kOpen = "lat(";
  if (text.substr(0, kOpen.size()) != kOpen) throw ParseError("lattice literal must start with 'lat('", 0, std::string(text.substr(0, 4)));
  if (text.empty() || text.back() != ')') throw ParseError("lattice literal must end with ')'", text.size(), "");
  const std::string_view body = text.substr(kOpen.size(), text.size() - kOpen.size() - 1);

  std::string_view parts[3];
  std::size_t offsets[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto pos = body.find(';', start);
    if ((i < 2) != (pos != std::string_view::npos)) {
      throw ParseError("lattice literal needs exactly three ';'-separated fields", kOpen.size() + (pos == std::string_view::npos ? body.size() : pos), ";");
    }
    offsets[i] = kOpen.size() + start;
    parts[i] = trim(body.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start), offsets[i]);
    start = pos + 1;
  }

  auto value_of = [&](int i, std::string_view key) {
    if (parts[i].substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "'", offsets[i], std::string(parts[i]));
    return parts[i].substr(key.size());
  };
  const std::string_view alpha_text = value_of(1, "alpha=");
  const std::string_view j_text = value_of(2, "J=");

  FactoredIdeal I, J;
  Rational alpha;
  try {
    I = parse_ideal(E, parts[0]);
  } catch (const ParseError& e) {
    throw e.shifted(offsets[0]);
  }
  try {
    alpha = parse_rational(alpha_text);
  } catch (const ParseError& e) {
    throw e.shifted(offsets[1] + 6);
  }
  try {
    J = parse_ideal(E, j_text);
  } catch (const ParseError& e) {
    throw e.shifted(offsets[2] + 2);
  }
  return make_lattice(E, std::move(I), std::move(alpha), std::move(J));
}

std::string format_lattice(const IdealLatticeLS& L) {
  return "lat(" + format_ideal(L.I) + "; alpha=" + L.alpha.get_str() + "; J=" + format_ideal(L.level_J) + ")";
}

}  // namespace k3br
