#pragma once

#include <cstdint>
#include <vector>

#include "k3br/factored_ideal.hpp"
#include "k3br/field.hpp"
#include "k3br/ideal.hpp"

namespace k3br {

/// O_E / I for an integral ideal I, residues indexed x + a·y with
/// 0 <= x < a, 0 <= y < c (Hermite basis [a, b + c·ω]).
class ResidueRing {
 public:
  struct Elem {
    std::int64_t x, y;
    friend bool operator==(const Elem&, const Elem&) = default;
  };

  ResidueRing(const ImQuadField& E, const FactoredIdeal& I, std::int64_t bound = kDefaultResidueBound);

  std::int64_t size() const { return a_ * c_; }
  Elem at(std::int64_t index) const { return {index % a_, index / a_}; }
  std::int64_t index(Elem e) const { return e.x + a_ * e.y; }

  Elem reduce(std::int64_t x, std::int64_t y) const;
  Elem reduce(const FieldElement& e) const;
  Elem mul(Elem u, Elem v) const;
  /// Well defined only when I is ambiguous.
  Elem conj(Elem u) const;
  bool is_zero(Elem u) const { return u.x == 0 && u.y == 0; }
  bool is_unit(Elem u) const;

  /// Indices of all units, ascending.
  std::vector<std::int64_t> units() const;

 private:
  OmegaRule w_;
  std::int64_t a_, b_, c_;
  std::vector<ZBasisIdeal> primes_;
};

}  // namespace k3br
