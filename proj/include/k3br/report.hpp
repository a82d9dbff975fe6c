#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "k3br/brauer.hpp"
#include "k3br/enumerate.hpp"
#include "k3br/k3group.hpp"
#include "k3br/lattice.hpp"

namespace k3br {

inline constexpr int kJsonSchema = 1;

/// Integers that fit int64 become JSON numbers, larger ones decimal strings.
nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const Invariants& inv);

nlohmann::json field_json(const ImQuadField& E);
nlohmann::json estimate_json(const K3OrderEstimate& est);
nlohmann::json enumeration_json(const EnumerationReport& rep);
nlohmann::json catalog_json(const BrauerCatalog& cat);
nlohmann::json hilbert_json(const ImQuadField& E, std::int64_t norm_bound, const std::vector<HilbertEntry>& set);

/// "| # | group | order |" table, rows in the given order.
std::string group_table_markdown(const std::vector<Invariants>& groups);
std::string catalog_markdown(const BrauerCatalog& cat);

std::string field_text(const ImQuadField& E);
std::string estimate_text(const ImQuadField& E, const K3OrderEstimate& est);
std::string enumeration_text(const EnumerationReport& rep);
std::string catalog_text(const BrauerCatalog& cat);
std::string hilbert_text(const ImQuadField& E, std::int64_t norm_bound, const std::vector<HilbertEntry>& set);
std::string lattice_text(const ImQuadField& E, const IdealLatticeLS& L);

}  // namespace k3br
