#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hardy/solver.hpp"

namespace hardy::io {

using nlohmann::json;

json read_json_file(const std::string& path);

// {"rank": r, "log_derivatives": ["<series>", ...]}; not validated here.
DerivationSpec spec_from_json(const json& j);
json spec_to_json(const DerivationSpec& spec);

// {"order": n, "derivation": k, "coefficients": [{"index": [...], "series": "<series>"}]}
DiffPoly equation_from_json(const json& j, std::size_t rank);
json equation_to_json(const DiffPoly& F);

json gridset_to_json(const GridSet& g);
GridSet gridset_from_json(const json& j);

json provenance_to_json(const std::vector<ProvenanceEntry>& prov);
std::vector<ProvenanceEntry> provenance_from_json(const json& j);

json outcome_to_json(const SolveOutcome& o);
SolveOutcome outcome_from_json(const json& j, std::size_t rank);
json outcomes_to_json(const std::vector<SolveOutcome>& os);

// Constants table and axiom report as JSON.
json constants_to_json(const DerivationSpec& spec);

}  // namespace hardy::io
