#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mcnet/constructions.hpp"
#include "mcnet/pda.hpp"
#include "mcnet/simulator.hpp"

namespace mcnet {

// On-disk form of an array: the grid (null = star), optional labels, and an
// optional side table mapping canonical symbols to their construction labels.
struct ArrayDocument {
    PdaArray array;
    std::vector<SymbolLabel> symbol_labels; // empty when not applicable
};

nlohmann::ordered_json array_to_json(const ArrayDocument& doc);
ArrayDocument array_from_json(const nlohmann::json& j); // throws StructuralError

void save_array(const std::string& path, const ArrayDocument& doc);
ArrayDocument load_array(const std::string& path); // throws StructuralError on bad content

// {"scheme":..., "measured_load":"p/q", "theory_load":"p/q",
//  "relay_bits":[...], "all_correct":..., "seed":...} plus measured memory
// ratio and subpacketization.
std::string simulation_report_json(const SimulationResult& result);

} // namespace mcnet
