#pragma once

#include <string>

#include "json.hpp"
#include "mlsa/generators.hpp"
#include "mlsa/packing.hpp"

namespace mlsa {

// {"ground_size": u, "maximal_sets": [[...], ...]}
nlohmann::json family_to_json(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& j);

// {"sets": [[...], ...], "weight": w}; the stored weight is checked
// against the recomputed one on load.
nlohmann::json packing_to_json(const Packing& a);
Packing packing_from_json(const nlohmann::json& j, int ground_size);

// Family, both solutions and certificate metadata of a generated
// lower-bound instance.
nlohmann::json lower_bound_to_json(const LowerBoundInstance& inst);
LowerBoundInstance lower_bound_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace mlsa
