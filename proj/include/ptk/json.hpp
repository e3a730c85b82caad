#pragma once

#include <json.hpp>

#include "ptk/core.hpp"
#include "ptk/formula.hpp"
#include "ptk/witness.hpp"

namespace ptk {

// {"parts": [1, 4, 4]}
void to_json(nlohmann::json& j, const PartProfile& p);
void from_json(const nlohmann::json& j, PartProfile& p);

// {"taken": [1, 0, 4]}
void to_json(nlohmann::json& j, const ClassComposition& c);

// {"classes": [[1, 0, 4], [0, 4, 0]]}
void to_json(nlohmann::json& j, const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// {"value", "branch", "t", "epsilon", "n_args", "sigma"}; sigma is null
// unless N took its floor-based branch.
void to_json(nlohmann::json& j, const ThicknessResult& r);

// {"cover", "class_planarity", "count", "formula_value", "pass"}
void to_json(nlohmann::json& j, const VerifyReport& r);

}  // namespace ptk
