#pragma once

#include <string>

#include "json.hpp"

#include "cluster/classify.hpp"
#include "cluster/oracle.hpp"

namespace cluster {

// Reports serialize with alphabetically sorted keys so equal inputs always
// produce identical bytes.
nlohmann::json report_to_json(const SingularityReport& r);
nlohmann::json stratification_to_json(const Stratification& s);
nlohmann::json diff_report_to_json(const DiffReport& r);

std::string to_stable_string(const nlohmann::json& j);

} // namespace cluster
