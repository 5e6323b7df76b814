#pragma once

#include <json.hpp>

#include "springer/classify.hpp"
#include "springer/link_pattern.hpp"
#include "springer/orbit.hpp"
#include "springer/partition.hpp"
#include "springer/tableau.hpp"

namespace springer {

inline const char* tool_version = "0.1.0";

nlohmann::json to_json(const Partition& la);
nlohmann::json to_json(const StandardTableau& t);
nlohmann::json to_json(const LinkPattern& pi);
nlohmann::json to_json(const OrbitAnalysis& a);
nlohmann::json to_json(const SingularityReport& s);
nlohmann::json to_json(const ComponentReport& r);
nlohmann::json to_json(const ShapeAtlas& atlas);

} // namespace springer
