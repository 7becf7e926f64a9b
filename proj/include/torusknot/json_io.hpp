#pragma once

#include <string>

#include "json.hpp"
#include "torusknot/atlas.hpp"

namespace torusknot {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAtlasSchema = "atlas-v1";
inline constexpr const char* kMountainSchema = "mountain-v1";

// Unbounded tb ends are written as the strings "+inf" and "-inf".
Json to_json(const KnotFamilyRecord& f);
KnotFamilyRecord family_from_json(const Json& j);

Json to_json(const StructureRecord& s);
StructureRecord structure_from_json(const Json& j);

Json to_json(const TransverseRecord& t);
TransverseRecord transverse_from_json(const Json& j);

Json to_json(const Atlas& atlas);
// Throws std::invalid_argument on a schema mismatch or malformed document.
Atlas atlas_from_json(const Json& j);

Json to_json(const MountainRange& range);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace torusknot
