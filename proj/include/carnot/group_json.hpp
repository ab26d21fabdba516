#pragma once

#include <filesystem>

#include <json.hpp>

#include "carnot/group.hpp"

namespace carnot {

/// Reads {"name", "n", "m", "B": [[[row]...] x m]} (row-major). Shape and type
/// problems raise InvalidSpec with a JSON-pointer location; the structural
/// invariants are left to validate_spec.
GroupSpec group_spec_from_json(const nlohmann::json& doc);
nlohmann::json group_spec_to_json(const GroupSpec& spec);

GroupSpec load_group_spec(const std::filesystem::path& path);

}  // namespace carnot
