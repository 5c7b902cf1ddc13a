#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "snni/petri.hpp"

namespace snni {

/// Version tag written to and required in net documents.
inline constexpr std::string_view kNetSchemaVersion = "1.0";

/// Parses a JSON net document:
///
///   { "schema_version": "1.0",
///     "places":      [ {"id": "p1", "initial_tokens": 1}, ... ],
///     "transitions": [ {"id": "t1", "label": "a", "level": "low"}, ... ],
///     "arcs":        [ {"from": "p1", "to": "t1", "weight": 1}, ... ] }
///
/// initial_tokens defaults to 0 and weight to 1. Throws FormatError naming
/// the offending line or field.
LabeledPetriNet parse_net(std::string_view document);
LabeledPetriNet load_net(const std::filesystem::path& path);

/// Canonical document: declaration order, arcs sorted by (source kind,
/// source index, target index), two-space indentation.
std::string serialize_net(const LabeledPetriNet& lpn);

}  // namespace snni
