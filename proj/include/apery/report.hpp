#pragma once

#include <string>

#include <json.hpp>

#include "apery/invariants.hpp"

namespace apery {

/// Canonical JSON form of a report: fixed key order, Apery elements sorted
/// lexicographically, rationals as "p/q" strings. Byte-identical across runs
/// on the same input.
nlohmann::ordered_json report_to_json(const Report& rep);

/// Human-readable rendering carrying the same information.
std::string report_to_text(const Report& rep);

}  // namespace apery
