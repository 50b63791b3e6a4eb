#pragma once

#include <string>

#include <json.hpp>

namespace irg {

// Deterministic two-space pretty printer that keeps short primitive arrays
// (parts, edges, orderings, intervals) on one line. Newline-terminated.
std::string pretty_document(const nlohmann::ordered_json& doc);

}  // namespace irg
