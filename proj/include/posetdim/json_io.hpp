#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetdim/bounds.hpp"
#include "posetdim/multipartite.hpp"
#include "posetdim/solver.hpp"

namespace posetdim::json {

using nlohmann::json;

// Poset documents:
//   {"elements": [...], "relations": [[lo, hi], ...], "parts": [[...], ...]}
// "relations" may be any generating set; "parts" is optional.
struct PosetDocument {
  Poset poset;
  std::optional<std::vector<std::vector<Id>>> parts;
};

/// Throws ParseError for malformed documents and the poset errors for invalid
/// content.
PosetDocument parse_poset(const json& doc);
PosetDocument parse_poset(const std::string& text);

/// Throws MissingParts when the document has no "parts".
MultipartitePoset require_multipartite(PosetDocument doc);

/// Relations are written as cover pairs.
json to_json(const Poset& p);
json to_json(const MultipartitePoset& mp);
json to_json(const BipartitePoset& bp);

/// {"orders": [[...], ...]}
Realizer parse_realizer(const json& doc);
json to_json(const Realizer& r);

json to_json(const Certificate& c);
json to_json(const DimensionResult& r);
json to_json(const BoundReport& report);
json to_json(const Embedding& e);

}  // namespace posetdim::json
