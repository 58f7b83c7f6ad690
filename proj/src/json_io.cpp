#include "posetdim/json_io.hpp"

namespace posetdim::json {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::vector<Id> id_list(const json& node, const std::string& where) {
  if (!node.is_array()) fail(where + " must be an array of ids");
  std::vector<Id> out;
  for (const auto& v : node) {
    if (!v.is_string()) fail(where + " must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

json pairs_to_json(const std::vector<IdPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

PosetDocument parse_poset(const json& doc) {
  if (!doc.is_object()) fail("poset document must be a JSON object");
  if (!doc.contains("elements")) fail("poset document lacks \"elements\"");
  std::vector<Id> elements = id_list(doc.at("elements"), "\"elements\"");

  std::vector<IdPair> relations;
  if (doc.contains("relations")) {
    const auto& rel = doc.at("relations");
    if (!rel.is_array()) fail("\"relations\" must be an array of pairs");
    for (const auto& pair : rel) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        fail("each relation must be a pair of ids");
      relations.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }

  PosetDocument out;
  out.poset = Poset::from_relations(std::move(elements), relations);
  if (doc.contains("parts")) {
    const auto& parts = doc.at("parts");
    if (!parts.is_array()) fail("\"parts\" must be an array of id arrays");
    std::vector<std::vector<Id>> list;
    for (const auto& part : parts) list.push_back(id_list(part, "each part"));
    out.parts = std::move(list);
  }
  return out;
}

PosetDocument parse_poset(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  return parse_poset(doc);
}

MultipartitePoset require_multipartite(PosetDocument doc) {
  if (!doc.parts) throw Error(ErrorKind::MissingParts, "input has no \"parts\" field");
  return MultipartitePoset::from_poset(std::move(*doc.parts), std::move(doc.poset));
}

json to_json(const Poset& p) {
  return json{{"elements", p.ids()}, {"relations", pairs_to_json(p.cover_relations())}};
}

json to_json(const MultipartitePoset& mp) {
  json out = to_json(mp.underlying());
  out["parts"] = mp.parts();
  return out;
}

json to_json(const BipartitePoset& bp) {
  json out = to_json(bp.poset);
  out["parts"] = json::array({bp.lower, bp.upper});
  return out;
}

Realizer parse_realizer(const json& doc) {
  if (!doc.is_object() || !doc.contains("orders") || !doc.at("orders").is_array())
    fail("realizer document must be {\"orders\": [[...], ...]}");
  Realizer r;
  for (const auto& order : doc.at("orders")) r.orders.emplace_back(id_list(order, "each order"));
  return r;
}

json to_json(const Realizer& r) {
  json orders = json::array();
  for (const auto& order : r.orders) orders.push_back(order.sequence());
  return json{{"orders", std::move(orders)}};
}

json to_json(const Certificate& c) {
  return json{{"dimension", c.dimension},
              {"nodes_explored", c.nodes_explored},
              {"max_d_probed", c.max_d_probed},
              {"lower_bound", c.lower_bound},
              {"lower_bound_clique", pairs_to_json(c.lower_bound_clique)},
              {"pairs_to_cover", c.pairs_to_cover}};
}

json to_json(const DimensionResult& r) {
  return json{{"dimension", r.dimension}, {"witness", to_json(r.witness)}, {"certificate", to_json(r.certificate)}};
}

json to_json(const BoundReport& report) {
  json table = json::array();
  for (const auto& row : report.b.table)
    table.push_back({{"i", row.i + 1}, {"j", row.j + 1}, {"dimension", row.dimension}, {"is_exact", row.exact}});
  json out{{"m", report.m},
           {"B", report.b.value},
           {"is_exact", report.b.is_exact},
           {"pairs", std::move(table)},
           {"sum_bound", report.sum_bound},
           {"sum_realizer_size", report.sum_realizer_size},
           {"theorem_coefficient", report.theorem_coefficient},
           {"theorem_bound", report.theorem_bound},
           {"pairwise_bound", report.pairwise_bound},
           {"witness_size", report.witness.size()},
           {"witness", to_json(report.witness)},
           {"fm_envelope", {{"m", report.envelope.m}, {"lower", report.envelope.lower}, {"upper", report.envelope.upper}}}};
  out["exact_dim"] = report.exact_dim ? json(*report.exact_dim) : json(nullptr);
  return out;
}

json to_json(const Embedding& e) {
  json out = json::object();
  for (const auto& [id, coords] : e) out[id] = coords;
  return out;
}

}  // namespace posetdim::json
