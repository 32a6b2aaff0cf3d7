#include <nlohmann/json.hpp>

#include "gmanvol/coverings.hpp"

namespace gmanvol {

using nlohmann::json;

json covering_certificate_to_json(const CoveringCertificate& cert) {
  json per_piece = json::object();
  for (const auto& [id, lift] : cert.per_piece) {
    per_piece[id] = {{"over", lift.over},
                     {"degree", lift.degree},
                     {"vertical_degree", lift.vertical_degree},
                     {"horizontal_degree", lift.horizontal_degree},
                     {"genus_up", lift.genus_up},
                     {"boundary_up", lift.boundary_up},
                     {"slot_over", lift.slot_over}};
  }
  json tori = json::array();
  for (const auto& t : cert.tori) tori.push_back({{"preimages", t.preimages}, {"degree", t.degree}});
  return {{"total_degree", cert.total_degree},
          {"characteristic_level", cert.characteristic_level},
          {"per_piece", std::move(per_piece)},
          {"separable", cert.separable},
          {"separable_reason", std::string(to_string(cert.separable_reason))},
          {"tori", std::move(tori)}};
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::int64_t int_at(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    fail(std::string("certificate field '") + key + "' missing or not an integer");
  }
  return it->get<std::int64_t>();
}

}  // namespace

CoveringCertificate covering_certificate_from_json(const json& doc) {
  if (!doc.is_object()) fail("certificate must be an object");
  CoveringCertificate cert;
  cert.total_degree = int_at(doc, "total_degree");
  cert.characteristic_level = int_at(doc, "characteristic_level");
  if (!doc.contains("separable") || !doc["separable"].is_boolean()) {
    fail("certificate field 'separable' missing or not a boolean");
  }
  cert.separable = doc["separable"].get<bool>();
  const auto reason = doc.value("separable_reason", std::string{});
  if (reason == to_string(SeparableReason::ProductEpimorphism)) {
    cert.separable_reason = SeparableReason::ProductEpimorphism;
  } else if (reason == to_string(SeparableReason::FiberDegreeOne)) {
    cert.separable_reason = SeparableReason::FiberDegreeOne;
  } else {
    fail("unknown separable_reason '" + reason + "'");
  }
  if (!doc.contains("per_piece") || !doc["per_piece"].is_object()) fail("per_piece must be an object");
  for (const auto& [id, rec] : doc["per_piece"].items()) {
    if (!rec.is_object() || !rec.contains("over") || !rec["over"].is_string()) {
      fail("per_piece record '" + id + "' malformed");
    }
    PieceLift lift;
    lift.over = rec["over"].get<std::string>();
    lift.degree = int_at(rec, "degree");
    lift.vertical_degree = int_at(rec, "vertical_degree");
    lift.horizontal_degree = int_at(rec, "horizontal_degree");
    lift.genus_up = int_at(rec, "genus_up");
    lift.boundary_up = int_at(rec, "boundary_up");
    if (!rec.contains("slot_over") || !rec["slot_over"].is_array()) fail("slot_over must be an array");
    for (const auto& s : rec["slot_over"]) {
      if (!s.is_number_integer()) fail("slot_over entries must be integers");
      lift.slot_over.push_back(s.get<std::int64_t>());
    }
    cert.per_piece.emplace(id, std::move(lift));
  }
  if (!doc.contains("tori") || !doc["tori"].is_array()) fail("tori must be an array");
  for (const auto& t : doc["tori"]) {
    if (!t.is_object()) fail("torus record must be an object");
    cert.tori.push_back({int_at(t, "preimages"), int_at(t, "degree")});
  }
  return cert;
}

json covered_graph_to_json(const CoveredGraph& cov) {
  GraphManifold sorted = cov.manifold;
  const auto order = canonicalize(sorted);
  auto torus_map = cov.torus_map;
  if (torus_map.size() == order.size()) {
    for (std::size_t k = 0; k < order.size(); ++k) torus_map[k] = cov.torus_map[order[k]];
  }
  auto doc = graph_to_json(sorted);
  doc["certificate"] = covering_certificate_to_json(cov.certificate);
  doc["torus_map"] = torus_map;
  return doc;
}

CoveredGraph covered_graph_from_json(const json& doc) {
  CoveredGraph cov;
  cov.manifold = graph_from_json(doc);
  if (!doc.contains("certificate")) fail("covered graph lacks 'certificate'");
  cov.certificate = covering_certificate_from_json(doc["certificate"]);
  if (!doc.contains("torus_map") || !doc["torus_map"].is_array()) fail("torus_map must be an array");
  for (const auto& t : doc["torus_map"]) {
    if (!t.is_number_unsigned()) fail("torus_map entries must be non-negative integers");
    cov.torus_map.push_back(t.get<std::size_t>());
  }
  const auto order = canonicalize(cov.manifold);
  if (order.size() == cov.torus_map.size()) {
    std::vector<std::size_t> remapped;
    for (auto i : order) remapped.push_back(cov.torus_map[i]);
    cov.torus_map = std::move(remapped);
  }
  return cov;
}

}  // namespace gmanvol
