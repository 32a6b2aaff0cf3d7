#include <nlohmann/json.hpp>

#include "gmanvol/graph.hpp"

namespace gmanvol {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& member(const json& obj, const char* key, const std::string& ctx) {
  if (!obj.is_object()) fail(ctx + " is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ctx + " lacks key '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& ctx) {
  if (!v.is_number_integer()) fail(ctx + " must be an integer");
  return v.get<std::int64_t>();
}

Endpoint as_endpoint(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_string()) {
    fail(ctx + " must be [<piece id>, <slot>]");
  }
  return {v[0].get<std::string>(), as_int(v[1], ctx + " slot")};
}

GluingMatrix as_matrix(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_array() || v[0].size() != 2 ||
      !v[1].is_array() || v[1].size() != 2) {
    fail(ctx + " must be a 2x2 integer matrix");
  }
  return {as_int(v[0][0], ctx), as_int(v[0][1], ctx), as_int(v[1][0], ctx),
          as_int(v[1][1], ctx)};
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

GraphManifold graph_from_json(const json& doc) {
  GraphManifold gm;
  const auto& pieces = member(doc, "pieces", "document");
  if (!pieces.is_array()) fail("'pieces' must be an array");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto ctx = "pieces[" + std::to_string(i) + "]";
    const auto& id = member(pieces[i], "id", ctx);
    if (!id.is_string()) fail(ctx + ".id must be a string");
    gm.pieces.push_back({id.get<std::string>(), as_int(member(pieces[i], "genus", ctx), ctx + ".genus"),
                         as_int(member(pieces[i], "boundary", ctx), ctx + ".boundary")});
  }
  const auto& edges = member(doc, "edges", "document");
  if (!edges.is_array()) fail("'edges' must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto ctx = "edges[" + std::to_string(i) + "]";
    gm.edges.push_back({as_endpoint(member(edges[i], "tail", ctx), ctx + ".tail"),
                        as_endpoint(member(edges[i], "head", ctx), ctx + ".head"),
                        as_matrix(member(edges[i], "matrix", ctx), ctx + ".matrix")});
  }
  return gm;
}

json graph_to_json(const GraphManifold& gm) {
  GraphManifold sorted = gm;
  canonicalize(sorted);
  json pieces = json::array();
  for (const auto& p : sorted.pieces) {
    pieces.push_back({{"id", p.id}, {"genus", p.genus}, {"boundary", p.boundary}});
  }
  json edges = json::array();
  for (const auto& e : sorted.edges) {
    edges.push_back({{"tail", json::array({e.tail.piece, e.tail.slot})},
                     {"head", json::array({e.head.piece, e.head.slot})},
                     {"matrix", json::array({json::array({e.matrix.a, e.matrix.b}),
                                             json::array({e.matrix.c, e.matrix.d})})}});
  }
  return {{"pieces", std::move(pieces)}, {"edges", std::move(edges)}};
}

GraphManifold parse_graph_unchecked(std::string_view text) {
  auto gm = graph_from_json(parse_json_text(text));
  canonicalize(gm);
  return gm;
}

GraphManifold parse_graph(std::string_view text) {
  auto gm = parse_graph_unchecked(text);
  require_valid(gm);
  return gm;
}

std::string serialize_graph(const GraphManifold& gm) { return graph_to_json(gm).dump(); }

}  // namespace gmanvol
