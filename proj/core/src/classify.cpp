#include "gmanvol/classify.hpp"

#include <nlohmann/json.hpp>

namespace gmanvol {

using nlohmann::json;

FinitenessVerdict geometry_finiteness(Geometry geom) {
  switch (geom) {
    case Geometry::SL2tilde:
      return {Finiteness::Finite, std::string(reason::kSl2Geometry)};
    case Geometry::Spherical:
      return {Finiteness::Infinite, std::string(reason::kCoveredBySphere)};
    case Geometry::S2xR:
    case Geometry::H2xR:
      return {Finiteness::Infinite, std::string(reason::kCoveredByTrivialBundle)};
    case Geometry::Euclidean:
    case Geometry::Nil:
      return {Finiteness::Infinite, std::string(reason::kCoveredByTorusBundle)};
  }
  return {Finiteness::Infinite, "unknown_geometry"};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

FinitenessVerdict mapping_degree_finiteness(const PrimeManifoldDescription& desc) {
  return std::visit(
      overloaded{
          [](const SeifertInvariants& inv) {
            check_invariants(inv);
            return geometry_finiteness(geometry_type(inv));
          },
          [](const GraphManifold& gm) {
            require_valid(gm);
            return FinitenessVerdict{Finiteness::Finite, std::string(reason::kNontrivialGraph)};
          },
          [](const TorusBundleCovered&) {
            return FinitenessVerdict{Finiteness::Infinite,
                                     std::string(reason::kCoveredByTorusBundle)};
          },
          [](const HyperbolicOrContainsHyperbolicPiece&) {
            return FinitenessVerdict{Finiteness::Finite, std::string(reason::kSimplicialVolume)};
          },
      },
      desc);
}

PrimeManifoldDescription description_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "description must be an object");
  if (!doc.contains("kind")) {
    auto gm = graph_from_json(doc);
    canonicalize(gm);
    return gm;
  }
  if (!doc["kind"].is_string()) throw Error(ErrorCode::ParseError, "'kind' must be a string");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "torus_bundle_covered") return TorusBundleCovered{};
  if (kind == "hyperbolic") return HyperbolicOrContainsHyperbolicPiece{};
  if (kind == "graph") {
    if (!doc.contains("graph")) throw Error(ErrorCode::ParseError, "graph description lacks 'graph'");
    auto gm = graph_from_json(doc["graph"]);
    canonicalize(gm);
    return gm;
  }
  if (kind == "seifert") {
    SeifertInvariants inv;
    if (!doc.contains("genus") || !doc["genus"].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "seifert description needs integer 'genus'");
    }
    inv.genus = doc["genus"].get<std::int64_t>();
    if (doc.contains("fibers")) {
      if (!doc["fibers"].is_array()) throw Error(ErrorCode::ParseError, "'fibers' must be an array");
      for (const auto& f : doc["fibers"]) {
        if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() ||
            !f[1].is_number_integer()) {
          throw Error(ErrorCode::ParseError, "each fiber must be [alpha, beta]");
        }
        inv.fibers.push_back({f[0].get<std::int64_t>(), f[1].get<std::int64_t>()});
      }
    }
    return inv;
  }
  throw Error(ErrorCode::ParseError, "unknown description kind '" + kind + "'");
}

json verdict_to_json(const FinitenessVerdict& v) {
  return {{"verdict", v.verdict == Finiteness::Finite ? "finite" : "infinite"},
          {"reason", v.reason}};
}

}  // namespace gmanvol
