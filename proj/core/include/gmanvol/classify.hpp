#pragma once

// Finiteness of the mapping-degree set D(M, N) over all closed M, for a
// closed prime target N given by Seifert invariants, a decorated graph, or a
// caller-asserted flag for the non-Seifert, non-graph cases.

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "gmanvol/graph.hpp"
#include "gmanvol/seifert.hpp"

namespace gmanvol {

/// Caller asserts N is finitely covered by a torus bundle (Sol, Nil, E³).
struct TorusBundleCovered {};
/// Caller asserts N is hyperbolic or has a hyperbolic JSJ piece.
struct HyperbolicOrContainsHyperbolicPiece {};

using PrimeManifoldDescription =
    std::variant<SeifertInvariants, GraphManifold, TorusBundleCovered,
                 HyperbolicOrContainsHyperbolicPiece>;

enum class Finiteness { Finite, Infinite };

struct FinitenessVerdict {
  Finiteness verdict = Finiteness::Finite;
  std::string reason;

  friend bool operator==(const FinitenessVerdict&, const FinitenessVerdict&) = default;
};

namespace reason {
inline constexpr std::string_view kSl2Geometry = "sl2_geometry_positive_seifert_volume";
inline constexpr std::string_view kCoveredBySphere = "finitely_covered_by_s3";
inline constexpr std::string_view kCoveredByTrivialBundle = "finitely_covered_by_trivial_circle_bundle";
inline constexpr std::string_view kCoveredByTorusBundle = "finitely_covered_by_torus_bundle";
inline constexpr std::string_view kNontrivialGraph = "nontrivial_graph_manifold_virtual_seifert_volume";
inline constexpr std::string_view kSimplicialVolume = "positive_simplicial_volume";
}  // namespace reason

FinitenessVerdict geometry_finiteness(Geometry geom);

/// Graph inputs must validate; throws ValidationError otherwise.
FinitenessVerdict mapping_degree_finiteness(const PrimeManifoldDescription& desc);

/// Accepts {"kind":"seifert","genus":g,"fibers":[[alpha,beta],...]},
/// {"kind":"graph","graph":{...}}, {"kind":"torus_bundle_covered"},
/// {"kind":"hyperbolic"}, or a bare graph document.
PrimeManifoldDescription description_from_json(const nlohmann::json& doc);

nlohmann::json verdict_to_json(const FinitenessVerdict& v);

}  // namespace gmanvol
