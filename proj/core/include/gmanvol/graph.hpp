#pragma once

// Decorated graph of a coordinated graph manifold: vertices are trivial
// circle bundles over surfaces of genus >= 2 with a chosen section, edges are
// the JSJ tori with their 2×2 gluing matrices.
//
// Transport convention: a curve with coordinates (x, y) on the tail side of
// an edge has coordinates A·(x, y)ᵀ on the head side, and A⁻¹·(x, y)ᵀ the
// other way. Every module uses this one convention.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gmanvol/error.hpp"
#include "gmanvol/rational.hpp"
#include "gmanvol/seifert.hpp"
#include "gmanvol/slope.hpp"

namespace gmanvol {

struct BundlePiece {
  std::string id;
  std::int64_t genus = 2;
  std::int64_t boundary = 1;

  /// Euler characteristic 2 - 2g - p of the base surface.
  std::int64_t base_euler_characteristic() const { return 2 - 2 * genus - boundary; }

  friend bool operator==(const BundlePiece&, const BundlePiece&) = default;
};

struct Endpoint {
  std::string piece;
  std::int64_t slot = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
  Endpoint tail;
  Endpoint head;
  GluingMatrix matrix;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct GraphManifold {
  std::vector<BundlePiece> pieces;
  std::vector<Edge> edges;

  const BundlePiece* find(std::string_view id) const;
  /// Throws Error(UnknownPiece).
  const BundlePiece& piece(std::string_view id) const;

  friend bool operator==(const GraphManifold&, const GraphManifold&) = default;
};

enum class Direction { TailToHead, HeadToTail };

/// Incidence of one boundary slot: the edge using it and which end.
struct SlotIncidence {
  std::size_t edge = 0;
  bool at_tail = true;
};

/// Sorts pieces by id and edges by (tail, head, matrix). Returns the
/// permutation applied to edges: result[new_index] = old_index.
std::vector<std::size_t> canonicalize(GraphManifold& gm);

/// Every violated structural invariant; empty iff the graph is a valid
/// decorated graph of a non-trivial graph manifold.
std::vector<Violation> validate(const GraphManifold& gm);

/// Throws Error(ValidationError) carrying the violations, if any.
void require_valid(const GraphManifold& gm);

/// Per-slot incidences of `piece` in slot order. Requires exact slot
/// bookkeeping (each slot used once); throws ValidationError otherwise.
std::vector<SlotIncidence> slot_incidences(const GraphManifold& gm, std::string_view piece);

/// Ids of the pieces sharing at least one torus with `piece`, sorted.
std::vector<std::string> neighbours(const GraphManifold& gm, std::string_view piece);

/// Indices of the edges joining `p` and `q` in either direction.
std::vector<std::size_t> edges_between(const GraphManifold& gm, std::string_view p,
                                       std::string_view q);

Slope transport_slope(const Edge& edge, Direction direction, const Slope& s);

/// For each boundary slot of `piece`, the adjacent piece's fiber expressed
/// in this piece's basis.
std::vector<Slope> canonical_framing(const GraphManifold& gm, std::string_view piece);

SeifertInvariants filled_piece_invariants(const GraphManifold& gm, std::string_view piece,
                                          std::span<const Slope> slopes);

/// Sum over pieces of |e| of the canonically framed filling.
Rational absolute_euler_number(const GraphManifold& gm);

bool is_pm_j_form(const GraphManifold& gm);

// --- JSON exchange format -------------------------------------------------

/// Structural decode only (types, shapes); no invariant checks. Throws
/// Error(ParseError).
GraphManifold graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const GraphManifold& gm);

/// Decode, canonicalize and validate. Throws ParseError or ValidationError.
GraphManifold parse_graph(std::string_view text);
/// Structural decode and canonicalize without validation (for reporting).
GraphManifold parse_graph_unchecked(std::string_view text);

/// Canonical compact JSON: sorted keys, pieces by id, edges sorted.
std::string serialize_graph(const GraphManifold& gm);

/// Parses text as JSON, mapping syntax errors to Error(ParseError).
nlohmann::json parse_json_text(std::string_view text);

}  // namespace gmanvol
