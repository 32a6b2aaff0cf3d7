#pragma once

// Finite coverings of decorated graph manifolds, built combinatorially.
//
// Two constructions are provided:
//   * characteristic_cover: a q²-fold cover restricting to the q×q
//     characteristic cover on every JSJ torus. Every piece and torus has a
//     connected preimage; base surfaces are covered with degree q and every
//     boundary circle with degree q.
//   * genus_raising_cover: a q-fold cover, trivial over a chosen center piece
//     and over every torus, that covers each neighbour of the center by a
//     connected bundle over a surface of genus 1 + q(g - 1).
//
// Each construction returns the covering graph together with a certificate
// that verify_covering_certificate re-checks against the base.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gmanvol/graph.hpp"

namespace gmanvol {

/// Order of each boundary circle's lift under the base-surface covering:
/// Full means order q (each circle has one connected preimage), Trivial
/// means order 1 (each circle has q preimages).
enum class BoundaryOrder { Full, Trivial };

struct CoveredSurface {
  std::int64_t genus = 0;
  std::int64_t boundary = 0;

  friend bool operator==(const CoveredSurface&, const CoveredSurface&) = default;
};

/// Genus and boundary count of a connected degree-q cover of the genus-g
/// surface with p boundary circles. Throws NonIntegralGenus when the Full
/// case has no integral solution.
CoveredSurface riemann_hurwitz_genus(std::int64_t genus, std::int64_t boundary, std::int64_t q,
                                     BoundaryOrder order);

/// How one covering piece sits over a base piece.
struct PieceLift {
  std::string over;
  std::int64_t degree = 1;
  std::int64_t vertical_degree = 1;
  std::int64_t horizontal_degree = 1;
  std::int64_t genus_up = 0;
  std::int64_t boundary_up = 0;
  /// slot_over[k] = base slot under covering slot k.
  std::vector<std::int64_t> slot_over;

  friend bool operator==(const PieceLift&, const PieceLift&) = default;
};

/// Why the covering is separable: the piece covers come from a product
/// epimorphism onto (base group) × (fiber group), or have fiber degree one.
enum class SeparableReason { ProductEpimorphism, FiberDegreeOne };

std::string_view to_string(SeparableReason r) noexcept;

/// Preimage bookkeeping of one base torus.
struct TorusLift {
  std::int64_t preimages = 0;
  std::int64_t degree = 0;

  friend bool operator==(const TorusLift&, const TorusLift&) = default;
};

struct CoveringCertificate {
  std::int64_t total_degree = 1;
  /// m such that every torus lift is the m×m characteristic cover.
  std::int64_t characteristic_level = 1;
  std::map<std::string, PieceLift> per_piece;
  bool separable = true;
  SeparableReason separable_reason = SeparableReason::FiberDegreeOne;
  /// Indexed by base edge (canonical order).
  std::vector<TorusLift> tori;

  friend bool operator==(const CoveringCertificate&, const CoveringCertificate&) = default;
};

struct CoveredGraph {
  GraphManifold manifold;
  CoveringCertificate certificate;
  /// torus_map[i] = base edge under covering edge i (canonical orders).
  std::vector<std::size_t> torus_map;

  friend bool operator==(const CoveredGraph&, const CoveredGraph&) = default;
};

bool is_prime(std::int64_t n) noexcept;
/// Smallest prime strictly greater than n.
std::int64_t next_prime_above(std::int64_t n) noexcept;

/// Throws NotPrime, BoundaryCountTooSmall (some piece has one boundary
/// torus) or PrimeTooSmall (q <= largest boundary count), in that order.
CoveredGraph characteristic_cover(const GraphManifold& gm, std::int64_t q);

/// Copies of the center and of every piece not adjacent to it carry labels
/// 0..q-1 and are glued label to label; torus lift k of a neighbour's slot
/// attaches to copy k. Throws NotPrime, UnknownPiece.
CoveredGraph genus_raising_cover(const GraphManifold& gm, std::string_view center, std::int64_t q);

/// Empty iff the certificate's bookkeeping holds as integer identities and
/// every covering edge carries the matrix of the base edge under it.
std::vector<Violation> verify_covering_certificate(const CoveredGraph& cov,
                                                   const GraphManifold& base);

/// Smallest prime q > boundary(piece) whose characteristic cover makes the
/// piece, filled along `slopes`, satisfy the horizontal foliation criterion.
/// Returns 1 when the criterion already holds without covering. Throws
/// BoundaryCountTooSmall when a cover is needed but the piece has a single
/// boundary torus.
std::int64_t min_prime_for_ehn_cover(const GraphManifold& gm, std::string_view piece,
                                     std::span<const Slope> slopes);

nlohmann::json covering_certificate_to_json(const CoveringCertificate& cert);
CoveringCertificate covering_certificate_from_json(const nlohmann::json& doc);

/// Graph document plus "certificate" and "torus_map".
nlohmann::json covered_graph_to_json(const CoveredGraph& cov);
CoveredGraph covered_graph_from_json(const nlohmann::json& doc);

}  // namespace gmanvol
