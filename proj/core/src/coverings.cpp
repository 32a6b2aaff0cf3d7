#include "gmanvol/coverings.hpp"

#include <algorithm>
#include <set>

namespace gmanvol {

std::string_view to_string(SeparableReason r) noexcept {
  switch (r) {
    case SeparableReason::ProductEpimorphism: return "product_epimorphism";
    case SeparableReason::FiberDegreeOne: return "fiber_degree_one";
  }
  return "unknown";
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t next_prime_above(std::int64_t n) noexcept {
  std::int64_t c = n < 2 ? 2 : n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

CoveredSurface riemann_hurwitz_genus(std::int64_t genus, std::int64_t boundary, std::int64_t q,
                                     BoundaryOrder order) {
  if (genus < 2 || boundary < 1 || q < 1) {
    throw Error(ErrorCode::InvalidInvariants,
                "covering surface needs genus >= 2, boundary >= 1 and degree >= 1");
  }
  if (order == BoundaryOrder::Trivial) {
    return {1 + q * (genus - 1), q * boundary};
  }
  // 2(g_q - g) = (2g + p - 2)(q - 1)
  const std::int64_t twice = (2 * genus + boundary - 2) * (q - 1);
  if (twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus,
                "no connected degree-" + std::to_string(q) + " cover with connected boundary lifts of a genus-" +
                    std::to_string(genus) + " surface with " + std::to_string(boundary) +
                    " boundary circles");
  }
  return {genus + twice / 2, boundary};
}

namespace {

GraphManifold canonical_copy(const GraphManifold& gm) {
  GraphManifold out = gm;
  canonicalize(out);
  return out;
}

void require_prime(std::int64_t q) {
  if (!is_prime(q)) {
    throw Error(ErrorCode::NotPrime, "covering degree parameter " + std::to_string(q) +
                                         " is not prime");
  }
}

// Sorts the covering graph and carries the edge -> base edge map along.
void finish(CoveredGraph& cov, std::vector<std::size_t> base_of_edge) {
  const auto order = canonicalize(cov.manifold);
  cov.torus_map.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) cov.torus_map[i] = base_of_edge[order[i]];
}

}  // namespace

CoveredGraph characteristic_cover(const GraphManifold& input, std::int64_t q) {
  require_prime(q);
  const auto gm = canonical_copy(input);
  require_valid(gm);

  std::int64_t max_boundary = 0;
  for (const auto& p : gm.pieces) {
    if (p.boundary < 2) {
      throw Error(ErrorCode::BoundaryCountTooSmall,
                  "piece '" + p.id +
                      "' has a single boundary torus; its boundary circle maps to zero in "
                      "any abelian quotient, so no characteristic cover of this shape exists",
                  "apply a genus-raising cover centered at a neighbour first to multiply its "
                  "boundary tori");
    }
    max_boundary = std::max(max_boundary, p.boundary);
  }
  if (q <= max_boundary) {
    throw Error(ErrorCode::PrimeTooSmall, "prime " + std::to_string(q) +
                                              " must exceed the largest boundary count " +
                                              std::to_string(max_boundary));
  }

  CoveredGraph cov;
  auto& cert = cov.certificate;
  cert.total_degree = q * q;
  cert.characteristic_level = q;
  cert.separable = true;
  cert.separable_reason = SeparableReason::ProductEpimorphism;

  for (const auto& p : gm.pieces) {
    const auto up = riemann_hurwitz_genus(p.genus, p.boundary, q, BoundaryOrder::Full);
    cov.manifold.pieces.push_back({p.id, up.genus, up.boundary});
    PieceLift lift;
    lift.over = p.id;
    lift.degree = q * q;
    lift.vertical_degree = q;
    lift.horizontal_degree = q;
    lift.genus_up = up.genus;
    lift.boundary_up = up.boundary;
    for (std::int64_t s = 0; s < p.boundary; ++s) lift.slot_over.push_back(s);
    cert.per_piece.emplace(p.id, std::move(lift));
  }
  std::vector<std::size_t> base_of_edge;
  for (std::size_t i = 0; i < gm.edges.size(); ++i) {
    cov.manifold.edges.push_back(gm.edges[i]);
    base_of_edge.push_back(i);
    cert.tori.push_back({1, q * q});
  }
  finish(cov, std::move(base_of_edge));
  return cov;
}

CoveredGraph genus_raising_cover(const GraphManifold& input, std::string_view center,
                                 std::int64_t q) {
  require_prime(q);
  const auto gm = canonical_copy(input);
  require_valid(gm);
  gm.piece(center);

  const auto adjacent_ids = neighbours(gm, center);
  const std::set<std::string> adjacent(adjacent_ids.begin(), adjacent_ids.end());
  auto copy_id = [](const std::string& id, std::int64_t label) {
    return id + "#" + std::to_string(label);
  };

  CoveredGraph cov;
  auto& cert = cov.certificate;
  cert.total_degree = q;
  cert.characteristic_level = 1;
  cert.separable = true;
  cert.separable_reason = SeparableReason::FiberDegreeOne;

  std::set<std::string> ids;
  auto add_piece = [&](BundlePiece piece, PieceLift lift) {
    if (!ids.insert(piece.id).second) {
      throw Error(ErrorCode::IdCollision,
                  "covering piece id '" + piece.id + "' collides with an existing id");
    }
    cert.per_piece.emplace(piece.id, std::move(lift));
    cov.manifold.pieces.push_back(std::move(piece));
  };

  for (const auto& p : gm.pieces) {
    if (adjacent.count(p.id)) {
      const auto up = riemann_hurwitz_genus(p.genus, p.boundary, q, BoundaryOrder::Trivial);
      PieceLift lift{p.id, q, 1, q, up.genus, up.boundary, {}};
      // covering slot s*q + k lies over base slot s
      for (std::int64_t s = 0; s < p.boundary; ++s) {
        for (std::int64_t k = 0; k < q; ++k) lift.slot_over.push_back(s);
      }
      add_piece({p.id, up.genus, up.boundary}, std::move(lift));
    } else {
      for (std::int64_t k = 0; k < q; ++k) {
        PieceLift lift{p.id, 1, 1, 1, p.genus, p.boundary, {}};
        for (std::int64_t s = 0; s < p.boundary; ++s) lift.slot_over.push_back(s);
        add_piece({copy_id(p.id, k), p.genus, p.boundary}, std::move(lift));
      }
    }
  }

  auto lift_end = [&](const Endpoint& end, std::int64_t label) -> Endpoint {
    if (adjacent.count(end.piece)) return {end.piece, end.slot * q + label};
    return {copy_id(end.piece, label), end.slot};
  };
  std::vector<std::size_t> base_of_edge;
  for (std::size_t i = 0; i < gm.edges.size(); ++i) {
    const auto& e = gm.edges[i];
    for (std::int64_t k = 0; k < q; ++k) {
      cov.manifold.edges.push_back({lift_end(e.tail, k), lift_end(e.head, k), e.matrix});
      base_of_edge.push_back(i);
    }
    cert.tori.push_back({q, 1});
  }
  finish(cov, std::move(base_of_edge));

  for (const auto& v : validate(cov.manifold)) {
    if (v.code == "connectivity") {
      throw Error(ErrorCode::DisconnectedCover, "genus-raising cover came out disconnected");
    }
  }
  return cov;
}

std::vector<Violation> verify_covering_certificate(const CoveredGraph& cov,
                                                   const GraphManifold& base_input) {
  std::vector<Violation> out;
  const auto base = canonical_copy(base_input);
  for (auto v : validate(base)) {
    v.code = "base_invalid";
    out.push_back(std::move(v));
  }
  for (auto v : validate(cov.manifold)) {
    v.message = "covering graph: " + v.message;
    v.code = "cover_invalid";
    out.push_back(std::move(v));
  }
  if (!out.empty()) return out;

  const auto& cert = cov.certificate;
  const auto& up = cov.manifold;
  if (cert.total_degree < 1 || cert.characteristic_level < 1) {
    out.push_back({"degree", "degrees must be positive", ""});
    return out;
  }
  const std::int64_t torus_degree = cert.characteristic_level * cert.characteristic_level;

  // per-piece records
  std::map<std::string, std::int64_t> degree_over;
  for (const auto& p : up.pieces) {
    const auto where = "piece " + p.id;
    auto it = cert.per_piece.find(p.id);
    if (it == cert.per_piece.end()) {
      out.push_back({"piece_record", "covering piece has no certificate record", where});
      continue;
    }
    const auto& lift = it->second;
    const auto* down = base.find(lift.over);
    if (!down) {
      out.push_back({"piece_over", "record points at unknown base piece '" + lift.over + "'",
                     where});
      continue;
    }
    if (lift.genus_up != p.genus || lift.boundary_up != p.boundary) {
      out.push_back({"piece_record", "record disagrees with covering piece", where});
    }
    if (lift.vertical_degree < 1 || lift.horizontal_degree < 1 ||
        lift.degree != lift.vertical_degree * lift.horizontal_degree) {
      out.push_back({"degree_product", "piece degree is not vertical x horizontal", where});
    }
    if (cert.separable_reason == SeparableReason::FiberDegreeOne && lift.vertical_degree != 1) {
      out.push_back({"separable", "fiber-degree-one justification with vertical degree > 1",
                     where});
    }
    if (2 - 2 * lift.genus_up - lift.boundary_up !=
        lift.horizontal_degree * down->base_euler_characteristic()) {
      out.push_back({"chi_multiplicativity", "chi multiplicativity fails", where});
    }
    if (static_cast<std::int64_t>(lift.slot_over.size()) != p.boundary) {
      out.push_back({"slot_over", "slot map has wrong length", where});
    } else {
      std::vector<std::int64_t> count(static_cast<std::size_t>(down->boundary), 0);
      bool in_range = true;
      for (auto s : lift.slot_over) {
        if (s < 0 || s >= down->boundary) {
          in_range = false;
          break;
        }
        ++count[s];
      }
      if (!in_range) {
        out.push_back({"slot_over", "slot map leaves the base piece", where});
      } else if (lift.degree % torus_degree != 0 ||
                 std::any_of(count.begin(), count.end(), [&](std::int64_t c) {
                   return c != lift.degree / torus_degree;
                 })) {
        out.push_back({"boundary_lift_count",
                       "each base boundary torus must have degree/m^2 lifts", where});
      }
    }
    degree_over[lift.over] += lift.degree;
  }
  if (cert.per_piece.size() != up.pieces.size()) {
    out.push_back({"piece_record", "certificate has records for absent pieces", ""});
  }
  for (const auto& p : base.pieces) {
    if (degree_over[p.id] != cert.total_degree) {
      out.push_back({"degree_bookkeeping", "lift degrees do not sum to the total degree",
                     "base piece " + p.id});
    }
  }

  // tori
  if (cov.torus_map.size() != up.edges.size()) {
    out.push_back({"torus_map", "torus map has wrong length", ""});
    return out;
  }
  std::vector<std::int64_t> preimages(base.edges.size(), 0);
  for (std::size_t i = 0; i < up.edges.size(); ++i) {
    const auto j = cov.torus_map[i];
    const auto where = "covering edge " + std::to_string(i);
    if (j >= base.edges.size()) {
      out.push_back({"torus_map", "torus map points past the base edges", where});
      continue;
    }
    ++preimages[j];
    const auto& e = up.edges[i];
    const auto& d = base.edges[j];
    if (e.matrix != d.matrix) {
      out.push_back({"matrix_lift", "covering edge matrix differs from the base matrix", where});
    }
    auto lands_on = [&](const Endpoint& u, const Endpoint& v) {
      auto it = cert.per_piece.find(u.piece);
      if (it == cert.per_piece.end() || it->second.over != v.piece) return false;
      const auto& so = it->second.slot_over;
      return u.slot >= 0 && static_cast<std::size_t>(u.slot) < so.size() && so[u.slot] == v.slot;
    };
    if (!lands_on(e.tail, d.tail) || !lands_on(e.head, d.head)) {
      out.push_back({"torus_endpoints", "covering edge does not lie over its base edge", where});
    }
  }
  if (cert.tori.size() != base.edges.size()) {
    out.push_back({"torus_bookkeeping", "torus records do not match base edges", ""});
    return out;
  }
  for (std::size_t j = 0; j < base.edges.size(); ++j) {
    const auto& t = cert.tori[j];
    const auto where = "base edge " + std::to_string(j);
    if (t.preimages != preimages[j] || t.preimages * t.degree != cert.total_degree) {
      out.push_back({"torus_bookkeeping", "preimages x torus degree differs from total degree",
                     where});
    }
    if (t.degree != torus_degree) {
      out.push_back({"characteristic_level", "torus degree is not m^2", where});
    }
  }
  return out;
}

std::int64_t min_prime_for_ehn_cover(const GraphManifold& gm, std::string_view piece,
                                     std::span<const Slope> slopes) {
  const auto& p = gm.piece(piece);
  auto inv = filled_piece_invariants(gm, piece, slopes);
  if (ehn_horizontal_foliation(inv)) return 1;
  if (p.boundary < 2) {
    throw Error(ErrorCode::BoundaryCountTooSmall,
                "piece '" + p.id + "' needs a characteristic cover but has a single boundary torus",
                "apply a genus-raising cover centered at a neighbour first");
  }
  // Covered genus grows with q and the criterion is monotone in genus.
  for (std::int64_t q = next_prime_above(p.boundary);; q = next_prime_above(q)) {
    inv.genus = riemann_hurwitz_genus(p.genus, p.boundary, q, BoundaryOrder::Full).genus;
    if (ehn_horizontal_foliation(inv)) return q;
  }
}

}  // namespace gmanvol
