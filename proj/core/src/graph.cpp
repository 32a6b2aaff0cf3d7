#include "gmanvol/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gmanvol {

const BundlePiece* GraphManifold::find(std::string_view id) const {
  auto it = std::find_if(pieces.begin(), pieces.end(),
                         [&](const BundlePiece& p) { return p.id == id; });
  return it == pieces.end() ? nullptr : &*it;
}

const BundlePiece& GraphManifold::piece(std::string_view id) const {
  if (const auto* p = find(id)) return *p;
  throw Error(ErrorCode::UnknownPiece, "no piece with id '" + std::string(id) + "'");
}

std::vector<std::size_t> canonicalize(GraphManifold& gm) {
  std::sort(gm.pieces.begin(), gm.pieces.end(),
            [](const BundlePiece& x, const BundlePiece& y) { return x.id < y.id; });
  std::vector<std::size_t> order(gm.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return gm.edges[i] < gm.edges[j]; });
  std::vector<Edge> sorted;
  sorted.reserve(gm.edges.size());
  for (auto i : order) sorted.push_back(std::move(gm.edges[i]));
  gm.edges = std::move(sorted);
  return order;
}

namespace {

std::string edge_label(std::size_t index, const Edge& e) {
  return "edge " + std::to_string(index) + " (" + e.tail.piece + ":" +
         std::to_string(e.tail.slot) + " -> " + e.head.piece + ":" +
         std::to_string(e.head.slot) + ")";
}

}  // namespace

std::vector<Violation> validate(const GraphManifold& gm) {
  std::vector<Violation> out;
  if (gm.pieces.empty()) out.push_back({"no_pieces", "graph has no pieces", ""});

  std::map<std::string, const BundlePiece*> by_id;
  for (const auto& p : gm.pieces) {
    if (p.id.empty()) out.push_back({"empty_id", "piece id is empty", ""});
    if (!by_id.emplace(p.id, &p).second) {
      out.push_back({"duplicate_id", "piece id used twice", "piece " + p.id});
    }
    if (p.genus < 2) out.push_back({"genus", "genus below 2", "piece " + p.id});
    if (p.boundary < 1) {
      out.push_back({"boundary", "boundary count below 1", "piece " + p.id});
    }
  }

  if (gm.edges.empty()) out.push_back({"no_edges", "graph has no JSJ torus", ""});

  // slot usage counts per (piece, slot)
  std::map<Endpoint, int> usage;
  for (std::size_t i = 0; i < gm.edges.size(); ++i) {
    const auto& e = gm.edges[i];
    const auto where = edge_label(i, e);
    for (const auto* end : {&e.tail, &e.head}) {
      auto it = by_id.find(end->piece);
      if (it == by_id.end()) {
        out.push_back({"unknown_piece", "edge references unknown piece '" + end->piece + "'",
                       where});
        continue;
      }
      if (end->slot < 0 || end->slot >= it->second->boundary) {
        out.push_back({"slot_range", "boundary slot out of range", where});
        continue;
      }
      ++usage[*end];
    }
    if (e.tail.piece == e.head.piece) {
      out.push_back({"self_loop", "edge joins a piece to itself", where});
    }
    bool det_ok = false;
    try {
      det_ok = e.matrix.determinant() == -1;
    } catch (const Error&) {
      det_ok = false;
    }
    if (!det_ok) {
      out.push_back({"determinant", "gluing matrix determinant is not -1", where});
    }
    if (e.matrix.b == 0) {
      out.push_back({"minimality", "gluing matrix sends the fiber to the adjacent fiber", where});
    }
  }

  for (const auto& p : gm.pieces) {
    if (p.boundary < 1) continue;
    for (std::int64_t s = 0; s < p.boundary; ++s) {
      auto it = usage.find(Endpoint{p.id, s});
      const int n = it == usage.end() ? 0 : it->second;
      const auto where = "piece " + p.id + " slot " + std::to_string(s);
      if (n == 0) out.push_back({"slot_unused", "boundary slot not glued", where});
      if (n > 1) out.push_back({"slot_reused", "boundary slot glued more than once", where});
    }
  }

  // connectivity over the known pieces
  if (!by_id.empty()) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : gm.edges) {
      if (by_id.count(e.tail.piece) && by_id.count(e.head.piece)) {
        adj[e.tail.piece].push_back(e.head.piece);
        adj[e.head.piece].push_back(e.tail.piece);
      }
    }
    std::set<std::string> seen{by_id.begin()->first};
    std::vector<std::string> stack{by_id.begin()->first};
    while (!stack.empty()) {
      auto v = std::move(stack.back());
      stack.pop_back();
      for (const auto& w : adj[v]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != by_id.size()) {
      out.push_back({"connectivity", "underlying graph is disconnected", ""});
    }
  }
  return out;
}

void require_valid(const GraphManifold& gm) {
  auto violations = validate(gm);
  if (violations.empty()) return;
  std::string what = "invalid graph manifold: " + violations.front().code;
  if (!violations.front().where.empty()) what += " at " + violations.front().where;
  throw Error(ErrorCode::ValidationError, what, std::move(violations));
}

std::vector<SlotIncidence> slot_incidences(const GraphManifold& gm, std::string_view piece) {
  const auto& p = gm.piece(piece);
  std::vector<std::optional<SlotIncidence>> slots(static_cast<std::size_t>(p.boundary));
  auto record = [&](const Endpoint& end, std::size_t edge, bool at_tail) {
    if (end.piece != piece) return;
    if (end.slot < 0 || end.slot >= p.boundary || slots[end.slot]) {
      throw Error(ErrorCode::ValidationError,
                  "slot bookkeeping broken on piece '" + p.id + "'");
    }
    slots[end.slot] = SlotIncidence{edge, at_tail};
  };
  for (std::size_t i = 0; i < gm.edges.size(); ++i) {
    record(gm.edges[i].tail, i, true);
    record(gm.edges[i].head, i, false);
  }
  std::vector<SlotIncidence> out;
  out.reserve(slots.size());
  for (const auto& s : slots) {
    if (!s) {
      throw Error(ErrorCode::ValidationError, "unglued slot on piece '" + p.id + "'");
    }
    out.push_back(*s);
  }
  return out;
}

std::vector<std::string> neighbours(const GraphManifold& gm, std::string_view piece) {
  std::set<std::string> out;
  for (const auto& e : gm.edges) {
    if (e.tail.piece == piece && e.head.piece != piece) out.insert(e.head.piece);
    if (e.head.piece == piece && e.tail.piece != piece) out.insert(e.tail.piece);
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> edges_between(const GraphManifold& gm, std::string_view p,
                                       std::string_view q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gm.edges.size(); ++i) {
    const auto& e = gm.edges[i];
    if ((e.tail.piece == p && e.head.piece == q) || (e.tail.piece == q && e.head.piece == p)) {
      out.push_back(i);
    }
  }
  return out;
}

Slope transport_slope(const Edge& edge, Direction direction, const Slope& s) {
  return direction == Direction::TailToHead ? edge.matrix.apply(s)
                                            : edge.matrix.inverse().apply(s);
}

std::vector<Slope> canonical_framing(const GraphManifold& gm, std::string_view piece) {
  std::vector<Slope> out;
  for (const auto& inc : slot_incidences(gm, piece)) {
    const auto& e = gm.edges[inc.edge];
    // The opposite side's fiber, carried across the torus to this side.
    out.push_back(transport_slope(e, inc.at_tail ? Direction::HeadToTail : Direction::TailToHead,
                                  Slope::fiber()));
  }
  return out;
}

SeifertInvariants filled_piece_invariants(const GraphManifold& gm, std::string_view piece,
                                          std::span<const Slope> slopes) {
  const auto& p = gm.piece(piece);
  if (static_cast<std::int64_t>(slopes.size()) != p.boundary) {
    throw Error(ErrorCode::InvalidSlope, "piece '" + p.id + "' needs " +
                                             std::to_string(p.boundary) + " filling slopes, got " +
                                             std::to_string(slopes.size()));
  }
  return fill_framed_piece(p.genus, slopes);
}

Rational absolute_euler_number(const GraphManifold& gm) {
  Rational total = 0;
  for (const auto& p : gm.pieces) {
    const auto framing = canonical_framing(gm, p.id);
    total += abs(euler_number(filled_piece_invariants(gm, p.id, framing)));
  }
  return total;
}

bool is_pm_j_form(const GraphManifold& gm) {
  return std::all_of(gm.edges.begin(), gm.edges.end(),
                     [](const Edge& e) { return e.matrix.is_pm_j(); });
}

}  // namespace gmanvol
