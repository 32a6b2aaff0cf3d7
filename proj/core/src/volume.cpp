#include "gmanvol/volume.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace gmanvol {

using nlohmann::json;

std::string_view to_string(VolumeCase c) noexcept {
  switch (c) {
    case VolumeCase::NonzeroAbsoluteEuler: return "e_nonzero";
    case VolumeCase::ZeroAbsoluteEulerPMJ: return "e_zero_pmj";
  }
  return "unknown";
}

PiSquared cs_of_filled_piece(const SeifertInvariants& inv) {
  if (!ehn_horizontal_foliation(inv)) {
    throw Error(ErrorCode::EhnFails,
                "filled piece of genus " + std::to_string(inv.genus) +
                    " carries no horizontal foliation; no flat connection to evaluate");
  }
  return {2 * euler_number(inv)};
}

PiSquared gv_of_certified_connection(const PiSquared& cs) { return {2 * cs.coefficient}; }

std::int64_t admissible_characteristic_prime(const GraphManifold& gm, std::int64_t wanted) {
  std::int64_t max_boundary = 0;
  for (const auto& p : gm.pieces) max_boundary = std::max(max_boundary, p.boundary);
  const auto floor_prime = next_prime_above(max_boundary);
  return std::max(wanted, floor_prime);
}

namespace {

GraphManifold valid_canonical(const GraphManifold& input) {
  GraphManifold gm = input;
  canonicalize(gm);
  require_valid(gm);
  return gm;
}

// Builds the tower for the chosen pieces; returns the covering stage.
const GraphManifold& build_tower(VolumeCertificate& cert, const GraphManifold& gm,
                                 std::int64_t wanted) {
  if (wanted == 1) return gm;
  const auto q = admissible_characteristic_prime(gm, wanted);
  auto cov = characteristic_cover(gm, q);
  auto report = verify_covering_certificate(cov, gm);
  SideCondition sc{"tower_verified", report.empty(), {{"stage", 1}, {"prime", q}}};
  cert.side_conditions.push_back(std::move(sc));
  cert.total_cover_degree *= cov.certificate.total_degree;
  cert.tower.push_back(std::move(cov));
  return cert.tower.back().manifold;
}

SideCondition ehn_condition(const SeifertInvariants& inv, const std::string& piece) {
  const auto sums = ehn_sums(inv.fibers);
  return {"ehn_at_stage",
          ehn_horizontal_foliation(inv),
          {{"piece", piece},
           {"genus", inv.genus},
           {"floor_sum", sums.floor_sum},
           {"ceil_sum", sums.ceil_sum},
           {"upper", 2 * inv.genus - 2},
           {"lower", 2 - 2 * inv.genus}}};
}

SideCondition euler_invariance(const std::string& piece, const Rational& base,
                               const Rational& stage) {
  return {"euler_invariant_under_tower",
          base == stage,
          {{"piece", piece}, {"e_base", to_string(base)}, {"e_stage", to_string(stage)}}};
}

SideCondition zero_contribution(std::vector<std::string> pieces) {
  return {"fiber_killed_pieces_contribute_zero",
          true,
          {{"pieces", std::move(pieces)}, {"gv_pi2", "0"}}};
}

std::int64_t smallest_prime_at_least(std::int64_t n) { return next_prime_above(n - 1); }

// Genus an adjacent piece needs so that any translation-class sum of
// magnitude <= B is a product of that many commutators.
SideCondition adjacent_genus_condition(const GraphManifold& stage, const std::string& piece,
                                       std::int64_t shared, std::int64_t alpha_bound) {
  const auto& p = stage.piece(piece);
  const std::int64_t required = (alpha_bound + 1) / 2 + 1;
  std::int64_t prime = 1;
  std::int64_t raised = p.genus;
  if (p.genus < required) {
    // 1 + q(g - 1) >= required
    prime = smallest_prime_at_least(std::max<std::int64_t>(
        2, ceil_div(required - 1, p.genus - 1)));
    raised = riemann_hurwitz_genus(p.genus, p.boundary, prime, BoundaryOrder::Trivial).genus;
  }
  const TranslationClass bound{make_rational(alpha_bound)};
  const bool realizable = commutator_realizable({&bound, 1}, required);
  return {"adjacent_genus_for_commutators",
          realizable && raised >= required,
          {{"piece", piece},
           {"shared_tori", shared},
           {"alpha_bound", alpha_bound},
           {"inequality", "|sum alpha_T| < 2g - 1"},
           {"required_genus", required},
           {"stage_genus", p.genus},
           {"genus_raising_prime", prime},
           {"raised_genus", raised}}};
}

std::vector<Slope> case2_slopes(const GraphManifold& gm, std::string_view piece,
                                std::string_view other) {
  auto slopes = canonical_framing(gm, piece);
  const auto incidences = slot_incidences(gm, piece);
  for (std::size_t k = 0; k < incidences.size(); ++k) {
    const auto& e = gm.edges[incidences[k].edge];
    const auto& far = incidences[k].at_tail ? e.head.piece : e.tail.piece;
    if (far == other) slopes[k] = Slope::of(1, -1);
  }
  return slopes;
}

void record_slopes(VolumeCertificate& cert, const std::string& piece,
                   const std::vector<Slope>& slopes) {
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    cert.filling_slopes.push_back({piece, static_cast<std::int64_t>(k), slopes[k]});
  }
}

}  // namespace

VolumeCertificate case1_bound(const GraphManifold& input, const VolumeConfig& config) {
  const auto gm = valid_canonical(input);
  if (absolute_euler_number(gm) == 0) {
    throw Error(ErrorCode::WrongCase, "absolute Euler number is zero; use the +-J construction");
  }

  // pieces are sorted by id, so strict > keeps the smallest id on ties
  std::string chosen;
  Rational best = -1;
  Rational best_e = 0;
  for (const auto& p : gm.pieces) {
    const auto e = euler_number(filled_piece_invariants(gm, p.id, canonical_framing(gm, p.id)));
    if (abs(e) > best) {
      best = abs(e);
      best_e = e;
      chosen = p.id;
    }
  }

  VolumeCertificate cert;
  cert.case_tag = VolumeCase::NonzeroAbsoluteEuler;
  cert.chosen = {chosen};

  const auto wanted = min_prime_for_ehn_cover(gm, chosen, canonical_framing(gm, chosen));
  const auto& stage = build_tower(cert, gm, wanted);

  const auto framing = canonical_framing(stage, chosen);
  const auto inv = filled_piece_invariants(stage, chosen, framing);
  const auto e_stage = euler_number(inv);
  record_slopes(cert, chosen, framing);
  cert.filled_euler = {e_stage};
  cert.side_conditions.push_back(ehn_condition(inv, chosen));
  cert.side_conditions.push_back(euler_invariance(chosen, best_e, e_stage));

  cert.chern_simons = cs_of_filled_piece(inv);
  cert.godbillon_vey = gv_of_certified_connection(cert.chern_simons);
  cert.bound = {abs(cert.godbillon_vey.coefficient)};

  const auto adjacent = neighbours(stage, chosen);
  for (const auto& s : adjacent) {
    const auto shared = static_cast<std::int64_t>(edges_between(stage, chosen, s).size());
    cert.side_conditions.push_back(adjacent_genus_condition(stage, s, shared, config.alpha_bound));
  }
  cert.side_conditions.push_back(zero_contribution(adjacent));
  return cert;
}

EulerPair case2_euler_pair(const GraphManifold& gm, std::string_view piece1,
                           std::string_view piece2) {
  if (!is_pm_j_form(gm)) {
    throw Error(ErrorCode::NotPMJ, "some gluing matrix is not +-J");
  }
  gm.piece(piece1);
  gm.piece(piece2);
  const auto shared = edges_between(gm, piece1, piece2);
  if (piece1 == piece2 || shared.empty()) {
    throw Error(ErrorCode::NotAdjacent, "pieces '" + std::string(piece1) + "' and '" +
                                            std::string(piece2) + "' share no torus");
  }
  const auto s1 = case2_slopes(gm, piece1, piece2);
  const auto s2 = case2_slopes(gm, piece2, piece1);
  return {euler_number(filled_piece_invariants(gm, piece1, s1)),
          euler_number(filled_piece_invariants(gm, piece2, s2)),
          static_cast<std::int64_t>(shared.size())};
}

VolumeCertificate case2_bound(const GraphManifold& input, const VolumeConfig& /*config*/) {
  const auto gm = valid_canonical(input);
  if (absolute_euler_number(gm) != 0) {
    throw Error(ErrorCode::WrongCase, "absolute Euler number is nonzero; use the single-piece construction");
  }
  if (!is_pm_j_form(gm)) {
    throw Error(ErrorCode::PMJFormRequired,
                "absolute Euler number is zero but some gluing matrix is not +-J",
                "a finite cover normalizing every gluing matrix to +-J is required first; "
                "that construction is not implemented");
  }

  // adjacent pair sharing the most tori, ties to the lexicographically least pair
  std::map<std::pair<std::string, std::string>, std::int64_t> shared;
  for (const auto& e : gm.edges) {
    auto key = std::minmax(e.tail.piece, e.head.piece);
    ++shared[{key.first, key.second}];
  }
  auto best = shared.begin();
  for (auto it = shared.begin(); it != shared.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  const auto [p1, p2] = best->first;

  VolumeCertificate cert;
  cert.case_tag = VolumeCase::ZeroAbsoluteEulerPMJ;
  cert.chosen = {p1, p2};

  const auto base_pair = case2_euler_pair(gm, p1, p2);
  const auto q1 = min_prime_for_ehn_cover(gm, p1, case2_slopes(gm, p1, p2));
  const auto q2 = min_prime_for_ehn_cover(gm, p2, case2_slopes(gm, p2, p1));
  const auto& stage = build_tower(cert, gm, std::max(q1, q2));

  const auto pair = case2_euler_pair(stage, p1, p2);
  cert.shared_tori = pair.shared_tori;
  cert.filled_euler = {pair.e1, pair.e2};

  Rational cs_magnitude = 0;
  for (const auto& [piece, other] : {std::pair{p1, p2}, std::pair{p2, p1}}) {
    const auto slopes = case2_slopes(stage, piece, other);
    const auto inv = filled_piece_invariants(stage, piece, slopes);
    record_slopes(cert, piece, slopes);
    cert.side_conditions.push_back(ehn_condition(inv, piece));
    cs_magnitude += abs(cs_of_filled_piece(inv).coefficient);
  }
  cert.side_conditions.push_back(euler_invariance(p1, base_pair.e1, pair.e1));
  cert.side_conditions.push_back(euler_invariance(p2, base_pair.e2, pair.e2));

  // (1,-1) on one side of a shared torus is (1,-1) on the other side, so the
  // boundary normal forms (equal dx and dy coefficients) match across it.
  for (auto idx : edges_between(stage, p1, p2)) {
    const auto& e = stage.edges[idx];
    const auto moved = transport_slope(e, Direction::TailToHead, Slope::of(1, -1));
    cert.side_conditions.push_back(
        {"boundary_form_match",
         moved == Slope::of(1, -1),
         {{"edge", idx}, {"slope", json::array({1, -1})},
          {"transported", json::array({moved.a(), moved.b()})}}});
  }

  const Rational r = make_rational(pair.shared_tori);
  cert.side_conditions.push_back(
      {"orientation_convention",
       abs(pair.e1) == r && abs(pair.e2) == r,
       {{"e1", to_string(pair.e1)},
        {"e2", to_string(pair.e2)},
        {"rule", "cs = 2(|e1| + |e2|)"},
        {"note", "under column transport both fillings carry the same sign"}}});

  cert.chern_simons = {cs_magnitude};
  cert.godbillon_vey = gv_of_certified_connection(cert.chern_simons);
  cert.bound = cert.godbillon_vey;

  std::vector<std::string> outer;
  for (const auto& piece : {p1, p2}) {
    for (const auto& n : neighbours(stage, piece)) {
      if (n != p1 && n != p2 && std::find(outer.begin(), outer.end(), n) == outer.end()) {
        outer.push_back(n);
      }
    }
  }
  std::sort(outer.begin(), outer.end());
  cert.side_conditions.push_back(zero_contribution(std::move(outer)));
  return cert;
}

VolumeCertificate volume_lower_bound(const GraphManifold& input, const VolumeConfig& config) {
  const auto gm = valid_canonical(input);
  if (absolute_euler_number(gm) != 0) return case1_bound(gm, config);
  return case2_bound(gm, config);
}

json certificate_to_json(const VolumeCertificate& cert, bool with_decimal) {
  json doc;
  doc["case"] = std::string(to_string(cert.case_tag));
  doc["cover_degree"] = cert.total_cover_degree;
  json tower = json::array();
  for (const auto& stage : cert.tower) tower.push_back(covered_graph_to_json(stage));
  doc["tower"] = std::move(tower);
  if (cert.case_tag == VolumeCase::NonzeroAbsoluteEuler) {
    doc["chosen"] = cert.chosen.empty() ? std::string{} : cert.chosen.front();
  } else {
    doc["chosen"] = {{"pieces", cert.chosen}, {"r", cert.shared_tori}};
  }
  json slopes = json::array();
  for (const auto& f : cert.filling_slopes) {
    slopes.push_back({{"piece", f.piece}, {"slot", f.slot},
                      {"slope", json::array({f.slope.a(), f.slope.b()})}});
  }
  doc["filling_slopes"] = std::move(slopes);
  json euler = json::object();
  for (std::size_t i = 0; i < cert.chosen.size() && i < cert.filled_euler.size(); ++i) {
    euler[cert.chosen[i]] = to_string(cert.filled_euler[i]);
  }
  doc["filled_euler"] = std::move(euler);
  doc["cs_pi2"] = to_string(cert.chern_simons.coefficient);
  doc["gv_pi2"] = to_string(cert.godbillon_vey.coefficient);
  doc["bound_pi2"] = to_string(cert.bound.coefficient);
  doc["asserts"] = "SV(cover) >= bound_pi2 * pi^2";
  json conds = json::array();
  for (const auto& sc : cert.side_conditions) {
    json c = sc.detail;
    c["kind"] = sc.kind;
    c["holds"] = sc.holds;
    conds.push_back(std::move(c));
  }
  doc["side_conditions"] = std::move(conds);
  if (with_decimal) {
    // bound·π² at 12 significant digits, display only
    static const Rational pi_squared_approx = parse_rational(
        "98696044010893586188344909998762/10000000000000000000000000000000");
    doc["bound_decimal"] = to_decimal(cert.bound.coefficient * pi_squared_approx, 12);
  }
  return doc;
}

}  // namespace gmanvol
