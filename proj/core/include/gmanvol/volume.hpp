#pragma once

// Seifert-volume lower-bound certificates.
//
// For a valid decorated graph N the engine produces an explicit finite cover
// Ñ (a tower of characteristic covers, possibly empty) together with an exact
// lower bound SV(Ñ) >= c·π². The bound is read off the closed-form
// Chern–Simons value 2π²·e of an Euler-number-e filled piece carrying a
// horizontal foliation, doubled to a Godbillon–Vey value.
//
//  * |e|(N) != 0: one piece with e(Σ̂) != 0 is filled along its canonical
//    framing; c = 4·|e(Σ̂)|.
//  * |e|(N) == 0 with all gluings ±J: two adjacent pieces sharing r tori are
//    filled along s - h on the shared tori; c = 8·r.
//
// Pieces adjacent to the chosen ones carry connections whose fiber is sent to
// the identity; their contribution is zero and is recorded, not recomputed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmanvol/coverings.hpp"
#include "gmanvol/graph.hpp"
#include "gmanvol/rational.hpp"
#include "gmanvol/seifert.hpp"

namespace gmanvol {

/// Exact multiple of π².
struct PiSquared {
  Rational coefficient;

  friend bool operator==(const PiSquared&, const PiSquared&) = default;
};

struct VolumeConfig {
  /// Assumed bound on the summed translation classes at the tori of each
  /// piece adjacent to the chosen one (nonzero-|e| case).
  std::int64_t alpha_bound = 1'000'000;
};

enum class VolumeCase { NonzeroAbsoluteEuler, ZeroAbsoluteEulerPMJ };

std::string_view to_string(VolumeCase c) noexcept;

struct FillingSlope {
  std::string piece;
  std::int64_t slot = 0;
  Slope slope = Slope::fiber();

  friend bool operator==(const FillingSlope&, const FillingSlope&) = default;
};

struct SideCondition {
  std::string kind;
  bool holds = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct VolumeCertificate {
  VolumeCase case_tag = VolumeCase::NonzeroAbsoluteEuler;
  std::vector<CoveredGraph> tower;
  std::int64_t total_cover_degree = 1;
  /// One piece in the nonzero case, an adjacent pair otherwise.
  std::vector<std::string> chosen;
  /// Number of tori shared by the chosen pair; 0 in the nonzero case.
  std::int64_t shared_tori = 0;
  std::vector<FillingSlope> filling_slopes;
  /// Euler numbers of the filled chosen pieces, in `chosen` order.
  std::vector<Rational> filled_euler;
  PiSquared chern_simons;
  PiSquared godbillon_vey;
  PiSquared bound;
  std::vector<SideCondition> side_conditions;

  /// The covering graph the bound is about (last tower stage, or the input).
  const GraphManifold& stage(const GraphManifold& input) const {
    return tower.empty() ? input : tower.back().manifold;
  }
};

/// 2·e of a filled piece that satisfies the horizontal foliation criterion.
/// Throws EhnFails otherwise.
PiSquared cs_of_filled_piece(const SeifertInvariants& inv);

/// Godbillon–Vey value of the representation attached to a flat connection:
/// twice its Chern–Simons value.
PiSquared gv_of_certified_connection(const PiSquared& cs);

VolumeCertificate case1_bound(const GraphManifold& gm, const VolumeConfig& config = {});

struct EulerPair {
  Rational e1;
  Rational e2;
  std::int64_t shared_tori = 0;
};

/// Euler numbers of two adjacent pieces filled along (1,-1) on their shared
/// tori and along the canonical framing elsewhere.
EulerPair case2_euler_pair(const GraphManifold& gm, std::string_view piece1,
                           std::string_view piece2);

VolumeCertificate case2_bound(const GraphManifold& gm, const VolumeConfig& config = {});

/// Dispatches on |e|(N).
VolumeCertificate volume_lower_bound(const GraphManifold& gm, const VolumeConfig& config = {});

/// Smallest prime usable for a characteristic cover of `gm` that is at
/// least `wanted` (which already makes the relevant fillings work).
std::int64_t admissible_characteristic_prime(const GraphManifold& gm, std::int64_t wanted);

nlohmann::json certificate_to_json(const VolumeCertificate& cert, bool with_decimal = false);

}  // namespace gmanvol
