#pragma once

// Invariants of closed Seifert fibered spaces over orientable bases, and the
// inequality tests that decide when a filled piece carries a horizontal
// foliation (equivalently a representation into the universal cover of
// PSL(2,R) sending the fiber to the generator of the center).

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gmanvol/rational.hpp"
#include "gmanvol/slope.hpp"

namespace gmanvol {

/// Filling datum beta/alpha of one exceptional (or framed) fiber.
struct ExceptionalFiber {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;

  friend bool operator==(const ExceptionalFiber&, const ExceptionalFiber&) = default;
  friend auto operator<=>(const ExceptionalFiber&, const ExceptionalFiber&) = default;
};

/// Closed Seifert manifold (g, 0; beta_1/alpha_1, ..., beta_l/alpha_l).
struct SeifertInvariants {
  std::int64_t genus = 0;
  std::vector<ExceptionalFiber> fibers;

  friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

/// Throws Error(InvalidInvariants) unless genus >= 0, every alpha > 0 and
/// gcd(alpha, |beta|) = 1.
void check_invariants(const SeifertInvariants& inv);

enum class Geometry { Spherical, S2xR, Euclidean, Nil, H2xR, SL2tilde };

inline constexpr Geometry kAllGeometries[] = {Geometry::Spherical, Geometry::S2xR,
                                              Geometry::Euclidean, Geometry::Nil,
                                              Geometry::H2xR,      Geometry::SL2tilde};

std::string_view to_string(Geometry g) noexcept;

/// Rotation number class: the element is conjugate to the shift by
/// 2π·value.
struct TranslationClass {
  Rational value;
};

/// Sum of beta_i / alpha_i.
Rational euler_number(const SeifertInvariants& inv);

/// 2 - 2g - sum(1 - 1/alpha_i).
Rational orbifold_euler_char(const SeifertInvariants& inv);

/// Thurston geometry from the sign pair (e, chi_orb).
Geometry geometry_type(const SeifertInvariants& inv);

/// |e| <= 2g - 2 for a circle bundle over the closed genus-g surface.
/// Throws GenusZeroUnsupported for genus 0.
bool milnor_wood_check(std::int64_t euler, std::int64_t genus);

struct EhnSums {
  std::int64_t floor_sum = 0;
  std::int64_t ceil_sum = 0;
};

/// Sums of floor(beta/alpha) and ceil(beta/alpha) over the fibers.
EhnSums ehn_sums(std::span<const ExceptionalFiber> fibers);

/// Floor/ceiling criterion for a horizontal foliation:
///   sum floor(beta_i/alpha_i) <= 2g - 2  and  sum ceil(beta_i/alpha_i) >= 2 - 2g.
/// Only stated for genus >= 1; genus 0 throws GenusZeroUnsupported.
bool ehn_horizontal_foliation(const SeifertInvariants& inv);

/// Smallest genus g >= 1 at which the floor/ceiling criterion holds for the
/// given fibers.
std::int64_t min_genus_for_ehn(std::span<const ExceptionalFiber> fibers);

/// Whether a product of elements conjugate to sh(alpha_i) is a product of
/// `genus` commutators: |sum alpha_i| < 2·genus - 1, strictly.
bool commutator_realizable(std::span<const TranslationClass> alphas, std::int64_t genus);

/// Closed Seifert manifold obtained by Dehn filling a trivial circle bundle
/// over a genus-`genus` surface along `slopes`, one per boundary torus.
/// Throws FiberSlope if a slope is the fiber.
SeifertInvariants fill_framed_piece(std::int64_t genus, std::span<const Slope> slopes);

}  // namespace gmanvol
