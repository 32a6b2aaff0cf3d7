#include "gmanvol/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gmanvol/error.hpp"

namespace gmanvol {

void check_invariants(const SeifertInvariants& inv) {
  if (inv.genus < 0) {
    throw Error(ErrorCode::InvalidInvariants, "negative genus " + std::to_string(inv.genus));
  }
  for (const auto& f : inv.fibers) {
    if (f.alpha <= 0) {
      throw Error(ErrorCode::InvalidInvariants,
                  "fiber multiplicity must be positive, got " + std::to_string(f.alpha));
    }
    if (std::gcd(f.alpha, f.beta) != 1) {
      throw Error(ErrorCode::InvalidInvariants, "fiber invariants " + std::to_string(f.beta) +
                                                    "/" + std::to_string(f.alpha) +
                                                    " are not coprime");
    }
  }
}

std::string_view to_string(Geometry g) noexcept {
  switch (g) {
    case Geometry::Spherical: return "Spherical";
    case Geometry::S2xR: return "S2xR";
    case Geometry::Euclidean: return "Euclidean";
    case Geometry::Nil: return "Nil";
    case Geometry::H2xR: return "H2xR";
    case Geometry::SL2tilde: return "SL2tilde";
  }
  return "Unknown";
}

Rational euler_number(const SeifertInvariants& inv) {
  Rational e = 0;
  for (const auto& f : inv.fibers) e += make_rational(f.beta, f.alpha);
  return e;
}

Rational orbifold_euler_char(const SeifertInvariants& inv) {
  Rational chi = make_rational(2 - 2 * inv.genus);
  for (const auto& f : inv.fibers) chi -= 1 - make_rational(1, f.alpha);
  return chi;
}

Geometry geometry_type(const SeifertInvariants& inv) {
  const bool e_zero = euler_number(inv) == 0;
  const auto chi = orbifold_euler_char(inv);
  if (chi < 0) return e_zero ? Geometry::H2xR : Geometry::SL2tilde;
  if (chi == 0) return e_zero ? Geometry::Euclidean : Geometry::Nil;
  return e_zero ? Geometry::S2xR : Geometry::Spherical;
}

namespace {

void require_positive_genus(std::int64_t genus) {
  if (genus <= 0) {
    throw Error(ErrorCode::GenusZeroUnsupported,
                "criterion requires base genus >= 1, got " + std::to_string(genus));
  }
}

}  // namespace

bool milnor_wood_check(std::int64_t euler, std::int64_t genus) {
  require_positive_genus(genus);
  const std::int64_t abs_e = euler < 0 ? -euler : euler;
  return abs_e <= 2 * genus - 2;
}

EhnSums ehn_sums(std::span<const ExceptionalFiber> fibers) {
  EhnSums sums;
  for (const auto& f : fibers) {
    sums.floor_sum += floor_div(f.beta, f.alpha);
    sums.ceil_sum += ceil_div(f.beta, f.alpha);
  }
  return sums;
}

bool ehn_horizontal_foliation(const SeifertInvariants& inv) {
  require_positive_genus(inv.genus);
  const auto sums = ehn_sums(inv.fibers);
  return sums.floor_sum <= 2 * inv.genus - 2 && sums.ceil_sum >= 2 - 2 * inv.genus;
}

std::int64_t min_genus_for_ehn(std::span<const ExceptionalFiber> fibers) {
  const auto sums = ehn_sums(fibers);
  // floor_sum <= 2g - 2  <=>  g >= (floor_sum + 2) / 2
  // ceil_sum  >= 2 - 2g  <=>  g >= (2 - ceil_sum) / 2
  return std::max({std::int64_t{1}, ceil_div(sums.floor_sum + 2, 2),
                   ceil_div(2 - sums.ceil_sum, 2)});
}

bool commutator_realizable(std::span<const TranslationClass> alphas, std::int64_t genus) {
  if (alphas.empty()) {
    throw Error(ErrorCode::EmptyInput, "commutator test needs at least one translation class");
  }
  require_positive_genus(genus);
  Rational total = 0;
  for (const auto& t : alphas) total += t.value;
  return abs(total) < Rational(2 * genus - 1);
}

SeifertInvariants fill_framed_piece(std::int64_t genus, std::span<const Slope> slopes) {
  SeifertInvariants inv;
  inv.genus = genus;
  inv.fibers.reserve(slopes.size());
  for (const auto& s : slopes) {
    if (s.is_fiber()) {
      throw Error(ErrorCode::FiberSlope, "cannot fill along the fiber slope " + s.str());
    }
    // Slopes are stored with a > 0 already.
    inv.fibers.push_back({s.a(), s.b()});
  }
  return inv;
}

}  // namespace gmanvol
