#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace gmanvol {

/// Unoriented primitive curve class a·s + b·h on a boundary torus, written
/// in the piece's (section, fiber) basis. Stored canonically: a > 0, or
/// (a, b) = (0, 1) for the fiber itself.
class Slope {
 public:
  /// Canonicalizes (a, b). Throws Error(InvalidSlope) if (a, b) is zero or
  /// not primitive.
  static Slope of(std::int64_t a, std::int64_t b);
  static Slope fiber() { return Slope(0, 1); }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  bool is_fiber() const noexcept { return a_ == 0; }

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  Slope(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}
  std::int64_t a_;
  std::int64_t b_;
};

/// 2×2 integer matrix [[a, b], [c, d]] of a torus gluing. Acts on curve
/// coordinates by column multiplication.
struct GluingMatrix {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  static constexpr GluingMatrix J() { return {0, 1, 1, 0}; }

  std::int64_t determinant() const;
  /// Inverse over the integers; requires determinant ±1.
  GluingMatrix inverse() const;
  GluingMatrix negated() const { return {-a, -b, -c, -d}; }
  /// (a·x + b·y, c·x + d·y), canonicalized. Throws on overflow.
  Slope apply(const Slope& s) const;

  bool is_pm_j() const noexcept {
    return a == 0 && d == 0 && ((b == 1 && c == 1) || (b == -1 && c == -1));
  }

  std::array<std::array<std::int64_t, 2>, 2> rows() const { return {{{a, b}, {c, d}}}; }

  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
  friend auto operator<=>(const GluingMatrix&, const GluingMatrix&) = default;
};

}  // namespace gmanvol
