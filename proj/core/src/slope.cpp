#include "gmanvol/slope.hpp"

#include <numeric>

#include "gmanvol/error.hpp"

namespace gmanvol {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in slope arithmetic");
  }
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in slope arithmetic");
  }
  return r;
}

}  // namespace

Slope Slope::of(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::InvalidSlope, "slope (0,0) is not a curve");
  }
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorCode::InvalidSlope,
                "slope (" + std::to_string(a) + "," + std::to_string(b) + ") is not primitive");
  }
  if (a < 0 || (a == 0 && b < 0)) return Slope(-a, -b);
  return Slope(a, b);
}

std::string Slope::str() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

std::int64_t GluingMatrix::determinant() const {
  std::int64_t ad = 0;
  std::int64_t bc = 0;
  std::int64_t det = 0;
  if (__builtin_mul_overflow(a, d, &ad) || __builtin_mul_overflow(b, c, &bc) ||
      __builtin_sub_overflow(ad, bc, &det)) {
    throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in determinant");
  }
  return det;
}

GluingMatrix GluingMatrix::inverse() const {
  const auto det = determinant();
  if (det == 1) return {d, -b, -c, a};
  if (det == -1) return {-d, b, c, -a};
  throw Error(ErrorCode::ArithmeticOverflow, "matrix is not invertible over the integers");
}

Slope GluingMatrix::apply(const Slope& s) const {
  const auto x = checked_add(checked_mul(a, s.a()), checked_mul(b, s.b()));
  const auto y = checked_add(checked_mul(c, s.a()), checked_mul(d, s.b()));
  return Slope::of(x, y);
}

}  // namespace gmanvol
