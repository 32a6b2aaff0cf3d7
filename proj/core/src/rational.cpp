#include "gmanvol/rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>

#include "gmanvol/error.hpp"

namespace gmanvol {

namespace mp = boost::multiprecision;

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::ArithmeticOverflow, "rational with zero denominator");
  }
  return Rational(mp::cpp_int(numerator), mp::cpp_int(denominator));
}

std::string to_string(const Rational& value) {
  const auto num = mp::numerator(value);
  const auto den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mp::cpp_int parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mp::cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_int(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  const auto den = parse_int(den_text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "rational with zero denominator '" + std::string(text) + "'");
  }
  return Rational(parse_int(num_text), den);
}

std::string to_decimal(const Rational& value, int digits) {
  using Dec = mp::number<mp::cpp_dec_float<50>>;
  const Dec num(mp::numerator(value));
  const Dec den(mp::denominator(value));
  std::ostringstream os;
  os << std::setprecision(digits) << Dec(num / den);
  return os.str();
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

}  // namespace gmanvol
