#include "fmbend/rational.hpp"

#include <cctype>

#include "fmbend/error.hpp"

namespace fmb {
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

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational make_rational(std::string_view numerator, std::string_view denominator) {
  mpz_class num = parse_integer(numerator);
  mpz_class den = parse_integer(denominator);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ratio(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rational(text.substr(0, slash), text.substr(slash + 1));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+' ||
        !is_integer_literal(whole)) {
      throw Error(ErrorCode::ParseError, "malformed decimal: '" + std::string(text) + "'");
    }
    std::string num = std::string(whole) + std::string(frac);
    std::string den = "1" + std::string(frac.size(), '0');
    Rational r = make_rational(num, den);
    if (negative) r = -r;
    return r;
  }
  Rational r(parse_integer(text));
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

int sign(const Rational& value) { return sgn(value); }

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace fmb
