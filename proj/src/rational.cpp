#include "strval/rational.hpp"

#include "strval/errors.hpp"

#include <cctype>

namespace strval {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt floor_div(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt r = n / d;
  if (n % d != 0 && n < 0) r -= 1;
  return r;
}

BigInt ceil_div(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt r = n / d;
  if (n % d != 0 && n > 0) r += 1;
  return r;
}

}  // namespace strval
