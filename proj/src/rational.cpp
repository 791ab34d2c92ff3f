#include "selfdual/rational.hpp"

#include <cctype>

namespace selfdual {

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) {
    throw ParseError("expected digit in scalar '" + std::string(text) + "'", pos + 1);
  }
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  if (token.empty()) throw ParseError("empty scalar token", 1);
  std::size_t pos = token[0] == '-' ? 1 : 0;
  const std::size_t num_end = scan_digits(token, pos);
  Integer num(std::string(token.substr(pos, num_end - pos)));
  if (token[0] == '-') num = -num;
  if (num_end == token.size()) return Rational(num);
  if (token[num_end] != '/') {
    throw ParseError("unexpected character in scalar '" + std::string(token) + "'", num_end + 1);
  }
  const std::size_t den_end = scan_digits(token, num_end + 1);
  if (den_end != token.size()) {
    throw ParseError("unexpected character in scalar '" + std::string(token) + "'", den_end + 1);
  }
  Integer den(std::string(token.substr(num_end + 1, den_end - num_end - 1)));
  if (den == 0) throw ParseError("zero denominator in scalar '" + std::string(token) + "'", num_end + 2);
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

}  // namespace selfdual
