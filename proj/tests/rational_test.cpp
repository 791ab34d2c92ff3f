#include "selfdual/families.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

using namespace selfdual;
using boost::multiprecision::cpp_int;

namespace {

// Schoolbook fraction kept in lowest terms by hand.
struct Fraction {
  cpp_int num;
  cpp_int den;

  Fraction(cpp_int n, cpp_int d) : num(std::move(n)), den(std::move(d)) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const cpp_int g = boost::multiprecision::gcd(num < 0 ? cpp_int(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator+(const Fraction& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Fraction operator-(const Fraction& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction operator/(const Fraction& o) const { return {num * o.den, den * o.num}; }
  std::string text() const { return den == 1 ? num.str() : num.str() + "/" + den.str(); }
};

}  // namespace

TEST(Rational, ParsesGrammar) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890/3")), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformedTokens) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "+1", "1.5", " 1", "1 ", "1/-2", "a", "1//2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << "token '" << bad << "'";
  }
}

TEST(Rational, ParseErrorColumnPointsAtOffendingCharacter) {
  try {
    parse_rational("12x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Rational, FormatParseRoundTrip) {
  Sampler s(1);
  for (int k = 0; k < 500; ++k) {
    const Rational r = s.scalar() * s.scalar() - s.scalar() / s.nonzero_scalar();
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Rational, AgreesWithSchoolbookFractions) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  std::uniform_int_distribution<int> op(0, 3);
  Rational r(1);
  Fraction f(1, 1);
  for (int k = 0; k < 1000; ++k) {
    const int n = num(rng);
    const int d = den(rng);
    const Rational x(n, d);
    const Fraction y(n, d);
    switch (op(rng)) {
      case 0: r = r + x; f = f + y; break;
      case 1: r = r - x; f = f - y; break;
      case 2: r = r * x; f = f * y; break;
      default:
        if (n == 0) continue;
        r = r / x;
        f = f / y;
    }
    ASSERT_EQ(to_string(r), f.text()) << "after " << k << " operations";
    // Keep magnitudes bounded so the run stays quick.
    if (f.den > cpp_int(1) << 200 || f.num > cpp_int(1) << 200 || f.num < -(cpp_int(1) << 200)) {
      r = Rational(1);
      f = Fraction(1, 1);
    }
  }
}
