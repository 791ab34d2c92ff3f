#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfdual {

/// Exact rational scalar. GMP keeps every value reduced with a positive
/// denominator, so equality of values is equality of representations.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = MatrixX<Rational>;
using RowVector = RowVectorX<Rational>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}
  /// 1-based column of the offending character within the parsed text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses the token grammar `-?digits(/digits)?`. Zero denominators and any
/// other character (including whitespace) are rejected.
Rational parse_rational(std::string_view token);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline Integer numerator(const Rational& value) {
  return boost::multiprecision::numerator(value);
}
inline Integer denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

}  // namespace selfdual
