#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qflow {

/// Exact rational number. GMP keeps every value canonical: the denominator is
/// positive and coprime to the numerator after each arithmetic operation.
using Rational = mpq_class;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "3", "-7", "2/3" or "-3/2". Whitespace is not accepted.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace qflow
