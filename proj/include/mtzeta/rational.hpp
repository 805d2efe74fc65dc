#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtzeta {

// Exact arbitrary-precision arithmetic used for all symbolic coefficients and
// truncated sums.  A rational is always kept in lowest terms with a positive
// denominator; arithmetic never rounds.
using integer  = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer numerator(const rational& q) {
  return boost::multiprecision::numerator(q);
}

inline integer denominator(const rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const rational& q) { return denominator(q) == 1; }

// Renders "p" when the denominator is 1 and "p/q" otherwise, with the sign on
// the numerator.  Inverse of parse_rational for every canonical value.
inline std::string to_string(const rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) {
    out += '/';
    out += denominator(q).str();
  }
  return out;
}

// Parses "p" or "p/q" where p is an optionally signed decimal integer and q is
// an unsigned decimal integer.  Throws std::invalid_argument on anything else
// (empty input, stray characters, missing digits, zero denominator).
inline rational parse_rational(std::string_view text) {
  const auto fail = [&](const char* why) {
    throw std::invalid_argument("parse_rational: " + std::string(why) + " in \"" +
                                std::string(text) + "\"");
  };
  std::size_t pos = 0;
  const auto scan_digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };

  if (text.empty()) fail("empty input");
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  integer num(scan_digits());
  integer den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') fail("unexpected character");
    ++pos;
    den = integer(scan_digits());
    if (pos != text.size()) fail("unexpected trailing characters");
    if (den == 0) fail("zero denominator");
  }
  if (negative) num = -num;
  return rational(num, den);
}

// base^exponent for any integer exponent; negative exponents invert, so the
// base must be nonzero for them.
inline rational pow_exact(const rational& base, int exponent) {
  if (exponent < 0 && base == 0) {
    throw std::invalid_argument("pow_exact: zero base with negative exponent");
  }
  bool invert = exponent < 0;
  unsigned long n = invert ? -static_cast<long>(exponent) : exponent;
  rational result(1);
  rational square = base;
  while (n > 0) {
    if (n & 1) result *= square;
    square *= square;
    n >>= 1;
  }
  if (invert) {
    // Flip num/den keeping the denominator positive (the backend rejects
    // negative denominators in this constructor).
    integer num = numerator(result);
    integer den = denominator(result);
    result = num < 0 ? rational(-den, -num) : rational(den, num);
  }
  return result;
}

// n^exponent as an exact integer; used for the denominators of truncated sums.
inline integer int_pow(long base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("int_pow: negative exponent");
  return boost::multiprecision::pow(integer(base), static_cast<unsigned>(exponent));
}

// 1 / n^exponent, the basic building block of every truncated series term.
inline rational reciprocal_power(long base, int exponent) {
  if (base < 1) throw std::invalid_argument("reciprocal_power: base must be >= 1");
  return rational(integer(1), int_pow(base, exponent));
}

}  // namespace mtzeta
