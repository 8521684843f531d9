#pragma once

// Exact integer and rational scalars used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mukaikit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Raised when input violates a domain invariant (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a document or expression cannot be parsed (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline BigInt to_integer(const Rational& q) {
  if (!is_integer(q)) throw ValidationError("expected an integer, got " + q.str());
  return numerator(q);
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string format(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string format(const BigInt& z) { return z.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace mukaikit
