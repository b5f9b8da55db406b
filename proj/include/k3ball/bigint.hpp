#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace k3ball {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<Rational>;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Non-negative residue of a modulo m (m > 0).
inline BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Representative of x in [0, m) for a rational x and positive integer m.
inline Rational mod(const Rational& x, const BigInt& m) {
  BigInt n = numerator(x), d = denominator(x);
  return Rational(mod(n, m * d), d);
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

inline std::int64_t to_int64(const BigInt& x) { return x.convert_to<std::int64_t>(); }

}  // namespace k3ball
