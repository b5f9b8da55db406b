#include "k3ball/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace k3ball {

Rational parse_rational(const std::string& text) {
  static const std::regex shape(R"([+-]?[0-9]+(/[+-]?[0-9]+)?)");
  if (!std::regex_match(text, shape)) throw std::invalid_argument("malformed rational \"" + text + "\"");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    BigInt n(text.substr(0, slash));
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational \"" + text + "\"");
  }
}

namespace {

// Reduce a polynomial in z of arbitrary degree to the basis {1, z, z^2, z^3}.
Cyclotomic reduce(const std::vector<Rational>& poly) {
  std::array<Rational, 5> r{};
  for (std::size_t k = 0; k < poly.size(); ++k) r[k % 5] += poly[k];
  return {r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4]};
}

}  // namespace

Cyclotomic Cyclotomic::zeta_power(long k) {
  long e = ((k % 5) + 5) % 5;
  std::vector<Rational> p(5, 0);
  p[static_cast<std::size_t>(e)] = 1;
  return reduce(p);
}

Cyclotomic Cyclotomic::sqrt5() { return {1, 0, 2, 2}; }

bool Cyclotomic::is_integral() const {
  for (const auto& c : c_)
    if (!k3ball::is_integer(c)) return false;
  return true;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  std::vector<Rational> p(7, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) p[i + j] += a.c_[i] * b.c_[j];
  }
  return reduce(p);
}

Cyclotomic Cyclotomic::galois(int j) const {
  if (j < 1 || j > 4) throw std::invalid_argument("Galois exponent must be 1..4");
  std::vector<Rational> p(13, 0);
  for (std::size_t i = 0; i < 4; ++i) p[i * static_cast<std::size_t>(j)] += c_[i];
  return reduce(p);
}

Rational Cyclotomic::norm() const {
  Cyclotomic n = *this * galois(2) * galois(3) * galois(4);
  if (!n.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
  return n[0];
}

Cyclotomic Cyclotomic::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("inverse of zero in Q(zeta5)");
  Cyclotomic rest = galois(2) * galois(3) * galois(4);
  Rational inv = 1 / n;
  return rest * Cyclotomic(inv);
}

std::complex<double> Cyclotomic::embed() const {
  const double theta = 4.0 * std::numbers::pi / 5.0;
  std::complex<double> out{0.0, 0.0};
  for (int k = 0; k < 4; ++k) out += c_[static_cast<std::size_t>(k)].convert_to<double>() * std::polar(1.0, k * theta);
  return out;
}

std::string Cyclotomic::serialize() const {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i)
    s += (i ? "," : "") + numerator(c_[i]).str() + "/" + denominator(c_[i]).str();
  return s;
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  std::array<Rational, 4> c{};
  std::stringstream ss(text);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 4) throw std::invalid_argument("cyclotomic literal needs exactly four coefficients");
    c[i++] = parse_rational(tok);
  }
  if (i != 4) throw std::invalid_argument("cyclotomic literal needs exactly four coefficients");
  return {c[0], c[1], c[2], c[3]};
}

std::string Cyclotomic::pretty() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < 4; ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    std::string mag = to_string(abs(c));
    std::string term;
    if (k == 0) {
      term = mag;
    } else {
      std::string z = k == 1 ? "z" : "z^" + std::to_string(k);
      term = (abs(c) == 1) ? z : mag + "*" + z;
    }
    if (s.empty())
      s = (c < 0 ? "-" : "") + term;
    else
      s += (c < 0 ? "-" : "+") + term;
  }
  return s;
}

RealSubfieldElement::RealSubfieldElement(const Cyclotomic& x) : x_(x) {
  if (!x.is_real()) throw std::domain_error("element " + x.serialize() + " is not in the real subfield");
  // x = c0 + c2 (z^2 + z^3) and z^2 + z^3 = (sqrt5 - 1) / 2.
  p_ = x[0] - x[2] / 2;
  q_ = x[2] / 2;
}

int sign(const RealSubfieldElement& x) {
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt5_part();
  if (q == 0) return p > 0 ? 1 : (p < 0 ? -1 : 0);
  // p + q*sqrt5 == 0 forces p == q == 0 since sqrt5 is irrational, so the
  // bisection below always terminates.
  Rational lo = 2, hi = 3;  // 4 < 5 < 9
  for (int iter = 0; iter < 10000; ++iter) {
    Rational a = p + q * lo, b = p + q * hi;
    if (a > b) std::swap(a, b);
    if (a > 0) return 1;
    if (b < 0) return -1;
    Rational mid = (lo + hi) / 2;
    if (mid * mid < 5)
      lo = mid;
    else
      hi = mid;
  }
  throw std::logic_error("sign refinement did not converge");
}

int sign(const Cyclotomic& x) { return sign(RealSubfieldElement(x)); }

}  // namespace k3ball
