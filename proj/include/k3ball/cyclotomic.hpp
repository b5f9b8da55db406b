#pragma once

#include "k3ball/bigint.hpp"

#include <array>
#include <complex>
#include <string>

namespace k3ball {

/// Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z a primitive fifth root of
/// unity, reduced with z^4 = -(1 + z + z^2 + z^3). The complex embedding used
/// for signs and rendering is z = exp(4*pi*i/5).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int c) : c_{Rational(c), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& c) : c_{c, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {}

  /// z^k for any integer k.
  static Cyclotomic zeta_power(long k);
  static Cyclotomic zeta() { return zeta_power(1); }
  /// sqrt(5) = 1 + 2z^2 + 2z^3 under the fixed embedding.
  static Cyclotomic sqrt5();

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  /// Fixed by conjugation: c1 == 0 and c2 == c3.
  bool is_real() const { return c_[1] == 0 && c_[2] == c_[3]; }
  /// All coefficients integral, i.e. an element of Z[z].
  bool is_integral() const;

  /// Complex conjugation z -> z^4 (every embedding of a CM field agrees).
  Cyclotomic conj() const { return galois(4); }
  /// Field automorphism z -> z^j, j in {1,2,3,4}.
  Cyclotomic galois(int j) const;
  /// Product of all four Galois conjugates; always rational.
  Rational norm() const;
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Floating value at z = exp(4*pi*i/5). Diagnostic output only.
  std::complex<double> embed() const;

  /// "n0/d0,n1/d1,n2/d2,n3/d3", each coefficient reduced.
  std::string serialize() const;
  static Cyclotomic parse(const std::string& text);
  /// Human rendering such as "z^2+z^3" or "-1".
  std::string pretty() const;

 private:
  std::array<Rational, 4> c_{};
};

/// A conjugation-fixed element p + q*sqrt(5) of the real subfield Q(sqrt 5).
class RealSubfieldElement {
 public:
  /// Throws std::domain_error unless x.is_real().
  explicit RealSubfieldElement(const Cyclotomic& x);
  const Cyclotomic& value() const { return x_; }
  const Rational& rational_part() const { return p_; }
  const Rational& sqrt5_part() const { return q_; }

 private:
  Cyclotomic x_;
  Rational p_, q_;
};

/// Exact sign of a real element under z = exp(4*pi*i/5), decided by
/// refining rational enclosures of sqrt(5) until the sign is isolated.
int sign(const RealSubfieldElement& x);
/// Convenience overload; throws std::domain_error for non-real input.
int sign(const Cyclotomic& x);

}  // namespace k3ball
