#pragma once

#include "k3ball/bigint.hpp"

#include <array>
#include <string>
#include <vector>

namespace k3ball {

/// (x : y) on P^1 over Q, not both zero. Infinity is (1 : 0).
struct ProjectivePoint {
  Rational x, y;

  ProjectivePoint(Rational x_, Rational y_);
  static ProjectivePoint affine(const Rational& t) { return {t, Rational(1)}; }
  static ProjectivePoint infinity() { return {Rational(1), Rational(0)}; }

  bool is_infinity() const { return y == 0; }
  /// Projective equality x1 y2 == x2 y1.
  bool same_as(const ProjectivePoint& o) const { return x * o.y == o.x * y; }
  std::string to_string() const;
  /// "a/b", an integer, or "inf".
  static ProjectivePoint parse(const std::string& token);
};

/// Ordered five points of P^1.
struct PointConfig {
  std::array<ProjectivePoint, 5> points;

  /// Comma-separated tokens, exactly five.
  static PointConfig parse(const std::string& text);
  /// Multiplicities of coincident points, sorted descending.
  std::vector<int> partition() const;
};

enum class Stability { Stable, Unstable };

struct StabilityClass {
  Stability stability;
  std::vector<int> partition;
};

/// Stable iff no three points coincide.
StabilityClass classify(const PointConfig& c);
std::string to_string(Stability s);
std::string partition_string(const std::vector<int>& partition);

struct CaseLattices {
  std::string picard, transcendental;
};
/// Model names by the number of double points: (S, T), (S1, T1), (S2, T2).
/// Throws std::invalid_argument for an unstable partition.
CaseLattices case_lattices(const std::vector<int>& partition);

struct Monomial {
  std::array<int, 3> exponents;  // x0, x1, x2
  Rational coeff;
};

struct SingularMember {
  Rational root;
  int multiplicity;
  std::string type;  // "I" simple root, "II" double root
};

struct EquationBundle {
  /// (x : y) -> (a x + b y : c x + d y) applied before reading off roots; identity if no point is infinite.
  std::array<Rational, 4> normalization;
  bool normalized = false;
  std::array<Rational, 5> lambdas;
  /// Quadrics sum z_i^2 and sum lambda_i z_i^2 as diagonal coefficient rows.
  std::array<std::array<Rational, 5>, 2> quartic_pencil;
  /// f5 = prod (x1 - lambda_i x2) = sum_k f5[k] x1^(5-k) x2^k.
  std::array<Rational, 6> f5;
  /// Branch sextic x0 (x0^5 - f5(x1, x2)): the line x0 = 0 plus the quintic.
  std::vector<Monomial> sextic;
  std::vector<SingularMember> singular_members;
  bool nodal = false;
  std::string genus_two_fiber = "y^2 = x(x^5 + 1)";
};

/// Throws std::invalid_argument for an unstable configuration.
EquationBundle equations(const PointConfig& c);

/// Coefficients of prod (x1 - r_i x2), highest power of x1 first.
std::vector<Rational> expand_roots(const std::vector<Rational>& roots);

}  // namespace k3ball
