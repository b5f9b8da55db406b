#pragma once

#include "k3ball/matrix.hpp"

#include <optional>

namespace k3ball {

/// Fraction-free Bareiss determinant.
BigInt determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

/// Rational basis (as rows) of {v : m v = 0}.
RatMatrix rational_kernel(const RatMatrix& m);

/// Solution x of m x = b for square nonsingular m.
RatVec solve(const RatMatrix& m, const RatVec& b);

/// Row Hermite normal form with unimodular transform: transform * input == form.
/// The first `rank` rows of `form` are nonzero, the rest are zero.
struct Hermite {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
};
Hermite hermite_rows(const IntMatrix& m);

/// Z-basis (rows) of the module spanned by the rows of m.
IntMatrix row_span_basis(const IntMatrix& m);

/// Saturated Z-basis (rows) of {v in Z^n : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Smith normal form: left * input * right == diagonal, each diagonal entry
/// non-negative and dividing the next. Both transforms are unimodular.
struct Smith {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};
Smith smith_form(const IntMatrix& m);

/// Inertia of a symmetric matrix under rational congruence.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const RatMatrix& symmetric);
inline Signature signature(const IntMatrix& symmetric) { return signature(to_rational(symmetric)); }

/// True iff every leading principal minor of -m is positive.
bool is_negative_definite(const IntMatrix& m);
bool is_positive_definite(const IntMatrix& m);

}  // namespace k3ball
