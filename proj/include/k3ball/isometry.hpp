#pragma once

#include "k3ball/lattice.hpp"

#include <optional>

namespace k3ball {

/// Integer matrix g with g^T G g == G. Columns are images of basis vectors,
/// so g acts on coordinate vectors by v -> g v.
class Isometry {
 public:
  /// Throws std::invalid_argument unless the matrix preserves the form.
  Isometry(IntLattice lattice, IntMatrix matrix);
  static Isometry identity(const IntLattice& l);
  static Isometry negation(const IntLattice& l);

  const IntLattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }

  LatticeVec apply(const LatticeVec& v) const { return matrix_ * v; }
  RationalVec apply(const RationalVec& v) const { return to_rational(matrix_) * v; }

  bool is_identity() const { return matrix_ == IntMatrix::identity(lattice_.rank()); }
  Isometry power(long k) const;
  Isometry inverse() const;
  /// Order, or nullopt if not finite within `limit`.
  std::optional<long> order(long limit = 1000) const;
  /// Saturated sublattice ker(g - eps), eps = +-1.
  Sublattice eigenlattice(int eps) const;
  bool commutes_with(const Isometry& other) const { return matrix_ * other.matrix_ == other.matrix_ * matrix_; }

  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix_ == b.matrix_; }

 private:
  IntLattice lattice_;
  IntMatrix matrix_;
};

/// Block isometry on a direct sum.
Isometry direct_sum(const Isometry& a, const Isometry& b);

/// s_r(x) = x + <x,r> r for r^2 = -2, or x + <x,r> r / 2 for r^2 = -4 with
/// <r, L> in 2Z. Throws std::invalid_argument otherwise.
Isometry reflection(const IntLattice& l, const LatticeVec& r);

}  // namespace k3ball
