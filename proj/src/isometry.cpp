#include "k3ball/isometry.hpp"

#include <stdexcept>

namespace k3ball {

Isometry::Isometry(IntLattice lattice, IntMatrix matrix) : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != lattice_.rank() || matrix_.cols() != lattice_.rank())
    throw std::invalid_argument("isometry matrix has wrong shape");
  if (matrix_.transpose() * lattice_.gram() * matrix_ != lattice_.gram())
    throw std::invalid_argument("matrix does not preserve the bilinear form");
}

Isometry Isometry::identity(const IntLattice& l) { return Isometry(l, IntMatrix::identity(l.rank())); }
Isometry Isometry::negation(const IntLattice& l) { return Isometry(l, -IntMatrix::identity(l.rank())); }

Isometry operator*(const Isometry& a, const Isometry& b) {
  if (a.lattice_.gram() != b.lattice_.gram()) throw std::invalid_argument("composing isometries of different lattices");
  Isometry out = a;
  out.matrix_ = a.matrix_ * b.matrix_;
  return out;
}

Isometry Isometry::inverse() const {
  // g^{-1} = G^{-1} g^T G.
  RatMatrix g = to_rational(lattice_.gram());
  RatMatrix inv = k3ball::inverse(g) * to_rational(matrix_.transpose()) * g;
  Isometry out = *this;
  out.matrix_ = to_integer(inv);
  return out;
}

Isometry Isometry::power(long k) const {
  if (k < 0) return inverse().power(-k);
  Isometry result = identity(lattice_);
  Isometry base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::optional<long> Isometry::order(long limit) const {
  const IntMatrix id = IntMatrix::identity(lattice_.rank());
  IntMatrix p = matrix_;
  for (long k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * matrix_;
  }
  return std::nullopt;
}

Sublattice Isometry::eigenlattice(int eps) const {
  IntMatrix m = matrix_ - BigInt(eps) * IntMatrix::identity(lattice_.rank());
  return Sublattice(lattice_, integer_kernel(m));
}

Isometry direct_sum(const Isometry& a, const Isometry& b) {
  return Isometry(direct_sum(a.lattice(), b.lattice()), block_diagonal(a.matrix(), b.matrix()));
}

Isometry reflection(const IntLattice& l, const LatticeVec& r) {
  const BigInt n = l.norm(r);
  LatticeVec pair = l.gram() * r;  // <e_j, r>
  BigInt divisor;
  if (n == -2) {
    divisor = 1;
  } else if (n == -4) {
    for (const auto& p : pair)
      if (p % 2 != 0) throw std::invalid_argument("(-4)-reflection needs <r, L> in 2Z");
    divisor = 2;
  } else {
    throw std::invalid_argument("reflection vector must have norm -2 or -4, got " + n.str());
  }
  IntMatrix m = IntMatrix::identity(l.rank());
  for (std::size_t j = 0; j < l.rank(); ++j) {
    BigInt c = pair[j] / divisor;
    for (std::size_t i = 0; i < l.rank(); ++i) m(i, j) += c * r[i];
  }
  return Isometry(l, std::move(m));
}

}  // namespace k3ball
