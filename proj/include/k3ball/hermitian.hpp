#pragma once

#include "k3ball/cyclotomic.hpp"
#include "k3ball/disc_form.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace k3ball {

/// T = U + V + A4 + A4 viewed as a free Z[z]-module of rank 3, z acting by rho,
/// with the hermitian form
///   h(x, y) = (2 / (5 + sqrt 5)) * sum_i z^i <x, rho^i y>.
class HermitianModule {
 public:
  HermitianModule();

  const IntLattice& lattice() const { return lattice_; }
  const Isometry& rho() const { return rho_; }
  /// e, e1 of the first A4, e1 of the second A4.
  const std::vector<LatticeVec>& zbasis() const { return zbasis_; }
  /// rho^k as a matrix, k taken mod 5.
  const IntMatrix& rho_power(long k) const;

  Cyclotomic h(const LatticeVec& x, const LatticeVec& y) const;
  /// The integers <x, rho^i y>, i = 0..4.
  std::array<BigInt, 5> orbit_pairings(const LatticeVec& x, const LatticeVec& y) const;

  /// lambda * x = sum c_i rho^i x; throws std::domain_error unless lambda is in Z[z].
  LatticeVec zeta_mul(const Cyclotomic& lambda, const LatticeVec& x) const;

  /// sum_{i=0..3} (i+1) rho^i(x) / 5, an element of T*.
  RationalVec phi(const LatticeVec& x) const;

  /// 12 x 12 matrix whose columns are rho^j(b_i), i over zbasis, j = 0..3.
  IntMatrix orbit_matrix() const;
  /// h(b_i, b_j) on zbasis.
  Matrix<Cyclotomic> gram() const;

  std::shared_ptr<const DiscForm> disc() const { return disc_; }

 private:
  IntLattice lattice_;
  Isometry rho_;
  std::vector<LatticeVec> zbasis_;
  std::array<IntMatrix, 5> powers_;
  std::array<IntMatrix, 5> gram_powers_;  // G * rho^i
  Cyclotomic prefactor_;
  std::shared_ptr<const DiscForm> disc_;
};

const HermitianModule& hermitian_module();

/// v -> v - (-1 + sign*z) h(v, a) a; sign is +1 or -1. Requires h(a, a) == -1,
/// otherwise std::invalid_argument.
Isometry hermitian_reflection(const HermitianModule& m, const LatticeVec& a, int sign);

/// Integer test for h(a, a) == -1: a^2 = -2, <a, rho a> = 1, <a, rho^2 a> = 0.
bool is_unit_norm_vector(const HermitianModule& m, const LatticeVec& a);

enum class GammaClass { GammaPrime, Gamma, Neither };
/// Gamma: commutes with rho. GammaPrime: additionally trivial on A_T.
GammaClass gamma_membership(const HermitianModule& m, const Isometry& g);
std::string to_string(GammaClass c);

}  // namespace k3ball
