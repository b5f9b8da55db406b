#pragma once

#include "k3ball/cyclotomic.hpp"
#include "k3ball/linalg.hpp"
#include "k3ball/lattice.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace k3ball {

using CycVec = std::vector<Cyclotomic>;
using CycMatrix = Matrix<Cyclotomic>;

/// Basis of ker(rho - z^k) in T (x) Q(z), from the reduced row echelon form
/// of rho - z^k: one vector per free column, equal to 1 there.
struct EigenBasis {
  int k = 1;
  std::vector<CycVec> basis;
  std::vector<std::size_t> free_columns;

  /// Coordinates of an eigenvector against `basis`; nullopt if v is not in the span.
  std::optional<CycVec> coordinates(const CycVec& v) const;
};

EigenBasis eigenspace(int k);

/// Reduced row echelon form over Q(z); returns pivot columns.
std::vector<std::size_t> row_reduce(CycMatrix& m);

/// <z, conj(w)> for the integral gram of T, conjugating w coefficientwise.
Cyclotomic eigen_pairing(const CycVec& z, const CycVec& w);

/// Matrix of <z, conj(w)> / 5 on the given vectors.
struct EigenForm {
  CycMatrix matrix;
};
EigenForm eigen_form(const std::vector<CycVec>& vectors);
inline EigenForm eigen_form(const EigenBasis& b) { return eigen_form(b.basis); }

/// Hermitian congruence diagonalization with exact signs under z = exp(4 pi i / 5).
/// `zero` counts a radical; throws std::invalid_argument for a non-hermitian matrix.
Signature eigen_signature(const EigenForm& f);

/// Eigenvector of rho4 on one A4 block (0 or 1) for the eigenvalue z.
CycVec xi_vector(std::size_t block);
/// Eigenvector of rho0 on U + V for the eigenvalue z.
CycVec mu_vector();
/// {mu, xi(0), xi(1)}: a basis of the z-eigenspace on which the form is diagonal.
std::vector<CycVec> diagonal_eigenbasis();

/// Homogeneous point of P(T_z) in the coordinates of diagonal_eigenbasis().
class BallPoint {
 public:
  static BallPoint exact(CycVec coords);
  static BallPoint numeric(std::vector<std::complex<double>> coords);

  bool is_exact() const { return exact_.has_value(); }
  const CycVec& exact_coords() const { return *exact_; }
  std::vector<std::complex<double>> numeric_coords() const;
  /// Vector in T (x) Q(z); exact mode only.
  CycVec ambient() const;

 private:
  std::optional<CycVec> exact_;
  std::vector<std::complex<double>> numeric_;
};

/// Thrown when a numeric-mode test falls within the tolerance band.
class IndeterminateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

constexpr double kNumericBand = 1e-9;

/// <z, conj z> > 0. Throws std::invalid_argument for z = 0.
bool ball_contains(const BallPoint& z);
/// <z, r> == 0 for a (-2)-vector r of T. Throws std::invalid_argument otherwise.
bool hyperplane_contains(const LatticeVec& r, const BallPoint& z);
/// ball_contains && hyperplane_contains.
bool in_discriminant_hyperplane(const LatticeVec& r, const BallPoint& z);

CycVec to_cyclotomic(const LatticeVec& v);
CycVec apply(const IntMatrix& m, const CycVec& v);

}  // namespace k3ball
