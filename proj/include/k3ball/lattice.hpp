#pragma once

#include "k3ball/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3ball {

/// Coordinates of a lattice vector relative to the lattice basis.
using LatticeVec = IntVec;
/// Element of L (x) Q, e.g. a dual vector, in the same coordinates.
using RationalVec = RatVec;

/// Nondegenerate symmetric integral bilinear form on Z^rank.
class IntLattice {
 public:
  IntLattice() = default;
  /// Throws std::invalid_argument for non-square, asymmetric or degenerate
  /// Gram matrices.
  explicit IntLattice(IntMatrix gram, std::string name = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  bool even() const;

  BigInt det() const { return det_; }
  Signature signature() const;

  BigInt inner(const LatticeVec& a, const LatticeVec& b) const { return bilinear(gram_, a, b); }
  BigInt norm(const LatticeVec& a) const { return inner(a, a); }
  Rational inner(const RationalVec& a, const RationalVec& b) const;

  LatticeVec unit(std::size_t i) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string name_;
  BigInt det_ = 1;
};

struct LatticeInvariants {
  BigInt det;
  std::size_t rank = 0;
  Signature signature;
  bool even = false;
};
LatticeInvariants invariants(const IntLattice& l);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b);
IntLattice direct_sum(const std::vector<IntLattice>& parts);
/// Form multiplied by m; throws for m == 0.
IntLattice rescale(const IntLattice& l, const BigInt& m);

/// Dual basis vectors: entry i pairs to delta_ij with basis vector j.
std::vector<RationalVec> dual_basis(const IntLattice& l);

// Standard lattices. Root lattices are negative definite.
IntLattice lattice_U();
IntLattice lattice_V();
IntLattice root_lattice_A(std::size_t n);
IntLattice root_lattice_D(std::size_t n);
IntLattice root_lattice_E(std::size_t n);

/// Parses catalog expressions such as "U+V+A4+A4", "U(2)", "A1(-1)", "E8".
IntLattice catalog_lattice(const std::string& expr);

/// Sublattice spanned by independent vectors of an ambient lattice. The induced
/// form may be degenerate (e.g. an isotropic line), which `degenerate()` reports.
class Sublattice {
 public:
  Sublattice(IntLattice ambient, IntMatrix basis_rows);

  const IntLattice& ambient() const { return ambient_; }
  /// Rows are basis vectors in ambient coordinates.
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  bool degenerate() const { return degenerate_; }
  /// The induced lattice; throws std::domain_error when degenerate.
  IntLattice lattice(std::string name = {}) const;

 private:
  IntLattice ambient_;
  IntMatrix basis_;
  IntMatrix gram_;
  bool degenerate_ = false;
};

/// Error raised for linearly dependent spanning vectors; carries the relation.
class DependentVectorsError : public std::invalid_argument {
 public:
  DependentVectorsError(std::string what, IntVec relation)
      : std::invalid_argument(std::move(what)), relation_(std::move(relation)) {}
  /// Integer coefficients c with sum c_i v_i == 0.
  const IntVec& relation() const { return relation_; }

 private:
  IntVec relation_;
};

Sublattice sublattice(const IntLattice& l, const std::vector<LatticeVec>& vecs);
/// Saturated {v in L : <v, S> = 0}.
Sublattice orthogonal_complement(const IntLattice& l, const Sublattice& s);
/// Index [L : S] for a full-rank sublattice.
BigInt index_of(const IntLattice& l, const Sublattice& s);
/// Saturation of S in L: (S (x) Q) intersected with L.
Sublattice saturation(const IntLattice& l, const Sublattice& s);
/// True iff the two sublattices of the same ambient lattice are equal as sets.
bool same_sublattice(const Sublattice& a, const Sublattice& b);

/// Lattice generated by vectors whose pairwise products are given by a possibly
/// degenerate Gram matrix, i.e. Z^k modulo the radical of the form.
struct GeneratedLattice {
  IntLattice lattice;
  /// Row j: coordinates of generator j in the lattice basis.
  IntMatrix generator_coords;
  /// Generator indices used as basis, when a subset of generators is a Z-basis.
  std::vector<std::size_t> basis_generators;
};
GeneratedLattice generated_lattice(const IntMatrix& generator_gram, std::string name = {});

/// All v (up to sign; first nonzero coordinate positive) with <v,v> == norm in
/// a negative definite lattice, sorted lexicographically. Fincke-Pohst search
/// with exact rational Cholesky bounds.
std::vector<LatticeVec> enumerate_norm_vectors(const IntLattice& l, const BigInt& norm);

/// Gram of {r, rho r, rho^2 r, rho^3 r} for a root r and an order-5 isometry
/// rho with no fixed vectors: true iff negative definite with
/// (m1, m2) = (<r, rho r>, <r, rho^2 r>) in {(1,0), (0,1)}, i.e. an A4 basis.
bool is_a4_orbit_gram(const IntMatrix& gram);

}  // namespace k3ball
