#pragma once

#include "k3ball/isometry.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace k3ball {

/// Coordinates of an element of A_L against the Smith generators, each
/// reduced modulo its invariant factor.
using DiscElement = std::vector<std::int64_t>;

/// Discriminant group A_L = L*/L of an even lattice with q_L (values in Q/2Z,
/// normalized to [0,2)) and b_L (values in Q/Z, normalized to [0,1)).
class DiscForm {
 public:
  explicit DiscForm(IntLattice lattice);

  const IntLattice& ambient() const { return lattice_; }
  /// Nontrivial invariant factors d1 | d2 | ...; empty for unimodular L.
  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  /// Dual-lattice lifts of the generators.
  const std::vector<RationalVec>& generators() const { return gens_; }
  std::size_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }

  DiscElement zero() const { return DiscElement(factors_.size(), 0); }
  DiscElement generator(std::size_t i) const;
  /// Class of a dual vector; throws std::domain_error if x is not in L*.
  DiscElement element_of(const RationalVec& x) const;
  RationalVec lift(const DiscElement& x) const;

  DiscElement add(const DiscElement& a, const DiscElement& b) const;
  DiscElement scale(const DiscElement& a, std::int64_t n) const;
  DiscElement negate(const DiscElement& a) const { return scale(a, -1); }
  DiscElement reduce(DiscElement a) const;

  Rational q(const DiscElement& x) const;
  Rational b(const DiscElement& x, const DiscElement& y) const;
  /// q(x) * exponent as an integer modulo 2 * exponent.
  std::int64_t q_scaled(const DiscElement& x) const;
  /// b(x, y) * exponent as an integer modulo exponent.
  std::int64_t b_scaled(const DiscElement& x, const DiscElement& y) const;

  /// Every element in mixed-radix order (first coordinate fastest).
  std::vector<DiscElement> elements() const;
  std::size_t index(const DiscElement& x) const;
  DiscElement element_at(std::size_t index) const;

 private:
  IntLattice lattice_;
  std::vector<std::int64_t> factors_;
  std::vector<RationalVec> gens_;
  IntMatrix smith_rows_;  // rows of the left Smith transform for nontrivial factors
  std::size_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> q_gen_;               // scaled by exponent, mod 2*exponent
  std::vector<std::vector<std::int64_t>> b_gen_;  // scaled by exponent, mod exponent
};

DiscForm discriminant_group(const IntLattice& l);

Rational q_value(const DiscForm& d, const DiscElement& x);
Rational b_value(const DiscForm& d, const DiscElement& x, const DiscElement& y);

/// Symmetric representative of a value in Q/2Z, in (-1, 1].
Rational symmetric_q(const Rational& q);

/// Counts of q-values over all elements.
struct Census {
  std::size_t zero_element = 0;
  /// Counts of nonzero elements keyed by normalized q in [0,2).
  std::map<Rational, std::size_t> nonzero_by_value;
  std::size_t total() const;
  /// (symmetric value, count) rows: zero element, then by |value|, + before -.
  std::vector<std::pair<Rational, std::size_t>> ordered_rows() const;
};
/// Throws std::length_error above 10^6 elements.
Census census(const DiscForm& d);

/// Group homomorphism between discriminant groups, given on generators.
class DiscMap {
 public:
  DiscMap(std::shared_ptr<const DiscForm> source, std::shared_ptr<const DiscForm> target,
          std::vector<DiscElement> images);
  static DiscMap identity(std::shared_ptr<const DiscForm> d);

  const DiscForm& source() const { return *source_; }
  const DiscForm& target() const { return *target_; }
  std::shared_ptr<const DiscForm> source_ptr() const { return source_; }
  std::shared_ptr<const DiscForm> target_ptr() const { return target_; }
  const std::vector<DiscElement>& images() const { return images_; }

  DiscElement apply(const DiscElement& x) const;
  bool is_identity() const;
  bool is_bijective() const;
  /// q(f x) == sign * q(x) and b(f x, f y) == sign * b(x, y) for all x, y.
  bool preserves_form(int sign) const;
  bool is_isometry() const { return is_bijective() && preserves_form(1); }
  bool is_anti_isometry() const { return is_bijective() && preserves_form(-1); }
  /// Element indices of f(x) in order of source().elements().
  std::vector<std::uint32_t> permutation() const;
  std::optional<long> order(long limit = 10000) const;
  DiscMap inverse() const;

  /// (a * b)(x) = a(b(x)).
  friend DiscMap operator*(const DiscMap& a, const DiscMap& b);
  friend bool operator==(const DiscMap& a, const DiscMap& b) { return a.images_ == b.images_; }

 private:
  std::shared_ptr<const DiscForm> source_, target_;
  std::vector<DiscElement> images_;
};

/// Witness isomorphism q2(f x) == q1(x) (or -q1(x) when anti). Throws
/// std::length_error above 10^4 elements.
std::optional<DiscMap> forms_isomorphic(const DiscForm& d1, const DiscForm& d2, bool anti);

/// All q-preserving automorphisms. Throws std::length_error above 10^3 elements.
std::vector<DiscMap> orthogonal_group(const DiscForm& d);
std::size_t orthogonal_group_order(const DiscForm& d);

/// Action of an isometry of the ambient lattice on A_L.
DiscMap induced_disc_action(const std::shared_ptr<const DiscForm>& d, const Isometry& g);
DiscMap induced_disc_action(const IntLattice& l, const Isometry& g);

/// Order of the subgroup of Aut(A) generated by the given automorphisms.
std::size_t generated_group_order(const std::vector<DiscMap>& gens);

/// Overlattice {(s, t) in S* + T* : gamma(s mod S) == t mod T}.
struct Overlattice {
  IntLattice lattice;
  /// Rows: basis vectors in the coordinates of S (+) T.
  RatMatrix basis;
  std::size_t rank_s = 0;
};
/// Throws std::invalid_argument unless gamma is an anti-isometry A_S -> A_T.
Overlattice glue_overlattice(const IntLattice& s, const IntLattice& t, const DiscMap& gamma);

/// Extension of gS (+) gT to the glued lattice, or nullopt when
/// gamma o gS != gT o gamma on A_S.
std::optional<Isometry> extend_isometry_pair(const Isometry& gs, const Isometry& gt, const DiscMap& gamma,
                                             const Overlattice& glued);

}  // namespace k3ball
