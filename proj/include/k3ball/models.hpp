#pragma once

#include "k3ball/disc_form.hpp"

#include <array>
#include <string>
#include <vector>

namespace k3ball {

/// The sixteen (-2)-curves E0..E5, F1..F5, G1..G5 of the K3 surface attached
/// to five distinct points, with their intersection matrix. The form on the
/// generators has rank 10; `span` is the lattice S they generate.
struct CurveConfig {
  IntMatrix gram;  // 16 x 16, generator order E0..E5, F1..F5, G1..G5
  std::vector<std::string> labels;
  GeneratedLattice span;

  static std::size_t E(std::size_t i) { return i; }       // 0 <= i <= 5
  static std::size_t F(std::size_t i) { return 5 + i; }   // 1 <= i <= 5
  static std::size_t G(std::size_t i) { return 10 + i; }  // 1 <= i <= 5

  /// Coordinates in S of a generator.
  LatticeVec coords(std::size_t generator) const { return span.generator_coords.row(generator); }
  /// Coordinates in S (x) Q of sum_j c_j * generator_j.
  RationalVec coords(const std::vector<Rational>& combination) const;
  /// True iff the generator combination is zero in S (lies in the radical).
  bool vanishes(const IntVec& combination) const;
};

/// Built once; construction checks both curve relations, the rank 10 of the
/// span and |det S| = 125, and throws std::logic_error on failure.
const CurveConfig& curve_config();

/// Named lattices: S, S0, T, M, N, S1, S2, T1, T2, L.
IntLattice model(const std::string& name);
/// S0, M, N as sublattices of S.
Sublattice model_sublattice(const std::string& name);
std::vector<std::string> model_names();

/// T = U + V + A4 + A4 with basis e, f, x, y, e1..e4, e1'..e4'.
namespace tbasis {
constexpr std::size_t e = 0, f = 1, x = 2, y = 3;
/// i-th root of the first (block 0) or second (block 1) A4 summand, i = 1..4.
constexpr std::size_t a4(std::size_t block, std::size_t i) { return 4 + 4 * block + (i - 1); }
}  // namespace tbasis

Isometry rho0();  // on U + V
Isometry rho4();  // on A4
Isometry rho();   // rho0 + rho4 + rho4 on T

/// Covering involution on S: F_i <-> G_i, E_i fixed.
Isometry iota_config();
/// Relabeling E_i, F_i, G_i by p (1-based images of 1..5), E0 fixed.
Isometry perm_isometry(const std::array<int, 5>& p);

/// The overlattice of S (+) T glued along an anti-isometry A_S -> A_T.
struct K3Gluing {
  IntLattice s, t;
  DiscMap gamma;
  Overlattice glued;
};
const K3Gluing& k3_gluing();

}  // namespace k3ball
