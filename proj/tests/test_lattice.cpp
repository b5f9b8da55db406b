#include "k3ball/isometry.hpp"
#include "k3ball/lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace k3ball;

namespace {

std::vector<std::vector<long>> as_long(const std::vector<LatticeVec>& vs) {
  std::vector<std::vector<long>> out;
  for (const auto& v : vs) {
    std::vector<long> w;
    for (const auto& x : v) w.push_back(x.convert_to<long>());
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("catalog invariants") {
  struct Row {
    const char* expr;
    long det;
    int pos, neg;
  };
  for (const Row& r : {Row{"U", -1, 1, 1}, Row{"V", -5, 1, 1}, Row{"A4", 5, 0, 4}, Row{"E8", 1, 0, 8},
                       Row{"D4", 4, 0, 4}, Row{"U+V+A4+A4", 125, 2, 10}, Row{"V+E8+E8", -5, 1, 17},
                       Row{"A1(-1)", 2, 1, 0}, Row{"U(2)", -4, 1, 1}}) {
    CAPTURE(r.expr);
    IntLattice l = catalog_lattice(r.expr);
    CHECK(l.det() == r.det);
    CHECK(l.det() == determinant(l.gram()));
    auto [p, n] = oracle::float_signature(l.gram());
    CHECK(p == r.pos);
    CHECK(n == r.neg);
    CHECK(l.signature().positive == r.pos);
  }
  CHECK_THROWS_AS(catalog_lattice("Q7"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_lattice("E9"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_lattice("U(0)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_lattice("A1(2"), std::invalid_argument);
}

TEST_CASE("gram validation") {
  CHECK_THROWS_AS(IntLattice(IntMatrix{{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(IntLattice(IntMatrix{{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(IntLattice(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("short vectors agree with a brute-force box search") {
  // Box [-5, 5]^n; every vector of these norms lies well inside it.
  for (const char* expr : {"A1", "A2", "A3", "A4", "D4", "A2+A2", "A1+A3", "A1(2)+A2"}) {
    CAPTURE(expr);
    IntLattice l = catalog_lattice(expr);
    for (long norm : {-2L, -4L, -6L}) {
      CAPTURE(norm);
      auto found = as_long(enumerate_norm_vectors(l, norm));
      auto box = oracle::box_vectors(l.gram(), 5, norm);
      CHECK(found == box);
    }
  }
  CHECK(enumerate_norm_vectors(catalog_lattice("A4"), -2).size() == 10);  // 20 roots up to sign
  CHECK(enumerate_norm_vectors(catalog_lattice("D4"), -2).size() == 12);
  CHECK(enumerate_norm_vectors(catalog_lattice("E8"), -2).size() == 120);
  CHECK_THROWS_AS(enumerate_norm_vectors(catalog_lattice("U"), -2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_norm_vectors(catalog_lattice("A2"), 2), std::invalid_argument);
}

TEST_CASE("sublattices, complements, index") {
  IntLattice a4 = catalog_lattice("A4");
  auto s = sublattice(a4, {a4.unit(0), a4.unit(1)});
  auto perp = orthogonal_complement(a4, s);
  CHECK(perp.rank() == 2);
  CHECK((perp.basis() * a4.gram() * s.basis().transpose()).is_zero());
  CHECK(index_of(a4, sublattice(a4, {{2, 0, 0, 0}, a4.unit(1), a4.unit(2), a4.unit(3)})) == 2);
  CHECK_THROWS_AS(sublattice(a4, {a4.unit(0), {2, 0, 0, 0}}), DependentVectorsError);
  try {
    sublattice(a4, {a4.unit(0), {2, 0, 0, 0}});
  } catch (const DependentVectorsError& e) {
    IntVec r = e.relation();
    CHECK(r[0] * 1 + r[1] * 2 == 0);
  }
  auto sat = saturation(a4, sublattice(a4, {{2, 0, 0, 0}}));
  CHECK(same_sublattice(sat, sublattice(a4, {a4.unit(0)})));
  IntLattice u = catalog_lattice("U");
  auto iso = sublattice(u, {u.unit(0)});
  CHECK(iso.degenerate());
  CHECK_THROWS_AS(iso.lattice(), std::domain_error);
}

TEST_CASE("generated lattice drops the radical") {
  // Three vectors a, b, a + b of A2.
  IntMatrix g{{-2, 1, -1}, {1, -2, -1}, {-1, -1, -2}};
  auto gl = generated_lattice(g);
  CHECK(gl.lattice.rank() == 2);
  CHECK(gl.lattice.det() == 3);
  IntMatrix c = gl.generator_coords;
  CHECK(c * gl.lattice.gram() * c.transpose() == g);
}

TEST_CASE("isometries and reflections") {
  IntLattice a4 = catalog_lattice("A4");
  Isometry s = reflection(a4, a4.unit(0));
  CHECK(s.order() == 2);
  CHECK(s.apply(a4.unit(0)) == LatticeVec{-1, 0, 0, 0});
  CHECK_THROWS_AS(reflection(a4, {2, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Isometry(a4, IntMatrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(Isometry(a4, 2 * IntMatrix::identity(4)), std::invalid_argument);
  // Coxeter element of A4 has order 5.
  Isometry c = reflection(a4, a4.unit(0)) * reflection(a4, a4.unit(1)) * reflection(a4, a4.unit(2)) *
               reflection(a4, a4.unit(3));
  CHECK(c.order() == 5);
  CHECK(c.eigenlattice(1).rank() == 0);
  CHECK(c.inverse() * c == Isometry::identity(a4));
  CHECK(Isometry::negation(a4).eigenlattice(-1).rank() == 4);
}

TEST_CASE("a4 orbit gram recognizer") {
  auto toeplitz = [](long m1, long m2) {
    return IntMatrix{{-2, m1, m2, m2}, {m1, -2, m1, m2}, {m2, m1, -2, m1}, {m2, m2, m1, -2}};
  };
  CHECK(is_a4_orbit_gram(toeplitz(1, 0)));
  CHECK(is_a4_orbit_gram(toeplitz(0, 1)));
  CHECK_FALSE(is_a4_orbit_gram(toeplitz(0, 0)));
  CHECK_FALSE(is_a4_orbit_gram(toeplitz(2, -1)));
}

TEST_CASE("direct sums, rescaling, duals") {
  const std::vector<std::string> names{"U", "V", "A1", "A4", "D4", "E6", "E8", "A2(3)"};
  for (const auto& a : names)
    for (const auto& b : names) {
      IntLattice x = catalog_lattice(a), y = catalog_lattice(b), s = direct_sum(x, y);
      CHECK(s.det() == x.det() * y.det());
      CHECK(s.signature().positive == x.signature().positive + y.signature().positive);
      CHECK(s.even() == (x.even() && y.even()));
    }
  IntLattice u = catalog_lattice("U");
  CHECK(rescale(u, 2).gram() == IntMatrix{{0, 2}, {2, 0}});
  CHECK(rescale(u, 1) == u);
  CHECK_THROWS_AS(rescale(u, 0), std::invalid_argument);
  CHECK(rescale(catalog_lattice("A4"), 3).det() == 5 * 81);

  auto du = dual_basis(u);
  CHECK(du[0] == RatVec{0, 1});
  CHECK(dual_basis(catalog_lattice("A1"))[0] == RatVec{Rational(-1, 2)});
  IntLattice a4 = catalog_lattice("A4");
  auto d = dual_basis(a4);
  CHECK(a4.inner(d[0], d[0]) == Rational(-4, 5));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(a4.inner(d[i], to_rational(a4.unit(j))) == Rational(i == j ? 1 : 0));
}

TEST_CASE("index identities") {
  IntLattice e6 = catalog_lattice("E6");
  std::vector<LatticeVec> twice;
  for (std::size_t i = 0; i < 6; ++i) {
    LatticeVec v = e6.unit(i);
    v[i] = 2;
    twice.push_back(v);
  }
  auto s = sublattice(e6, twice);
  CHECK(index_of(e6, s) == 64);
  CHECK(abs(determinant(s.gram())) == abs(e6.det()) * 64 * 64);
  std::vector<LatticeVec> all;
  for (std::size_t i = 0; i < 6; ++i) all.push_back(e6.unit(i));
  CHECK(index_of(e6, sublattice(e6, all)) == 1);
  CHECK_THROWS(index_of(e6, sublattice(e6, {e6.unit(0)})));
  // Complement of U in U + V is V.
  IntLattice uv = catalog_lattice("U+V");
  auto perp = orthogonal_complement(uv, sublattice(uv, {uv.unit(0), uv.unit(1)}));
  CHECK(perp.lattice().gram() == catalog_lattice("V").gram());
}
