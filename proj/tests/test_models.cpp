#include "k3ball/hermitian.hpp"
#include "k3ball/models.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace k3ball;

namespace {

LatticeVec random_vec(std::mt19937_64& rng, int bound) {
  LatticeVec v(12);
  for (auto& x : v) x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return v;
}

}  // namespace

TEST_CASE("model determinants and signatures") {
  struct Row {
    const char* name;
    long abs_det;
    std::size_t rank;
    int pos;
  };
  for (const Row& r : {Row{"S", 125, 10, 1}, Row{"S0", 3125, 10, 1}, Row{"M", 16, 6, 1}, Row{"N", 2000, 4, 0},
                       Row{"S1", 25, 14, 1}, Row{"S2", 5, 18, 1}, Row{"T", 125, 12, 2}, Row{"T1", 25, 8, 2},
                       Row{"T2", 5, 4, 2}, Row{"L", 1, 22, 3}}) {
    CAPTURE(r.name);
    IntLattice l = model(r.name);
    CHECK(abs(l.det()) == r.abs_det);
    CHECK(l.rank() == r.rank);
    CHECK(l.even());
    CHECK(oracle::float_signature(l.gram()).first == r.pos);
  }
  CHECK_THROWS(model("nope"));
}

TEST_CASE("configuration span through the 16 x 16 gram") {
  const auto& c = curve_config();
  // Numeric rank of the generator gram.
  const IntMatrix& g = c.gram;
  auto [p, n] = oracle::float_signature(g);
  CHECK(p + n == 10);
  // Nonzero Smith invariants of the generator gram multiply to |det S|.
  Smith s = smith_form(g);
  BigInt prod = 1;
  for (std::size_t i = 0; i < 16; ++i)
    if (s.diagonal(i, i) != 0) prod *= s.diagonal(i, i);
  CHECK(prod == 125);
  // Relation 5 E0 = sum (F_i - 2 E_i) checked against the raw gram.
  IntVec rel(16, 0);
  rel[CurveConfig::E(0)] = 5;
  for (std::size_t i = 1; i <= 5; ++i) {
    rel[CurveConfig::F(i)] = -1;
    rel[CurveConfig::E(i)] = 2;
  }
  for (const auto& x : g * rel) CHECK(x == 0);
  CHECK_FALSE(c.vanishes(IntVec(16, 0) = [] {
    IntVec v(16, 0);
    v[0] = 1;
    return v;
  }()));
}

TEST_CASE("rho on T") {
  Isometry r = rho();
  CHECK(r.order() == 5);
  CHECK(rho0().order() == 5);
  CHECK(rho4().order() == 5);
  // Characteristic polynomial of rho is (x^4+x^3+x^2+x+1)^3: trace -3.
  BigInt trace = 0;
  for (std::size_t i = 0; i < 12; ++i) trace += r.matrix()(i, i);
  CHECK(trace == -3);
}

TEST_CASE("involution and relabelings on S") {
  Isometry iota = iota_config();
  CHECK(iota.order() == 2);
  CHECK(perm_isometry({1, 2, 3, 4, 5}).is_identity());
  auto cyc = perm_isometry({2, 3, 4, 5, 1});
  CHECK(cyc.order() == 5);
  CHECK(cyc.commutes_with(iota));
  CHECK_THROWS_AS(perm_isometry({1, 1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(perm_isometry({0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("gluing of S and T") {
  const auto& g = k3_gluing();
  CHECK(g.gamma.is_anti_isometry());
  const IntLattice& l = g.glued.lattice;
  CHECK(l.even());
  CHECK(abs(l.det()) == 1);
  // S (+) T sits in L with index 125.
  CHECK(abs(determinant(g.glued.basis)) == Rational(1, 125));
}

TEST_CASE("hermitian module") {
  const auto& h = hermitian_module();
  std::mt19937_64 rng(31);
  CHECK(abs(determinant(h.orbit_matrix())) == 1);
  for (int t = 0; t < 30; ++t) {
    LatticeVec x = random_vec(rng, 3), y = random_vec(rng, 3);
    Cyclotomic hxx = h.h(x, x);
    CHECK(hxx.is_real());
    CHECK(h.h(h.rho().apply(x), h.rho().apply(y)) == h.h(x, y));
    CHECK(h.h(h.rho().apply(x), y) == Cyclotomic::zeta() * h.h(x, y));
    CHECK(h.zeta_mul(Cyclotomic::zeta(), x) == h.rho().apply(x));
    LatticeVec d = h.zeta_mul(Cyclotomic(1) - Cyclotomic::zeta(), x);
    LatticeVec rx = h.rho().apply(x);
    for (std::size_t i = 0; i < 12; ++i) CHECK(d[i] == x[i] - rx[i]);
    // h(a, a) == -1 agrees with the integer test.
    CHECK((hxx == Cyclotomic(-1)) == is_unit_norm_vector(h, x));
  }
  CHECK_THROWS_AS(h.zeta_mul(Cyclotomic(Rational(1, 2)), h.lattice().unit(0)), std::domain_error);
  for (const auto& v : h.phi(LatticeVec(12, 0))) CHECK(v == 0);
}

TEST_CASE("hermitian reflections") {
  const auto& h = hermitian_module();
  LatticeVec a = h.lattice().unit(tbasis::a4(0, 1));
  REQUIRE(h.h(a, a) == Cyclotomic(-1));
  for (int s : {1, -1}) {
    Isometry r = hermitian_reflection(h, a, s);
    CHECK(r.apply(a) == h.zeta_mul(Cyclotomic(s) * Cyclotomic::zeta(), a));
    // Fixes vectors h-orthogonal to a.
    LatticeVec e = h.lattice().unit(tbasis::e);
    CHECK(r.apply(e) == e);
    CHECK(r.commutes_with(h.rho()));
  }
  CHECK(gamma_membership(h, h.rho()) == GammaClass::GammaPrime);
  CHECK(gamma_membership(h, hermitian_reflection(h, a, -1)) == GammaClass::Gamma);
  CHECK(gamma_membership(h, reflection(h.lattice(), a)) == GammaClass::Neither);
  CHECK(to_string(GammaClass::Gamma) == "in_Gamma");
  CHECK_THROWS_AS(hermitian_reflection(h, h.lattice().unit(tbasis::e), 1), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_reflection(h, a, 0), std::invalid_argument);
}
