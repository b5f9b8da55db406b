#include "k3ball/disc_form.hpp"
#include "k3ball/linalg.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace k3ball;

namespace {

// q-values of L*/L by walking dual vectors directly: columns of G^-1 generate L*.
std::multiset<Rational> naive_q_values(const IntLattice& l) {
  RatMatrix inv = inverse(to_rational(l.gram()));
  const std::size_t n = l.rank();
  std::vector<RatVec> duals;
  for (std::size_t j = 0; j < n; ++j) duals.push_back(inv.col(j));
  // Reduce mod L via coordinates in [0,1) of the dual vector.
  std::set<RatVec> seen;
  std::multiset<Rational> out;
  std::vector<RatVec> frontier{RatVec(n, Rational(0))};
  auto reduce = [](RatVec v) {
    for (auto& x : v) x = mod(x, BigInt(1));
    return v;
  };
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& v : frontier) {
      out.insert(mod(bilinear(to_rational(l.gram()), v, v), BigInt(2)));
      for (const auto& d : duals) {
        RatVec w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] += d[i];
        w = reduce(w);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("discriminant of A4") {
  DiscForm d(catalog_lattice("A4"));
  CHECK(d.order() == 5);
  CHECK(d.invariant_factors() == std::vector<std::int64_t>{5});
  std::set<Rational> qs;
  for (const auto& x : d.elements()) qs.insert(d.q(x));
  CHECK(qs == std::set<Rational>{0, Rational(6, 5), Rational(4, 5)});
  CHECK(orthogonal_group_order(d) == 2);
}

TEST_CASE("q-values agree with a direct dual-lattice walk") {
  for (const char* expr : {"A4", "A2", "V", "A1+A1", "U(2)", "A4+A4", "V+A4", "D4", "U+V+A4+A4"}) {
    CAPTURE(expr);
    IntLattice l = catalog_lattice(expr);
    DiscForm d(l);
    std::multiset<Rational> mine;
    for (const auto& x : d.elements()) mine.insert(d.q(x));
    CHECK(mine == naive_q_values(l));
    CHECK(d.order() == static_cast<std::size_t>(abs(l.det())));
  }
}

TEST_CASE("element_of and lift are inverse") {
  DiscForm d(catalog_lattice("V+A4"));
  for (const auto& x : d.elements()) CHECK(d.element_of(d.lift(x)) == x);
  CHECK_THROWS_AS(d.element_of(RatVec{Rational(1, 3), 0, 0, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(DiscForm(IntLattice(IntMatrix{{1}})), std::invalid_argument);
}

TEST_CASE("census of the transcendental lattice") {
  DiscForm d(catalog_lattice("U+V+A4+A4"));
  Census c = census(d);
  CHECK(c.zero_element == 1);
  auto rows = c.ordered_rows();
  std::vector<std::pair<Rational, std::size_t>> want{
      {0, 24}, {Rational(2, 5), 30}, {Rational(-2, 5), 30}, {Rational(4, 5), 20}, {Rational(-4, 5), 20}};
  CHECK(rows == want);
  CHECK(c.total() == 125);
}

TEST_CASE("isomorphism search") {
  DiscForm a(catalog_lattice("A2")), b(catalog_lattice("A2(-1)"));
  auto anti = forms_isomorphic(a, b, true);
  REQUIRE(anti.has_value());
  CHECK(anti->is_anti_isometry());
  CHECK_FALSE(forms_isomorphic(a, b, false).has_value());
  // -q of A4 is isomorphic to q of A4 (x -> 2x), so both searches succeed.
  CHECK(forms_isomorphic(DiscForm(catalog_lattice("A4")), DiscForm(catalog_lattice("A4(-1)")), false).has_value());
  CHECK_FALSE(forms_isomorphic(a, DiscForm(catalog_lattice("A4")), false).has_value());
  // V has q = 2/5 type generator, A4 has -4/5 = 6/5: differ.
  DiscForm v(catalog_lattice("V"));
  CHECK(forms_isomorphic(v, DiscForm(catalog_lattice("V")), false).has_value());
}

TEST_CASE("orthogonal groups are closed and form-preserving") {
  DiscForm d(catalog_lattice("A4+A4"));
  auto g = orthogonal_group(d);
  for (const auto& f : g) CHECK(f.is_isometry());
  auto p = std::make_shared<const DiscForm>(d);
  std::vector<DiscMap> gens;
  for (const auto& f : g) gens.push_back(DiscMap(p, p, f.images()));
  CHECK(generated_group_order(gens) == g.size());
}

TEST_CASE("gluing A1 with A1(-1) gives U") {
  IntLattice s = catalog_lattice("A1"), t = catalog_lattice("A1(-1)");
  auto ds = std::make_shared<const DiscForm>(s), dt = std::make_shared<const DiscForm>(t);
  auto gamma = forms_isomorphic(*ds, *dt, true);
  REQUIRE(gamma.has_value());
  DiscMap g(ds, dt, gamma->images());
  Overlattice o = glue_overlattice(s, t, g);
  CHECK(o.lattice.rank() == 2);
  CHECK(o.lattice.det() == -1);
  CHECK(o.lattice.even());
  auto sig = o.lattice.signature();
  CHECK(sig.positive == 1);
  CHECK(sig.negative == 1);
  // A non-anti map is rejected.
  DiscForm a2(catalog_lattice("A2"));
  auto da2 = std::make_shared<const DiscForm>(a2);
  CHECK_THROWS_AS(glue_overlattice(catalog_lattice("A2"), catalog_lattice("A2"), DiscMap::identity(da2)),
                  std::invalid_argument);
}

TEST_CASE("induced actions") {
  IntLattice a4 = catalog_lattice("A4");
  auto d = std::make_shared<const DiscForm>(a4);
  // Reflections act trivially on A_L; -1 does not.
  CHECK(induced_disc_action(d, reflection(a4, a4.unit(2))).is_identity());
  DiscMap neg = induced_disc_action(d, Isometry::negation(a4));
  CHECK(neg.order() == 2);
  CHECK_THROWS_AS(induced_disc_action(d, Isometry::identity(catalog_lattice("A2"))), std::invalid_argument);
  DiscMap bad_shape_check = DiscMap::identity(d);
  CHECK_THROWS_AS(DiscMap(d, d, {{1}, {2}}), std::invalid_argument);
  CHECK(bad_shape_check.is_isometry());
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(orthogonal_group(DiscForm(catalog_lattice("A4+A4+A4+A4+A4"))), std::length_error);
}

TEST_CASE("trivial groups and order mismatches") {
  DiscForm e8(catalog_lattice("E8"));
  CHECK(e8.order() == 1);
  CHECK(e8.invariant_factors().empty());
  CHECK(census(e8).zero_element == 1);
  CHECK(census(e8).total() == 1);
  CHECK(orthogonal_group_order(e8) == 1);
  CHECK_FALSE(forms_isomorphic(DiscForm(catalog_lattice("A1+A1+A1+A1")), DiscForm(catalog_lattice("A4+A4+A4")), false));
  CHECK(census(DiscForm(catalog_lattice("U+V+A4"))).total() == 25);

  auto de8 = std::make_shared<const DiscForm>(catalog_lattice("E8"));
  Overlattice o = glue_overlattice(catalog_lattice("E8"), catalog_lattice("E8"), DiscMap(de8, de8, {}));
  CHECK(o.lattice.rank() == 16);
  CHECK(abs(o.lattice.det()) == 1);
}

TEST_CASE("quadratic form identities on A_T") {
  DiscForm d(catalog_lattice("U+V+A4+A4"));
  auto els = d.elements();
  for (const auto& x : els) {
    for (std::int64_t n = 0; n < 5; ++n) CHECK(d.q(d.scale(x, n)) == mod(Rational(n * n) * d.q(x), BigInt(2)));
    for (std::size_t k = 0; k < els.size(); k += 7) {
      const auto& y = els[k];
      CHECK(d.b(x, y) == d.b(y, x));
      CHECK(d.q(d.add(x, y)) == mod(d.q(x) + d.q(y) + 2 * d.b(x, y), BigInt(2)));
    }
  }
}

TEST_CASE("the glued rank-2 lattice has a hyperbolic basis") {
  IntLattice s = catalog_lattice("A1"), t = catalog_lattice("A1(-1)");
  auto ds = std::make_shared<const DiscForm>(s), dt = std::make_shared<const DiscForm>(t);
  Overlattice o = glue_overlattice(s, t, DiscMap(ds, dt, forms_isomorphic(*ds, *dt, true)->images()));
  const IntLattice& l = o.lattice;
  bool found = false;
  for (long a = -3; a <= 3 && !found; ++a)
    for (long b = -3; b <= 3 && !found; ++b)
      for (long c = -3; c <= 3 && !found; ++c)
        for (long e = -3; e <= 3 && !found; ++e) {
          if (a * e - b * c != 1 && a * e - b * c != -1) continue;
          LatticeVec x{a, b}, y{c, e};
          found = l.norm(x) == 0 && l.norm(y) == 0 && l.inner(x, y) == 1;
        }
  CHECK(found);
}
