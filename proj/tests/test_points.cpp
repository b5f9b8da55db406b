#include "k3ball/points.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace k3ball;

namespace {

PointConfig make(const std::array<long, 5>& v, int inf_at = -1) {
  std::vector<ProjectivePoint> p;
  for (int i = 0; i < 5; ++i)
    p.push_back(i == inf_at ? ProjectivePoint::infinity() : ProjectivePoint::affine(Rational(v[static_cast<std::size_t>(i)])));
  return PointConfig{{p[0], p[1], p[2], p[3], p[4]}};
}

ProjectivePoint mobius(const ProjectivePoint& p, const std::array<long, 4>& m) {
  return {Rational(m[0]) * p.x + Rational(m[1]) * p.y, Rational(m[2]) * p.x + Rational(m[3]) * p.y};
}

}  // namespace

TEST_CASE("stability examples") {
  auto a = classify(PointConfig::parse("0, 1, inf, 2, 3"));
  CHECK(a.stability == Stability::Stable);
  CHECK(a.partition == std::vector<int>{1, 1, 1, 1, 1});
  auto b = classify(PointConfig::parse("0,0,1,1,inf"));
  CHECK(b.stability == Stability::Stable);
  CHECK(partition_string(b.partition) == "(2,2,1)");
  auto c = classify(PointConfig::parse("0,0,0,1,oo"));
  CHECK(c.stability == Stability::Unstable);
  CHECK(c.partition == std::vector<int>{3, 1, 1});
  // 1/2 and 2/4 coincide.
  CHECK(classify(PointConfig::parse("1/2,2/4,4/8,1,2")).stability == Stability::Unstable);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(PointConfig::parse("0,1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(PointConfig::parse("0,1,2,3,4,5"), std::invalid_argument);
  CHECK_THROWS_AS(PointConfig::parse("0,1,2,3,x"), std::invalid_argument);
  CHECK_THROWS_AS(PointConfig::parse("0,1,2,3,1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ProjectivePoint(Rational(0), Rational(0)), std::invalid_argument);
}

TEST_CASE("classification is invariant under reordering and projective maps") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    std::array<long, 5> v;
    for (auto& x : v) x = static_cast<long>(rng() % 4);
    int inf_at = rng() % 3 == 0 ? static_cast<int>(rng() % 5) : -1;
    PointConfig c = make(v, inf_at);
    auto base = classify(c);
    auto shuffled = c.points;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(classify(PointConfig{shuffled}).partition == base.partition);
    std::array<long, 4> m;
    do {
      for (auto& x : m) x = static_cast<long>(rng() % 7) - 3;
    } while (m[0] * m[3] - m[1] * m[2] == 0);
    auto moved = c.points;
    for (auto& p : moved) p = mobius(p, m);
    auto img = classify(PointConfig{moved});
    CHECK(img.partition == base.partition);
    CHECK(img.stability == base.stability);
  }
}

TEST_CASE("case lattices") {
  CHECK(case_lattices({1, 1, 1, 1, 1}).transcendental == "T");
  CHECK(case_lattices({2, 1, 1, 1}).picard == "S1");
  CHECK(case_lattices({2, 2, 1}).transcendental == "T2");
  CHECK_THROWS_AS(case_lattices({3, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(case_lattices({2, 2}), std::invalid_argument);
}

TEST_CASE("quintic expansion matches evaluation") {
  auto b = equations(PointConfig::parse("0,1,2,3,4"));
  // x1 (x1 - x2)(x1 - 2 x2)(x1 - 3 x2)(x1 - 4 x2) = x1^5 - 10 x1^4 x2 + 35 x1^3 x2^2 - 50 x1^2 x2^3 + 24 x1 x2^4
  std::array<Rational, 6> want{1, -10, 35, -50, 24, 0};
  CHECK(b.f5 == want);
  CHECK(b.singular_members.size() == 5);
  for (const auto& s : b.singular_members) CHECK(s.type == "I");
  CHECK_FALSE(b.nodal);
  CHECK_FALSE(b.normalized);

  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> roots;
    for (int i = 0; i < 5; ++i) roots.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    auto c = expand_roots(roots);
    for (long x = -3; x <= 3; ++x) {
      Rational val = 0, prod = 1;
      for (std::size_t k = 0; k < c.size(); ++k) val = val * x + c[k];
      for (const auto& r : roots) prod *= Rational(x) - r;
      CHECK(val == prod);
    }
  }
}

TEST_CASE("double roots and normalization") {
  auto b = equations(PointConfig::parse("1,1,2,3,5"));
  REQUIRE(b.singular_members.size() == 4);
  CHECK(b.singular_members[0].type == "II");
  CHECK(b.singular_members[0].multiplicity == 2);
  CHECK(b.nodal);

  auto n = equations(PointConfig::parse("0,1,inf,2,3"));
  CHECK(n.normalized);
  // Every point becomes finite and distinct.
  std::vector<Rational> l(n.lambdas.begin(), n.lambdas.end());
  std::sort(l.begin(), l.end());
  CHECK(std::adjacent_find(l.begin(), l.end()) == l.end());
  // The recorded map sends the original points to the lambdas.
  auto cfg = PointConfig::parse("0,1,inf,2,3");
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& p = cfg.points[i];
    ProjectivePoint q(n.normalization[0] * p.x + n.normalization[1] * p.y, n.normalization[2] * p.x + n.normalization[3] * p.y);
    CHECK(q.same_as(ProjectivePoint::affine(n.lambdas[i])));
  }
  CHECK_THROWS_AS(equations(PointConfig::parse("0,0,0,1,2")), std::invalid_argument);
  // Sextic: x0^6 plus -x0 * f5 terms.
  CHECK(n.sextic.front().exponents == std::array<int, 3>{6, 0, 0});
  for (std::size_t i = 1; i < n.sextic.size(); ++i) CHECK(n.sextic[i].exponents[0] == 1);
}
