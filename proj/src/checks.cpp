#include "k3ball/checks.hpp"

#include "k3ball/eigen_ball.hpp"
#include "k3ball/hermitian.hpp"
#include "k3ball/models.hpp"
#include "k3ball/points.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace k3ball {

using nlohmann::json;

namespace {

// ---- JSON helpers; every number is exact, rationals and field elements are strings.

json jint(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return to_int64(x);
  return x.str();
}

json jrat(const Rational& x) { return to_string(x); }

json jvec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jmat(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row(i)));
  return a;
}

json jcyc(const Cyclotomic& c) { return c.serialize(); }

json jcycmat(const CycMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(jcyc(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json jsig(const Signature& s) { return json::array({s.positive, s.negative}); }

json jmap(const DiscMap& m) {
  json a = json::array();
  for (const auto& img : m.images()) a.push_back(img);
  return a;
}

json jfactors(const DiscForm& d) { return d.invariant_factors(); }

// Both renderings of a q-value: normalized to [0, 2) and symmetric in (-1, 1].
json jq(const Rational& q) { return json{{"mod2", jrat(mod(q, BigInt(2)))}, {"symmetric", jrat(symmetric_q(q))}}; }

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) { return std::mt19937_64(seed ^ (stream * 0x9E3779B97F4A7C15ULL)); }

LatticeVec random_vec(std::mt19937_64& rng, std::size_t n, int bound) {
  LatticeVec v(n);
  for (auto& x : v) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return v;
}

const IntLattice& lat(const std::string& name) {
  static const std::map<std::string, IntLattice> cache = [] {
    std::map<std::string, IntLattice> m;
    for (const auto& n : model_names()) m.emplace(n, model(n));
    return m;
  }();
  return cache.at(name);
}

std::shared_ptr<const DiscForm> disc_of(const std::string& name) {
  static const std::map<std::string, std::shared_ptr<const DiscForm>> cache = [] {
    std::map<std::string, std::shared_ptr<const DiscForm>> m;
    for (const auto& n : {"S", "T", "S1", "T1", "S2", "T2", "M", "N"}) m.emplace(n, std::make_shared<const DiscForm>(model(n)));
    return m;
  }();
  return cache.at(name);
}

json lattice_summary(const IntLattice& l) {
  auto s = l.signature();
  return json{{"rank", l.rank()}, {"det", jint(l.det())}, {"signature", jsig(s)}, {"even", l.even()}};
}

// Sum of the five F_i - G_i coordinates etc. in S.
LatticeVec config_vec(const std::vector<std::pair<std::size_t, int>>& terms) {
  const auto& c = curve_config();
  LatticeVec v(c.span.lattice.rank(), BigInt(0));
  for (const auto& [g, k] : terms) {
    auto x = c.coords(g);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * x[i];
  }
  return v;
}

std::string matrix_key(const IntMatrix& m) { return to_string(m); }

// Closure of a set of matrices under multiplication; stops at `cap`.
std::size_t matrix_group_order(const std::vector<IntMatrix>& gens, std::size_t cap) {
  if (gens.empty()) return 1;
  const IntMatrix id = IntMatrix::identity(gens.front().rows());
  std::set<std::string> seen{matrix_key(id)};
  std::vector<IntMatrix> frontier{id};
  while (!frontier.empty() && seen.size() <= cap) {
    std::vector<IntMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        IntMatrix p = g * m;
        if (seen.insert(matrix_key(p)).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// ---- individual checks

CheckOutcome check_config_relations(std::uint64_t) {
  using C = CurveConfig;
  const auto& c = curve_config();
  IntVec rel(16, 0);
  rel[C::E(0)] = 5;
  for (std::size_t i = 1; i <= 5; ++i) {
    rel[C::F(i)] -= 1;
    rel[C::E(i)] += 2;
  }
  bool ok = c.vanishes(rel);
  json per_i = json::array();
  for (std::size_t i = 1; i <= 5; ++i) {
    IntVec r(16, 0);
    r[C::G(i)] = 1;
    r[C::F(i)] = 1;
    r[C::E(0)] = -2;
    for (std::size_t j = 1; j <= 5; ++j)
      if (j != i) r[C::E(j)] = -1;
    bool v = c.vanishes(r);
    ok = ok && v;
    per_i.push_back(v);
  }
  return {ok, {{"five_e0_relation", c.vanishes(rel)}, {"g_plus_f_relations", per_i}}};
}

CheckOutcome check_config_span(std::uint64_t) {
  const auto& c = curve_config();
  const IntLattice& s = c.span.lattice;
  auto d = disc_of("S");
  bool ok = s.rank() == 10 && abs(s.det()) == 125 && d->invariant_factors() == std::vector<std::int64_t>{5, 5, 5};
  json basis = json::array();
  for (auto g : c.span.basis_generators) basis.push_back(c.labels[g]);
  return {ok,
          {{"rank", s.rank()},
           {"det", jint(s.det())},
           {"abs_det", jint(abs(s.det()))},
           {"signature", jsig(s.signature())},
           {"basis", basis},
           {"disc_group", jfactors(*d)}}};
}

CheckOutcome check_config_s0(std::uint64_t) {
  auto s0 = model_sublattice("S0");
  const IntLattice& s = lat("S");
  BigInt det = determinant(s0.gram());
  BigInt idx = index_of(s, s0);
  bool ok = s0.rank() == 10 && abs(det) == 3125 && idx == 5 && abs(det) == abs(s.det()) * idx * idx;
  return {ok, {{"rank", s0.rank()}, {"det", jint(det)}, {"index_in_S", jint(idx)}}};
}

CheckOutcome check_disc_s_generators(std::uint64_t) {
  using C = CurveConfig;
  const auto& c = curve_config();
  auto d = disc_of("S");
  auto gen = [&](std::size_t j) {
    std::vector<Rational> comb(16, Rational(0));
    comb[C::E(1)] += 1;
    comb[C::F(1)] += 2;
    comb[C::F(j)] += 3;
    comb[C::E(j)] += 4;
    for (auto& x : comb) x /= 5;
    return d->element_of(c.coords(comb));
  };
  std::vector<DiscElement> g{gen(2), gen(3), gen(4)};
  const Rational minus45(-4, 5), three5(3, 5);
  bool ok = true;
  json qs = json::array(), bs = json::array();
  for (const auto& x : g) {
    Rational q = d->q(x);
    ok = ok && q == mod(minus45, BigInt(2));
    qs.push_back(jq(q));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Rational b = d->b(g[i], g[(i + 1) % 3]);
    ok = ok && b == three5;
    bs.push_back(jrat(b));
  }
  std::set<DiscElement> span;
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b)
      for (std::int64_t e = 0; e < 5; ++e)
        span.insert(d->add(d->add(d->scale(g[0], a), d->scale(g[1], b)), d->scale(g[2], e)));
  ok = ok && span.size() == d->order();
  return {ok, {{"q", qs}, {"b_cyclic", bs}, {"generated_order", span.size()}, {"elements", g}}};
}

CheckOutcome check_disc_s_model(std::uint64_t) {
  DiscForm ref(catalog_lattice("V+A4+A4"));
  auto iso = forms_isomorphic(*disc_of("S"), ref, false);
  json w{{"found", iso.has_value()}};
  if (iso) w["images"] = jmap(*iso);
  return {iso.has_value() && iso->is_isometry(), w};
}

CheckOutcome anti_pair(const std::string& s, const std::string& t, long det_s) {
  auto iso = forms_isomorphic(*disc_of(s), *disc_of(t), true);
  const IntLattice &ls = lat(s), &lt = lat(t);
  bool ok = iso.has_value() && iso->is_anti_isometry() && abs(ls.det()) == det_s && abs(lt.det()) == det_s;
  json w{{"pair", {s, t}}, {"abs_det", {jint(abs(ls.det())), jint(abs(lt.det()))}}, {"found", iso.has_value()}};
  if (iso) w["images"] = jmap(*iso);
  return {ok, w};
}

CheckOutcome check_lattice_m(std::uint64_t) {
  const IntLattice& m = lat("M");
  auto d = disc_of("M");
  bool ok = m.rank() == 6 && abs(m.det()) == 16 && d->invariant_factors() == std::vector<std::int64_t>{2, 2, 2, 2};
  return {ok, {{"lattice", lattice_summary(m)}, {"disc_group", jfactors(*d)}}};
}

CheckOutcome check_lattice_n(std::uint64_t) {
  using C = CurveConfig;
  const IntLattice& s = lat("S");
  auto n = model_sublattice("N");
  std::vector<LatticeVec> diffs;
  for (std::size_t i = 1; i <= 5; ++i) diffs.push_back(config_vec({{C::F(i), 1}, {C::G(i), -1}}));
  auto four = sublattice(s, {diffs.begin(), diffs.begin() + 4});
  IntMatrix expected(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) expected(i, j) = i == j ? -8 : 2;
  bool gram_ok = four.gram() == expected;
  bool same = same_sublattice(four, n);
  IntLattice nl = n.lattice("N");
  auto roots = enumerate_norm_vectors(nl, -2);
  auto eights = enumerate_norm_vectors(nl, -8);
  // Coordinates of each F_i - G_i in the basis of N.
  // Normal equations B B^T x = B d; exact because d lies in the row span of B.
  RatMatrix b = to_rational(n.basis());
  RatMatrix bbt = b * b.transpose();
  std::size_t found = 0;
  for (const auto& d : diffs) {
    IntVec xi = to_integer(solve(bbt, b * to_rational(d)));
    if (to_integer(b.transpose() * to_rational(xi)) != d) continue;
    IntVec neg = xi;
    for (auto& v : neg) v = -v;
    if (std::find(eights.begin(), eights.end(), xi) != eights.end() ||
        std::find(eights.begin(), eights.end(), neg) != eights.end())
      ++found;
  }
  bool ok = nl.rank() == 4 && abs(nl.det()) == 2000 && gram_ok && same && roots.empty() && found == 5;
  return {ok,
          {{"lattice", lattice_summary(nl)},
           {"first_four_gram", jmat(four.gram())},
           {"generated_by_first_four", same},
           {"norm_minus2_count", roots.size()},
           {"norm_minus8_count", eights.size()},
           {"generators_among_norm_minus8", found}}};
}

CheckOutcome check_iota(std::uint64_t) {
  Isometry iota = iota_config();
  auto fixed = iota.eigenlattice(1), anti = iota.eigenlattice(-1);
  bool fixed_is_m = same_sublattice(fixed, model_sublattice("M"));
  bool anti_is_n = same_sublattice(anti, model_sublattice("N"));
  auto order = iota.order();
  bool ok = order && *order == 2 && fixed_is_m && anti_is_n;
  return {ok, {{"order", order ? json(*order) : json()}, {"fixed_is_M", fixed_is_m}, {"anti_invariant_is_N", anti_is_n},
               {"fixed_rank", fixed.rank()}, {"anti_rank", anti.rank()}}};
}

CheckOutcome check_reflections_m(std::uint64_t) {
  using C = CurveConfig;
  auto msub = model_sublattice("M");
  IntLattice m = msub.lattice("M");
  // msub rows are E0..E5 in that order, so E_i has coordinates unit(i) in M.
  std::vector<IntMatrix> gens;
  bool swaps = true;
  json norms = json::array();
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = i + 1; j <= 5; ++j) {
      LatticeVec r = m.unit(C::E(i));
      auto ej = m.unit(C::E(j));
      for (std::size_t k = 0; k < r.size(); ++k) r[k] -= ej[k];
      Isometry s = reflection(m, r);
      swaps = swaps && s.apply(m.unit(C::E(i))) == ej && s.apply(ej) == m.unit(C::E(i)) &&
              s.apply(m.unit(C::E(0))) == m.unit(C::E(0));
      norms.push_back(jint(m.norm(r)));
      if (j == i + 1) gens.push_back(s.matrix());
    }
  std::size_t order = matrix_group_order(gens, 1000);
  return {swaps && order == 120, {{"norms", norms}, {"swaps_E_i_E_j", swaps}, {"group_order", order}}};
}

CheckOutcome check_lattice_t(std::uint64_t) {
  const IntLattice& t = lat("T");
  auto sig = t.signature();
  // Last A4 block and its complement.
  std::vector<LatticeVec> block;
  for (std::size_t i = 1; i <= 4; ++i) block.push_back(t.unit(tbasis::a4(1, i)));
  auto r = sublattice(t, block);
  auto perp = orthogonal_complement(t, r);
  IntMatrix both(12, 12);
  for (std::size_t i = 0; i < 4; ++i) both.set_row(i, r.basis().row(i));
  for (std::size_t i = 0; i < perp.rank(); ++i) both.set_row(4 + i, perp.basis().row(i));
  BigInt idx = index_of(t, Sublattice(t, both));
  IntLattice pl = perp.lattice();
  auto iso = forms_isomorphic(DiscForm(pl), DiscForm(catalog_lattice("U+V+A4")), false);
  bool ok = t.rank() == 12 && abs(t.det()) == 125 && sig.positive == 2 && sig.negative == 10 && t.even() &&
            abs(pl.det()) == 25 && idx == 1 && iso.has_value();
  return {ok,
          {{"lattice", lattice_summary(t)},
           {"note", "signature recomputed as (2,10); a stated (2,8) is inconsistent with rank 12"},
           {"block_complement", {{"abs_det", jint(abs(pl.det()))}, {"index", jint(idx)}, {"disc_matches_U+V+A4", iso.has_value()}}}}};
}

CheckOutcome check_rho(std::uint64_t) {
  Isometry r = rho();
  const auto& h = hermitian_module();
  IntMatrix sum(12, 12);
  for (long k = 0; k < 5; ++k) sum = sum + h.rho_power(k);
  bool fifth = r.power(5).is_identity();
  bool nontrivial = !r.is_identity();
  auto fixed = r.eigenlattice(1);
  bool disc_trivial = induced_disc_action(h.disc(), r).is_identity();
  bool ok = fifth && nontrivial && fixed.rank() == 0 && disc_trivial && sum.is_zero();
  return {ok,
          {{"matrix", jmat(r.matrix())},
           {"rho5_identity", fifth},
           {"rho_nontrivial", nontrivial},
           {"fixed_rank", fixed.rank()},
           {"disc_action_trivial", disc_trivial},
           {"orbit_sum_zero", sum.is_zero()}}};
}

// ---- box sweeps

CheckOutcome check_sweep_isotropic(std::uint64_t seed) {
  const auto& scan = t_box_scan();
  const IntLattice& t = lat("T");
  const auto& h = hermitian_module();
  constexpr std::size_t kSamples = 2000;
  auto rng = rng_for(seed, 1);
  std::size_t failures = 0;
  json fail_examples = json::array();
  json first = json::array();
  for (std::size_t s = 0; s < kSamples; ++s) {
    LatticeVec e = to_lattice_vec(scan.isotropic[rng() % scan.isotropic.size()]);
    IntMatrix orbit(4, 12);
    for (long i = 0; i < 4; ++i) orbit.set_row(static_cast<std::size_t>(i), h.rho_power(i) * e);
    IntMatrix g = orbit * t.gram() * orbit.transpose();
    auto sig = signature(g);
    // Explicit witness e + sign(m1) rho(e).
    BigInt m1 = g(0, 1);
    LatticeVec w = e;
    LatticeVec re = h.rho_power(1) * e;
    for (std::size_t i = 0; i < 12; ++i) w[i] += (m1 >= 0 ? 1 : -1) * re[i];
    BigInt wn = t.norm(w);
    if (sig.positive == 0 || wn <= 0) {
      ++failures;
      if (fail_examples.size() < 5) fail_examples.push_back(jvec(e));
    }
    if (first.size() < 3) first.push_back({{"e", jvec(e)}, {"witness", jvec(w)}, {"witness_norm", jint(wn)}});
  }
  return {failures == 0,
          {{"box", "[-2,2]^12"},
           {"isotropic_in_box", scan.isotropic.size()},
           {"sampled", kSamples},
           {"failures", failures},
           {"failure_examples", fail_examples},
           {"examples", first}}};
}

CheckOutcome check_sweep_roots(std::uint64_t) {
  const auto& scan = t_box_scan();
  const IntLattice& t = lat("T");
  const auto& h = hermitian_module();
  DiscForm ref(catalog_lattice("U+V+A4"));
  std::size_t negdef = 0, a4_fail = 0, lattice_fail = 0;
  std::map<std::pair<int, int>, std::size_t> patterns;
  std::set<std::string> seen;
  json fail_examples = json::array();
  for (const auto& root : scan.roots) {
    if (!root.negative_definite) continue;
    ++negdef;
    LatticeVec r = to_lattice_vec(root.v);
    IntMatrix orbit(4, 12);
    for (long i = 0; i < 4; ++i) orbit.set_row(static_cast<std::size_t>(i), h.rho_power(i) * r);
    IntMatrix g = orbit * t.gram() * orbit.transpose();
    patterns[{to_int64(g(0, 1)), to_int64(g(0, 2))}]++;
    if (!is_a4_orbit_gram(g)) {
      ++a4_fail;
      if (fail_examples.size() < 5) fail_examples.push_back(jvec(r));
      continue;
    }
    IntMatrix key = row_span_basis(orbit);
    if (!seen.insert(matrix_key(key)).second) continue;
    Sublattice rs(t, key);
    auto perp = orthogonal_complement(t, rs);
    IntMatrix both(12, 12);
    for (std::size_t i = 0; i < 4; ++i) both.set_row(i, key.row(i));
    for (std::size_t i = 0; i < perp.rank(); ++i) both.set_row(4 + i, perp.basis().row(i));
    bool ok = perp.rank() == 8 && index_of(t, Sublattice(t, both)) == 1 &&
              forms_isomorphic(DiscForm(perp.lattice()), ref, false).has_value();
    if (!ok) {
      ++lattice_fail;
      if (fail_examples.size() < 5) fail_examples.push_back(jvec(r));
    }
  }
  json pats = json::array();
  for (const auto& [p, n] : patterns) pats.push_back({{"m1", p.first}, {"m2", p.second}, {"count", n}});
  return {negdef > 0 && a4_fail == 0 && lattice_fail == 0,
          {{"roots_in_box", scan.roots.size()},
           {"negative_definite_orbits", negdef},
           {"orbit_patterns", pats},
           {"distinct_orbit_lattices", seen.size()},
           {"a4_failures", a4_fail},
           {"splitting_failures", lattice_fail},
           {"failure_examples", fail_examples}}};
}

// ---- hermitian module

CheckOutcome check_hermitian_matrix(std::uint64_t seed) {
  const auto& h = hermitian_module();
  CycMatrix g = h.gram();
  CycMatrix expected(3, 3);
  expected(0, 0) = Cyclotomic::zeta_power(2) + Cyclotomic::zeta_power(3);
  expected(1, 1) = Cyclotomic(-1);
  expected(2, 2) = Cyclotomic(-1);
  // (sqrt5 - 1)/2 through the other route.
  bool golden = expected(0, 0) == (Cyclotomic::sqrt5() - Cyclotomic(1)) * Cyclotomic(Rational(1, 2));
  BigInt odet = determinant(h.orbit_matrix());
  auto rng = rng_for(seed, 2);
  std::size_t samples = 0;
  bool sesqui = true;
  for (int s = 0; s < 12; ++s) {
    LatticeVec x = random_vec(rng, 12, 3), y = random_vec(rng, 12, 3);
    Cyclotomic lambda(Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 7) - 3),
                      Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 7) - 3));
    Cyclotomic hxy = h.h(x, y);
    sesqui = sesqui && hxy == h.h(y, x).conj();
    sesqui = sesqui && h.h(h.zeta_mul(lambda, x), y) == lambda * hxy;
    sesqui = sesqui && h.h(x, h.zeta_mul(lambda, y)) == lambda.conj() * hxy;
    ++samples;
  }
  bool ok = g == expected && golden && abs(odet) == 1 && sesqui;
  return {ok,
          {{"gram", jcycmat(g)},
           {"gram_pretty", {g(0, 0).pretty(), g(1, 1).pretty(), g(2, 2).pretty()}},
           {"orbit_det", jint(odet)},
           {"sesquilinear_samples", samples},
           {"sesquilinear", sesqui}}};
}

CheckOutcome check_hermitian_phi(std::uint64_t seed) {
  const auto& h = hermitian_module();
  auto d = h.disc();
  const auto& b = h.zbasis();
  std::set<std::size_t> images;
  for (int c0 = 0; c0 < 5; ++c0)
    for (int c1 = 0; c1 < 5; ++c1)
      for (int c2 = 0; c2 < 5; ++c2) {
        LatticeVec x(12, BigInt(0));
        for (std::size_t i = 0; i < 12; ++i) x[i] = c0 * b[0][i] + c1 * b[1][i] + c2 * b[2][i];
        images.insert(d->index(d->element_of(h.phi(x))));
      }
  auto rng = rng_for(seed, 3);
  bool kernel = true;
  const Cyclotomic one_minus_z = Cyclotomic(1) - Cyclotomic::zeta();
  for (int s = 0; s < 16; ++s) {
    LatticeVec x = random_vec(rng, 12, 4);
    RationalVec p = h.phi(h.zeta_mul(one_minus_z, x));
    LatticeVec r4 = h.rho_power(4) * x;
    for (std::size_t i = 0; i < 12; ++i) kernel = kernel && p[i] + Rational(r4[i]) == 0;
  }
  bool ok = images.size() == 125 && d->order() == 125 && kernel;
  return {ok, {{"distinct_images", images.size()}, {"disc_order", d->order()}, {"phi_of_one_minus_z_x", kernel}}};
}

IntMatrix last_block_matrix(const IntMatrix& block) {
  IntMatrix m = IntMatrix::identity(12);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(8 + i, 8 + j) = block(i, j);
  return m;
}

CheckOutcome check_reflection_e1(std::uint64_t) {
  const auto& h = hermitian_module();
  const IntLattice& t = lat("T");
  LatticeVec a = t.unit(tbasis::a4(1, 1));
  Isometry plus = hermitian_reflection(h, a, 1), minus = hermitian_reflection(h, a, -1);
  IntMatrix r4 = rho4().matrix();
  bool plus_block = plus.matrix() == last_block_matrix(r4);
  bool minus_block = minus.matrix() == last_block_matrix(BigInt(-1) * r4);
  Isometry prod = reflection(t, t.unit(tbasis::a4(1, 1))) * reflection(t, t.unit(tbasis::a4(1, 2))) *
                  reflection(t, t.unit(tbasis::a4(1, 3))) * reflection(t, t.unit(tbasis::a4(1, 4)));
  bool plus_prod = plus == prod;
  IntMatrix minus_prod = BigInt(-1) * prod.matrix();
  // -1 on the last block only; the sign applies to the A4 summand.
  for (std::size_t i = 0; i < 8; ++i) minus_prod(i, i) = 1;
  bool minus_prod_ok = minus.matrix() == minus_prod;
  auto op = plus.order(), om = minus.order();
  bool fifth_not = !minus.power(5).is_identity();
  bool ok = plus_block && minus_block && plus_prod && minus_prod_ok && op && *op == 5 && om && *om == 10 && fifth_not;
  return {ok,
          {{"plus_equals_block_rho4", plus_block},
           {"minus_equals_block_minus_rho4", minus_block},
           {"plus_equals_s1s2s3s4", plus_prod},
           {"minus_equals_minus_s1s2s3s4", minus_prod_ok},
           {"order_plus", op ? json(*op) : json()},
           {"order_minus", om ? json(*om) : json()},
           {"minus_fifth_power_nontrivial", fifth_not}}};
}

bool preserves_h(const HermitianModule& h, const Isometry& g) {
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i; j < 12; ++j) {
      LatticeVec x = h.lattice().unit(i), y = h.lattice().unit(j);
      if (h.h(g.apply(x), g.apply(y)) != h.h(x, y)) return false;
    }
  return true;
}

std::size_t fixed_points(const DiscMap& m) {
  std::size_t n = 0;
  auto p = m.permutation();
  for (std::size_t i = 0; i < p.size(); ++i) n += p[i] == i;
  return n;
}

constexpr std::size_t kUnitSamples = 20;

CheckOutcome check_reflection_sampled(std::uint64_t seed) {
  const auto& h = hermitian_module();
  auto as = sample_unit_vectors(seed, kUnitSamples);
  std::size_t good = 0;
  json rows = json::array();
  for (const auto& a : as) {
    Cyclotomic haa = h.h(a, a);
    Isometry plus = hermitian_reflection(h, a, 1), minus = hermitian_reflection(h, a, -1);
    DiscMap dp = induced_disc_action(h.disc(), plus), dm = induced_disc_action(h.disc(), minus);
    auto om = dm.order();
    auto op = plus.order(), omm = minus.order();
    std::size_t fixed = fixed_points(dm);
    bool commute = plus.commutes_with(h.rho()) && minus.commutes_with(h.rho());
    bool keeps_h = preserves_h(h, plus) && preserves_h(h, minus);
    GammaClass cp = gamma_membership(h, plus), cm = gamma_membership(h, minus);
    bool ok = haa == Cyclotomic(-1) && dp.is_identity() && om && *om == 2 && fixed == 25 && op && *op == 5 && omm &&
              *omm == 10 && commute && keeps_h && cp == GammaClass::GammaPrime && cm == GammaClass::Gamma;
    good += ok;
    if (rows.size() < 4 || !ok)
      rows.push_back({{"a", jvec(a)},
                      {"h_aa", jcyc(haa)},
                      {"plus_trivial_on_disc", dp.is_identity()},
                      {"minus_disc_order", om ? json(*om) : json()},
                      {"minus_disc_fixed_points", fixed},
                      {"classes", {to_string(cp), to_string(cm)}},
                      {"ok", ok}});
  }
  return {as.size() >= 20 && good == as.size(), {{"sampled", as.size()}, {"passing", good}, {"details", rows}}};
}

CheckOutcome check_reflection_group(std::uint64_t seed) {
  const auto& h = hermitian_module();
  auto as = sample_unit_vectors(seed, kUnitSamples);
  std::vector<DiscMap> gens;
  for (const auto& a : as) gens.push_back(induced_disc_action(h.disc(), hermitian_reflection(h, a, -1)));
  std::size_t order = generated_group_order(gens);
  // Diagnostic: the same generators together with -1 on T.
  auto with_neg = gens;
  with_neg.push_back(induced_disc_action(h.disc(), Isometry::negation(h.lattice())));
  std::size_t order_neg = generated_group_order(with_neg);
  std::size_t target = orthogonal_group_order(*h.disc());
  return {order == 240,
          {{"generators", gens.size()},
           {"generated_order", order},
           {"expected", 240},
           {"orthogonal_group_order", target},
           {"generated_order_with_minus_identity", order_neg}}};
}

// ---- eigenspaces and the ball

CheckOutcome check_eigen_norms(std::uint64_t) {
  CycVec xi0 = xi_vector(0), xi1 = xi_vector(1), mu = mu_vector();
  Cyclotomic nxi = eigen_pairing(xi0, xi0), nxi1 = eigen_pairing(xi1, xi1), nmu = eigen_pairing(mu, mu);
  const Cyclotomic z2z3 = Cyclotomic::zeta_power(2) + Cyclotomic::zeta_power(3);
  const Isometry r = rho();
  bool eig = true;
  for (const auto& v : diagonal_eigenbasis()) {
    CycVec rv = apply(r.matrix(), v);
    for (std::size_t i = 0; i < v.size(); ++i) eig = eig && rv[i] == Cyclotomic::zeta() * v[i];
  }
  EigenForm f = eigen_form(diagonal_eigenbasis());
  CycMatrix expected(3, 3);
  expected(0, 0) = z2z3;
  expected(1, 1) = Cyclotomic(-1);
  expected(2, 2) = Cyclotomic(-1);
  // Change of basis from the echelon eigenbasis.
  EigenBasis b = eigenspace(1);
  json cob = json::array();
  bool in_span = true;
  for (const auto& v : diagonal_eigenbasis()) {
    auto c = b.coordinates(v);
    in_span = in_span && c.has_value();
    json row = json::array();
    if (c)
      for (const auto& x : *c) row.push_back(jcyc(x));
    cob.push_back(row);
  }
  bool ok = nxi == Cyclotomic(-5) && nxi1 == Cyclotomic(-5) && nmu == Cyclotomic(5) * z2z3 && eig && f.matrix == expected && in_span;
  return {ok,
          {{"xi_norm", jcyc(nxi)},
           {"mu_norm", jcyc(nmu)},
           {"mu_norm_pretty", nmu.pretty()},
           {"eigenvectors", eig},
           {"form", jcycmat(f.matrix)},
           {"change_of_basis_from_echelon", cob}}};
}

CheckOutcome check_eigen_signatures(std::uint64_t seed) {
  json rows = json::array();
  bool ok = true;
  std::vector<EigenBasis> bases;
  for (int k = 1; k <= 4; ++k) {
    EigenBasis b = eigenspace(k);
    Signature s = eigen_signature(eigen_form(b));
    auto v = Cyclotomic::zeta_power(k).embed();
    bool positive_one = (k == 1 || k == 4);
    bool expect = b.basis.size() == 3 && s.zero == 0 &&
                  (positive_one ? (s.positive == 1 && s.negative == 2) : (s.positive == 0 && s.negative == 3));
    ok = ok && expect;
    rows.push_back({{"k", k},
                    {"eigenvalue_angle_deg", std::lround(std::arg(v) * 180.0 / 3.14159265358979323846)},
                    {"dim", b.basis.size()},
                    {"signature", jsig(s)}});
    bases.push_back(std::move(b));
  }
  // Words in R_a^+ keep each eigenspace and its form.
  const auto& h = hermitian_module();
  auto as = sample_unit_vectors(seed, 3);
  std::vector<Isometry> words;
  if (as.size() == 3) {
    Isometry g0 = hermitian_reflection(h, as[0], 1), g1 = hermitian_reflection(h, as[1], 1),
             g2 = hermitian_reflection(h, as[2], 1);
    words = {g0, g0 * g1, g1 * g2 * g0.power(2)};
  }
  bool invariant = !words.empty();
  for (const auto& g : words)
    for (const auto& b : bases) {
      std::vector<CycVec> moved;
      for (const auto& v : b.basis) {
        CycVec w = apply(g.matrix(), v);
        invariant = invariant && b.coordinates(w).has_value();
        moved.push_back(std::move(w));
      }
      invariant = invariant && eigen_form(moved).matrix == eigen_form(b.basis).matrix;
    }
  return {ok && invariant, {{"eigenvalues", rows}, {"gamma_prime_words_preserve_forms", invariant}, {"words", words.size()}}};
}

CheckOutcome check_eigen_ball(std::uint64_t) {
  const IntLattice& t = lat("T");
  auto mu_pt = BallPoint::exact({Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)});
  auto xi_pt = BallPoint::exact({Cyclotomic(0), Cyclotomic(1), Cyclotomic(0)});
  auto mixed = BallPoint::exact({Cyclotomic(2), Cyclotomic::zeta(), Cyclotomic(0)});
  LatticeVec r = t.unit(tbasis::a4(1, 1));
  bool mu_in = ball_contains(mu_pt), xi_in = ball_contains(xi_pt);
  bool mixed_orth = hyperplane_contains(r, mixed);
  bool mu_h = in_discriminant_hyperplane(r, mu_pt);
  bool numeric_agrees = ball_contains(BallPoint::numeric(mu_pt.numeric_coords())) == mu_in;
  bool ok = mu_in && !xi_in && mixed_orth && mu_h && numeric_agrees;
  return {ok,
          {{"mu_in_ball", mu_in},
           {"xi_in_ball", xi_in},
           {"orthogonal_to_last_block_root", mixed_orth},
           {"mu_in_H_r", mu_h},
           {"numeric_mode_agrees", numeric_agrees}}};
}

// ---- discriminant counts

json census_rows(const DiscForm& d) {
  Census c = census(d);
  json rows = json::array();
  rows.push_back({{"type", "00"}, {"count", c.zero_element}});
  for (const auto& [v, n] : c.ordered_rows())
    rows.push_back({{"type", v == 0 ? std::string("0") : to_string(v)}, {"count", n}});
  return rows;
}

CheckOutcome check_census(std::uint64_t) {
  auto d = disc_of("T");
  json rows = census_rows(*d);
  std::vector<std::size_t> counts;
  std::vector<std::string> types;
  for (const auto& r : rows) {
    counts.push_back(r["count"].get<std::size_t>());
    types.push_back(r["type"].get<std::string>());
  }
  bool ok = counts == std::vector<std::size_t>{1, 24, 30, 30, 20, 20} &&
            types == std::vector<std::string>{"00", "0", "2/5", "-2/5", "4/5", "-4/5"};
  return {ok, {{"table", rows}, {"total", d->order()}}};
}

CheckOutcome check_orthogonal_order(std::uint64_t) {
  auto d = disc_of("T");
  auto group = orthogonal_group(*d);
  Census base = census(*d);
  bool invariant = true;
  for (const auto& g : group) {
    for (std::size_t i = 0; i < d->order() && invariant; ++i) {
      DiscElement x = d->element_at(i);
      invariant = d->q(g.apply(x)) == d->q(x);
    }
  }
  return {group.size() == 240 && invariant, {{"order", group.size()}, {"census_invariant", invariant}}};
}

CheckOutcome check_lines(std::uint64_t) {
  CheckReport r = lines_census_check();
  return {r.status == CheckStatus::Pass, r.witness};
}

// ---- gluing

CheckOutcome check_glue(std::uint64_t) {
  const auto& g = k3_gluing();
  const IntLattice& l = g.glued.lattice;
  auto sig = l.signature();
  bool ok = l.rank() == 22 && abs(l.det()) == 1 && l.even() && sig.positive == 3 && sig.negative == 19;
  return {ok, {{"lattice", lattice_summary(l)}, {"gamma", jmap(g.gamma)}}};
}

CheckOutcome check_glue_extend(std::uint64_t seed) {
  const auto& g = k3_gluing();
  const auto& h = hermitian_module();
  Isometry id_s = Isometry::identity(g.s);
  auto with_rho = extend_isometry_pair(id_s, rho(), g.gamma, g.glued);
  // The covering involution acts on T by -1.
  Isometry iota = iota_config();
  Isometry neg_t = Isometry::negation(g.t);
  auto with_iota = extend_isometry_pair(iota, neg_t, g.gamma, g.glued);
  bool iota_is_minus = induced_disc_action(disc_of("S"), iota) ==
                       induced_disc_action(disc_of("S"), Isometry::negation(g.s));
  auto as = sample_unit_vectors(seed, 1);
  std::optional<Isometry> with_refl;
  if (!as.empty()) with_refl = extend_isometry_pair(id_s, hermitian_reflection(h, as.front(), -1), g.gamma, g.glued);
  bool ok = with_rho.has_value() && with_iota.has_value() && !as.empty() && !with_refl.has_value();
  json w{{"identity_rho_extends", with_rho.has_value()},
         {"iota_minus_one_extends", with_iota.has_value()},
         {"iota_acts_as_minus_one_on_disc", iota_is_minus},
         {"identity_reflection_extends", with_refl.has_value()}};
  if (with_iota) w["iota_extension_order"] = with_iota->order() ? json(*with_iota->order()) : json();
  return {ok, w};
}

CheckOutcome check_perm_group(std::uint64_t) {
  auto d = disc_of("S");
  std::vector<DiscMap> gens{induced_disc_action(d, perm_isometry({2, 1, 3, 4, 5})),
                            induced_disc_action(d, perm_isometry({2, 3, 4, 5, 1})),
                            induced_disc_action(d, iota_config())};
  std::size_t perm_only = generated_group_order({gens[0], gens[1]});
  std::size_t order = generated_group_order(gens);
  // Homomorphism on a pair: p o q maps to perm(p) * perm(q).
  std::array<int, 5> p{2, 1, 3, 4, 5}, q{2, 3, 4, 5, 1}, pq{};
  for (std::size_t i = 0; i < 5; ++i) pq[i] = p[static_cast<std::size_t>(q[i] - 1)];
  bool hom = perm_isometry(pq) == perm_isometry(p) * perm_isometry(q);
  auto t_ord = perm_isometry({2, 1, 3, 4, 5}).order();
  bool ok = order == 240 && hom && t_ord && *t_ord == 2 && perm_isometry({1, 2, 3, 4, 5}).is_identity();
  return {ok, {{"order_with_iota", order}, {"order_permutations_only", perm_only}, {"homomorphism", hom}}};
}

CheckOutcome check_classify(std::uint64_t) {
  struct Case {
    const char* points;
    Stability stability;
    std::vector<int> partition;
  };
  const std::vector<Case> cases{{"0,1,inf,2,3", Stability::Stable, {1, 1, 1, 1, 1}},
                                {"0,0,1,1,inf", Stability::Stable, {2, 2, 1}},
                                {"0,0,0,1,inf", Stability::Unstable, {3, 1, 1}}};
  bool ok = true;
  json rows = json::array();
  for (const auto& c : cases) {
    auto cls = classify(PointConfig::parse(c.points));
    bool match = cls.stability == c.stability && cls.partition == c.partition;
    ok = ok && match;
    rows.push_back({{"points", c.points}, {"class", to_string(cls.stability)}, {"partition", partition_string(cls.partition)}});
  }
  const std::vector<std::pair<std::vector<int>, std::pair<std::string, std::string>>> table{
      {{1, 1, 1, 1, 1}, {"S", "T"}}, {{2, 1, 1, 1}, {"S1", "T1"}}, {{2, 2, 1}, {"S2", "T2"}}};
  json lat_rows = json::array();
  for (const auto& [part, names] : table) {
    auto cl = case_lattices(part);
    ok = ok && cl.picard == names.first && cl.transcendental == names.second;
    lat_rows.push_back({{"partition", partition_string(part)}, {"picard", cl.picard}, {"transcendental", cl.transcendental}});
  }
  return {ok, {{"examples", rows}, {"case_lattices", lat_rows}}};
}

std::vector<CheckDef> build_registry() {
  using namespace std::placeholders;
  return {
      {"config.relations", "two linear relations among the sixteen curve classes", check_config_relations},
      {"config.span", "curve span has rank 10, |det| 125, discriminant group (Z/5)^3", check_config_span},
      {"config.s0", "span of E1..E5, F1..F5 has rank 10, |det| 3125, index 5", check_config_s0},
      {"disc.s.generators", "three explicit classes with q = -4/5 and pairwise b = 3/5 generate A_S", check_disc_s_generators},
      {"disc.s.model", "q_S isometric to the form of V+A4+A4", check_disc_s_model},
      {"disc.anti.s_t", "q_T = -q_S, |det| 125", [](std::uint64_t) { return anti_pair("S", "T", 125); }},
      {"disc.anti.s1_t1", "q_T1 = -q_S1, |det| 25", [](std::uint64_t) { return anti_pair("S1", "T1", 25); }},
      {"disc.anti.s2_t2", "q_T2 = -q_S2, |det| 5", [](std::uint64_t) { return anti_pair("S2", "T2", 5); }},
      {"lattice.m", "span of E0..E5 has rank 6, |det| 16, A_M = (Z/2)^4", check_lattice_m},
      {"lattice.n", "complement of M has rank 4, |det| 2000, no (-2)-vectors", check_lattice_n},
      {"iota", "covering involution fixes M and negates N", check_iota},
      {"reflections.m", "(-4)-reflections in E_i - E_j generate S5 on M", check_reflections_m},
      {"lattice.t", "T = U+V+A4+A4: rank 12, |det| 125, signature (2,10)", check_lattice_t},
      {"rho", "order-5 isometry of T without fixed vectors, trivial on A_T", check_rho},
      {"sweep.isotropic", "isotropic vectors: rho-orbit span has a positive vector", check_sweep_isotropic},
      {"sweep.roots", "definite root orbits span A4 and split off U+V+A4", check_sweep_roots},
      {"hermitian.matrix", "hermitian form on the Z[z]-basis is diag((sqrt5-1)/2, -1, -1)", check_hermitian_matrix},
      {"hermitian.phi", "phi induces Lambda/(1-z)Lambda = A_T", check_hermitian_phi},
      {"reflection.e1", "R_e1^+- = 1+1+1+(+-rho4), orders 5 and 10", check_reflection_e1},
      {"reflection.sampled", "R_a^+ trivial and R_a^- of order 2 on A_T for sampled a", check_reflection_sampled},
      {"reflection.group", "induced R_a^- actions generate a group of order 240", check_reflection_group},
      {"eigen.norms", "<xi, conj xi> = -5 and <mu, conj mu> = 5(z^2+z^3)", check_eigen_norms},
      {"eigen.signatures", "eigen form signature (1,2) at exp(+-4 pi i/5), (0,3) otherwise", check_eigen_signatures},
      {"eigen.ball", "ball and hyperplane membership", check_eigen_ball},
      {"census", "A_T census (1, 24, 30, 30, 20, 20)", check_census},
      {"orthogonal.order", "|O(q_T)| = 240", check_orthogonal_order},
      {"lines", "ten classes of q = -4/5 up to sign, each realized by a root", check_lines},
      {"glue", "S and T glue to an even unimodular lattice of signature (3,19)", check_glue},
      {"glue.extend", "isometry pairs extend to the glued lattice iff compatible on A_S", check_glue_extend},
      {"perm.group", "S5 relabelings and the involution map onto a group of order 240 in O(q_S)", check_perm_group},
      {"classify", "stability of five points and lattices per coincidence pattern", check_classify},
  };
}

bool glob_match(const std::string& pat, const std::string& s) {
  std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
  while (i < s.size()) {
    if (p < pat.size() && (pat[p] == s[i] || pat[p] == '?')) {
      ++p;
      ++i;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      break;
  }
  return "skip";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skip") return CheckStatus::Skip;
  throw std::invalid_argument("unknown check status \"" + s + "\"");
}

void to_json(json& j, const CheckReport& r) {
  j = json{{"check", r.check}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"witness", r.witness}};
  j["millis"] = r.millis ? json(*r.millis) : json(nullptr);
}

void from_json(const json& j, CheckReport& r) {
  r.check = j.at("check").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.witness = j.at("witness");
  if (j.contains("millis") && !j.at("millis").is_null())
    r.millis = j.at("millis").get<std::int64_t>();
  else
    r.millis.reset();
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = build_registry();
  return registry;
}

std::vector<std::string> select_checks(const std::string& pattern) {
  std::vector<std::string> out;
  for (const auto& c : check_registry()) {
    bool hit = pattern == "all" || c.id == pattern || c.id.rfind(pattern + ".", 0) == 0 ||
               (pattern.find_first_of("*?") != std::string::npos && glob_match(pattern, c.id));
    if (hit) out.push_back(c.id);
  }
  if (out.empty()) throw std::invalid_argument("no check matches \"" + pattern + "\"");
  return out;
}

CheckReport run_check(const CheckDef& def, std::uint64_t seed, bool timing) {
  CheckReport r;
  r.check = def.id;
  r.anchor = def.anchor;
  auto start = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = def.run(seed);
    r.status = o.pass ? CheckStatus::Pass : CheckStatus::Fail;
    r.witness = std::move(o.witness);
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.witness = json{{"error", e.what()}};
  }
  if (timing)
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_suite(const std::string& pattern, std::uint64_t seed, unsigned jobs, bool timing) {
  auto ids = select_checks(pattern);
  std::vector<const CheckDef*> defs;
  for (const auto& c : check_registry())
    if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) defs.push_back(&c);
  std::vector<CheckReport> out(defs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < defs.size(); ++i) out[i] = run_check(*defs[i], seed, timing);
    return out;
  }
  std::size_t next = 0;
  while (next < defs.size()) {
    std::vector<std::pair<std::size_t, std::future<CheckReport>>> batch;
    for (unsigned k = 0; k < jobs && next < defs.size(); ++k, ++next)
      batch.emplace_back(next, std::async(std::launch::async, [&, i = next] { return run_check(*defs[i], seed, timing); }));
    for (auto& [i, f] : batch) out[i] = f.get();
  }
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::Pass; });
}

json reports_to_json(const std::vector<CheckReport>& reports) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(r);
  return a;
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  std::size_t pass = 0;
  for (const auto& r : reports) {
    std::string tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    out << tag << "  " << r.check << "  " << r.anchor;
    if (r.millis) out << "  (" << *r.millis << " ms)";
    out << "\n";
    if (r.status != CheckStatus::Pass) out << "      " << r.witness.dump() << "\n";
    pass += r.status == CheckStatus::Pass;
  }
  out << pass << "/" << reports.size() << " checks passed\n";
  return out.str();
}

LatticeVec to_lattice_vec(const BoxScan::Vec& v) {
  LatticeVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

const BoxScan& t_box_scan() {
  static const BoxScan scan = [] {
    BoxScan s;
    const IntLattice& t = lat("T");
    constexpr int n = 12;
    auto g = to_int64(t.gram());
    auto rho1 = to_int64(t.gram() * rho().matrix());
    auto rho2 = to_int64(t.gram() * rho().power(2).matrix());
    std::vector<std::vector<std::pair<int, std::int64_t>>> cols(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
          cols[static_cast<std::size_t>(j)].emplace_back(i, g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));

    std::array<std::int64_t, n> v{}, gv{};
    v.fill(-2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gv[static_cast<std::size_t>(i)] += g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * v[static_cast<std::size_t>(j)];
    std::int64_t norm = 0;
    for (int i = 0; i < n; ++i) norm += v[static_cast<std::size_t>(i)] * gv[static_cast<std::size_t>(i)];

    auto pair_with = [&](const Matrix<std::int64_t>& m) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < n; ++j) row += m(i, j) * v[j];
        total += v[i] * row;
      }
      return total;
    };
    auto pack = [&] {
      BoxScan::Vec out;
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int8_t>(v[i]);
      return out;
    };
    // Orbit gram Toeplitz (-2, m1, m2, m2): negative definite iff all leading minors alternate.
    auto definite = [](std::int64_t m1, std::int64_t m2) {
      const std::int64_t a[4][4] = {{-2, m1, m2, m2}, {m1, -2, m1, m2}, {m2, m1, -2, m1}, {m2, m2, m1, -2}};
      Matrix<BigInt> full(4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) full(i, j) = a[i][j];
      return is_negative_definite(full);
    };

    for (;;) {
      ++s.scanned;
      if (norm == 0) {
        bool nonzero = std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
        if (nonzero) s.isotropic.push_back(pack());
      } else if (norm == -2) {
        std::int64_t m1 = pair_with(rho1), m2 = pair_with(rho2);
        s.roots.push_back({pack(), static_cast<std::int8_t>(m1), static_cast<std::int8_t>(m2), definite(m1, m2)});
      }
      int i = 0;
      for (; i < n; ++i) {
        auto iu = static_cast<std::size_t>(i);
        const std::int64_t gii = g(iu, iu);
        if (v[iu] < 2) {
          norm += 2 * gv[iu] + gii;
          ++v[iu];
          for (const auto& [r, c] : cols[iu]) gv[static_cast<std::size_t>(r)] += c;
          break;
        }
        norm += -8 * gv[iu] + 16 * gii;
        v[iu] = -2;
        for (const auto& [r, c] : cols[iu]) gv[static_cast<std::size_t>(r)] -= 4 * c;
      }
      if (i == n) break;
    }
    return s;
  }();
  return scan;
}

std::vector<LatticeVec> sample_unit_vectors(std::uint64_t seed, std::size_t count) {
  const auto& scan = t_box_scan();
  const auto& h = hermitian_module();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < scan.roots.size(); ++i)
    if (scan.roots[i].m1 == 1 && scan.roots[i].m2 == 0) candidates.push_back(i);
  std::vector<LatticeVec> out;
  if (candidates.empty()) return out;
  auto rng = rng_for(seed, 4);
  std::set<std::size_t> used;
  while (out.size() < count && used.size() < candidates.size()) {
    std::size_t pick = candidates[rng() % candidates.size()];
    if (!used.insert(pick).second) continue;
    LatticeVec a = to_lattice_vec(scan.roots[pick].v);
    if (h.h(a, a) == Cyclotomic(-1)) out.push_back(std::move(a));
  }
  return out;
}

CheckReport lines_census_check() {
  const auto& h = hermitian_module();
  auto d = h.disc();
  const Rational target = mod(Rational(-4, 5), BigInt(2));
  std::vector<std::size_t> classes;
  for (std::size_t i = 0; i < d->order(); ++i)
    if (d->q(d->element_at(i)) == target) classes.push_back(i);
  std::set<std::size_t> pairs;
  for (auto i : classes) pairs.insert(std::min(i, d->index(d->negate(d->element_at(i)))));

  // Realize each class as (r + 2 rho r + 3 rho^2 r + 4 rho^3 r)/5 for a root r of the box.
  std::map<std::size_t, LatticeVec> witness;
  const std::set<std::size_t> wanted(classes.begin(), classes.end());
  for (const auto& root : t_box_scan().roots) {
    if (witness.size() == wanted.size()) break;
    LatticeVec r = to_lattice_vec(root.v);
    std::size_t idx = d->index(d->element_of(h.phi(r)));
    if (wanted.count(idx) && !witness.count(idx)) witness.emplace(idx, r);
  }
  json realized = json::array();
  for (const auto& [idx, r] : witness) realized.push_back({{"alpha", d->element_at(idx)}, {"root", jvec(r)}});

  CheckReport rep;
  rep.check = "lines";
  rep.anchor = "ten classes of q = -4/5 up to sign, each realized by a root";
  bool ok = classes.size() == 20 && pairs.size() == 10 && witness.size() == classes.size();
  rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rep.witness = {{"q_minus_4_5_count", classes.size()}, {"up_to_sign", pairs.size()}, {"realized", witness.size()},
                 {"realizations", realized}};
  return rep;
}

}  // namespace k3ball
