#include "k3ball/models.hpp"

#include <stdexcept>

namespace k3ball {

namespace {

IntMatrix config_gram() {
  using C = CurveConfig;
  IntMatrix g(16, 16);
  auto set = [&](std::size_t a, std::size_t b, int v) { g(a, b) = g(b, a) = v; };
  for (std::size_t i = 0; i < 16; ++i) g(i, i) = -2;
  for (std::size_t i = 1; i <= 5; ++i) {
    set(C::E(0), C::E(i), 1);
    set(C::E(i), C::F(i), 1);
    set(C::E(i), C::G(i), 1);
    set(C::F(i), C::G(i), 2);
    for (std::size_t j = i + 1; j <= 5; ++j) {
      set(C::F(i), C::F(j), 1);
      set(C::G(i), C::G(j), 1);
    }
  }
  return g;
}

CurveConfig build_config() {
  using C = CurveConfig;
  CurveConfig c;
  c.gram = config_gram();
  c.labels.push_back("E0");
  for (int i = 1; i <= 5; ++i) c.labels.push_back("E" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) c.labels.push_back("F" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) c.labels.push_back("G" + std::to_string(i));
  c.span = generated_lattice(c.gram, "S");

  // 5 E0 = sum (F_i - 2 E_i)
  IntVec rel(16, 0);
  rel[C::E(0)] = 5;
  for (std::size_t i = 1; i <= 5; ++i) {
    rel[C::F(i)] -= 1;
    rel[C::E(i)] += 2;
  }
  if (!c.vanishes(rel)) throw std::logic_error("curve relation 5E0 = sum(F_i - 2E_i) fails");
  // G_i + F_i = 2 E0 + sum_{j != 0, i} E_j
  for (std::size_t i = 1; i <= 5; ++i) {
    IntVec r(16, 0);
    r[C::G(i)] = 1;
    r[C::F(i)] = 1;
    r[C::E(0)] = -2;
    for (std::size_t j = 1; j <= 5; ++j)
      if (j != i) r[C::E(j)] = -1;
    if (!c.vanishes(r)) throw std::logic_error("curve relation G_i + F_i = 2E0 + sum E_j fails");
  }
  if (c.span.lattice.rank() != 10) throw std::logic_error("curve span does not have rank 10");
  if (abs(c.span.lattice.det()) != 125) throw std::logic_error("curve span does not have |det| 125");
  return c;
}

// Matrix M on S with M * coords(j) == coords(perm[j]) for every generator j.
Isometry induced_on_span(const CurveConfig& c, const std::vector<std::size_t>& perm) {
  IntMatrix from = c.span.generator_coords.transpose();  // rank x 16
  IntMatrix to(from.rows(), from.cols());
  for (std::size_t j = 0; j < perm.size(); ++j) to.set_col(j, c.coords(perm[j]));
  RatMatrix f = to_rational(from), t = to_rational(to);
  RatMatrix ft = f.transpose();
  RatMatrix m = t * ft * inverse(f * ft);
  if (m * f != t) throw std::logic_error("generator permutation is not linear on the span");
  return Isometry(c.span.lattice, to_integer(m));
}

}  // namespace

RationalVec CurveConfig::coords(const std::vector<Rational>& combination) const {
  RatMatrix ct = to_rational(span.generator_coords.transpose());
  return ct * combination;
}

bool CurveConfig::vanishes(const IntVec& combination) const {
  IntVec pairing = gram * combination;
  for (const auto& p : pairing)
    if (p != 0) return false;
  return true;
}

const CurveConfig& curve_config() {
  static const CurveConfig config = build_config();
  return config;
}

Sublattice model_sublattice(const std::string& name) {
  const CurveConfig& c = curve_config();
  const IntLattice& s = c.span.lattice;
  using C = CurveConfig;
  if (name == "S0") {
    std::vector<LatticeVec> v;
    for (std::size_t i = 1; i <= 5; ++i) v.push_back(c.coords(C::E(i)));
    for (std::size_t i = 1; i <= 5; ++i) v.push_back(c.coords(C::F(i)));
    return sublattice(s, v);
  }
  if (name == "M") {
    std::vector<LatticeVec> v;
    for (std::size_t i = 0; i <= 5; ++i) v.push_back(c.coords(C::E(i)));
    return sublattice(s, v);
  }
  if (name == "N") return orthogonal_complement(s, model_sublattice("M"));
  throw std::invalid_argument("no sublattice model named \"" + name + "\"");
}

IntLattice model(const std::string& name) {
  if (name == "S") return curve_config().span.lattice;
  if (name == "S0" || name == "M" || name == "N") return model_sublattice(name).lattice(name);
  if (name == "T") return IntLattice(catalog_lattice("U+V+A4+A4").gram(), "T");
  if (name == "T1") return IntLattice(catalog_lattice("U+V+A4").gram(), "T1");
  if (name == "T2") return IntLattice(catalog_lattice("U+V").gram(), "T2");
  if (name == "S1") return IntLattice(catalog_lattice("V+E8+A4").gram(), "S1");
  if (name == "S2") return IntLattice(catalog_lattice("V+E8+E8").gram(), "S2");
  if (name == "L") return IntLattice(k3_gluing().glued.lattice.gram(), "L");
  throw std::invalid_argument("unknown model \"" + name + "\"");
}

std::vector<std::string> model_names() { return {"S", "S0", "T", "M", "N", "S1", "S2", "T1", "T2", "L"}; }

Isometry rho0() {
  // Columns: images of e, f, x, y.
  IntMatrix m{{0, -1, 0, 0}, {-1, -1, 1, 3}, {0, 0, -1, -1}, {0, -1, 0, 1}};
  return Isometry(catalog_lattice("U+V"), std::move(m));
}

Isometry rho4() {
  IntMatrix m{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  return Isometry(root_lattice_A(4), std::move(m));
}

Isometry rho() {
  Isometry r = direct_sum(direct_sum(rho0(), rho4()), rho4());
  return Isometry(model("T"), r.matrix());
}

Isometry iota_config() {
  using C = CurveConfig;
  std::vector<std::size_t> perm(16);
  for (std::size_t j = 0; j < 16; ++j) perm[j] = j;
  for (std::size_t i = 1; i <= 5; ++i) {
    perm[C::F(i)] = C::G(i);
    perm[C::G(i)] = C::F(i);
  }
  return induced_on_span(curve_config(), perm);
}

Isometry perm_isometry(const std::array<int, 5>& p) {
  using C = CurveConfig;
  std::array<bool, 5> seen{};
  for (int v : p) {
    if (v < 1 || v > 5 || seen[static_cast<std::size_t>(v - 1)]) throw std::invalid_argument("not a permutation of 1..5");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::vector<std::size_t> perm(16);
  perm[C::E(0)] = C::E(0);
  for (std::size_t i = 1; i <= 5; ++i) {
    auto j = static_cast<std::size_t>(p[i - 1]);
    perm[C::E(i)] = C::E(j);
    perm[C::F(i)] = C::F(j);
    perm[C::G(i)] = C::G(j);
  }
  return induced_on_span(curve_config(), perm);
}

namespace {

K3Gluing build_gluing() {
  IntLattice s = model("S"), t = model("T");
  auto gamma = forms_isomorphic(DiscForm(s), DiscForm(t), /*anti=*/true);
  if (!gamma) throw std::logic_error("no anti-isometry between A_S and A_T");
  Overlattice glued = glue_overlattice(s, t, *gamma);
  return {s, t, *gamma, glued};
}

}  // namespace

const K3Gluing& k3_gluing() {
  static const K3Gluing g = build_gluing();
  return g;
}

}  // namespace k3ball
