#include "k3ball/hermitian.hpp"

#include "k3ball/linalg.hpp"
#include "k3ball/models.hpp"

#include <stdexcept>

namespace k3ball {

HermitianModule::HermitianModule()
    : lattice_(model("T")),
      rho_(k3ball::rho()),
      zbasis_{lattice_.unit(tbasis::e), lattice_.unit(tbasis::a4(0, 1)), lattice_.unit(tbasis::a4(1, 1))} {
  powers_[0] = IntMatrix::identity(lattice_.rank());
  for (std::size_t i = 1; i < 5; ++i) powers_[i] = powers_[i - 1] * rho_.matrix();
  for (std::size_t i = 0; i < 5; ++i) gram_powers_[i] = lattice_.gram() * powers_[i];
  // (5 + sqrt 5) / 2 = 3 + z^2 + z^3
  prefactor_ = (Cyclotomic(3) + Cyclotomic::zeta_power(2) + Cyclotomic::zeta_power(3)).inverse();
  disc_ = std::make_shared<const DiscForm>(lattice_);
}

const IntMatrix& HermitianModule::rho_power(long k) const {
  return powers_[static_cast<std::size_t>(((k % 5) + 5) % 5)];
}

std::array<BigInt, 5> HermitianModule::orbit_pairings(const LatticeVec& x, const LatticeVec& y) const {
  std::array<BigInt, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = dot(x, gram_powers_[i] * y);
  return out;
}

Cyclotomic HermitianModule::h(const LatticeVec& x, const LatticeVec& y) const {
  auto p = orbit_pairings(x, y);
  Cyclotomic sum;
  for (std::size_t i = 0; i < 5; ++i) sum += Cyclotomic(Rational(p[i])) * Cyclotomic::zeta_power(static_cast<long>(i));
  return prefactor_ * sum;
}

LatticeVec HermitianModule::zeta_mul(const Cyclotomic& lambda, const LatticeVec& x) const {
  if (!lambda.is_integral()) throw std::domain_error("scalar " + lambda.pretty() + " is not in Z[z]");
  LatticeVec out(x.size(), BigInt(0));
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt c = numerator(lambda[i]);
    if (c == 0) continue;
    LatticeVec y = powers_[i] * x;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * y[j];
  }
  return out;
}

RationalVec HermitianModule::phi(const LatticeVec& x) const {
  RationalVec out(x.size(), Rational(0));
  for (std::size_t i = 0; i < 4; ++i) {
    LatticeVec y = powers_[i] * x;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += Rational(BigInt(i + 1) * y[j], 5);
  }
  return out;
}

IntMatrix HermitianModule::orbit_matrix() const {
  const std::size_t n = lattice_.rank();
  IntMatrix m(n, n);
  std::size_t col = 0;
  for (const auto& b : zbasis_)
    for (std::size_t j = 0; j < 4; ++j) m.set_col(col++, powers_[j] * b);
  return m;
}

Matrix<Cyclotomic> HermitianModule::gram() const {
  Matrix<Cyclotomic> g(zbasis_.size(), zbasis_.size());
  for (std::size_t i = 0; i < zbasis_.size(); ++i)
    for (std::size_t j = 0; j < zbasis_.size(); ++j) g(i, j) = h(zbasis_[i], zbasis_[j]);
  return g;
}

const HermitianModule& hermitian_module() {
  static const HermitianModule m;
  return m;
}

bool is_unit_norm_vector(const HermitianModule& m, const LatticeVec& a) {
  auto p = m.orbit_pairings(a, a);
  return p[0] == -2 && p[1] == 1 && p[2] == 0;
}

Isometry hermitian_reflection(const HermitianModule& m, const LatticeVec& a, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("reflection sign must be +1 or -1");
  if (m.h(a, a) != Cyclotomic(-1)) throw std::invalid_argument("reflection vector needs h(a, a) = -1");
  const Cyclotomic factor = Cyclotomic(-1) + Cyclotomic(sign) * Cyclotomic::zeta();
  const std::size_t n = m.lattice().rank();
  IntMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    LatticeVec v = m.lattice().unit(j);
    LatticeVec shift = m.zeta_mul(factor * m.h(v, a), a);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = v[i] - shift[i];
  }
  return Isometry(m.lattice(), std::move(out));
}

GammaClass gamma_membership(const HermitianModule& m, const Isometry& g) {
  if (g.lattice().gram() != m.lattice().gram()) throw std::invalid_argument("not an isometry of T");
  if (!g.commutes_with(m.rho())) return GammaClass::Neither;
  return induced_disc_action(m.disc(), g).is_identity() ? GammaClass::GammaPrime : GammaClass::Gamma;
}

std::string to_string(GammaClass c) {
  switch (c) {
    case GammaClass::GammaPrime:
      return "in_Gamma_prime";
    case GammaClass::Gamma:
      return "in_Gamma";
    case GammaClass::Neither:
      break;
  }
  return "neither";
}

}  // namespace k3ball
