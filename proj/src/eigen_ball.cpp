#include "k3ball/eigen_ball.hpp"

#include "k3ball/models.hpp"

#include <cmath>
#include <stdexcept>

namespace k3ball {

namespace {

const IntLattice& t_lattice() {
  static const IntLattice t = model("T");
  return t;
}

Cyclotomic z(long k) { return Cyclotomic::zeta_power(k); }

// Embedded hermitian form of the diagonal basis.
const std::vector<std::vector<std::complex<double>>>& numeric_form() {
  static const auto f = [] {
    EigenForm e = eigen_form(diagonal_eigenbasis());
    std::vector<std::vector<std::complex<double>>> out(3, std::vector<std::complex<double>>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out[i][j] = e.matrix(i, j).embed();
    return out;
  }();
  return f;
}

}  // namespace

CycVec to_cyclotomic(const LatticeVec& v) {
  CycVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(Rational(x));
  return out;
}

CycVec apply(const IntMatrix& m, const CycVec& v) {
  CycVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += Cyclotomic(Rational(m(i, j))) * v[j];
  return out;
}

std::vector<std::size_t> row_reduce(CycMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Cyclotomic inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Cyclotomic f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

EigenBasis eigenspace(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("eigenvalue index must be in 1..4");
  const Isometry rho_iso = rho();
  const IntMatrix& rho_m = rho_iso.matrix();
  const std::size_t n = rho_m.rows();
  CycMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Cyclotomic(Rational(rho_m(i, j)));
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= z(k);
  auto pivots = row_reduce(a);

  EigenBasis out;
  out.k = k;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    CycVec v(n);
    v[f] = Cyclotomic(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    out.basis.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

std::optional<CycVec> EigenBasis::coordinates(const CycVec& v) const {
  CycVec c;
  for (auto f : free_columns) c.push_back(v[f]);
  CycVec back(v.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) back[j] += c[i] * basis[i][j];
  if (back != v) return std::nullopt;
  return c;
}

Cyclotomic eigen_pairing(const CycVec& a, const CycVec& b) {
  const IntMatrix& g = t_lattice().gram();
  if (a.size() != g.rows() || b.size() != g.rows()) throw std::invalid_argument("vector length differs from rank of T");
  Cyclotomic sum;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (a[i].is_zero()) continue;
    Cyclotomic row;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0 && !b[j].is_zero()) row += Cyclotomic(Rational(g(i, j))) * b[j].conj();
    sum += a[i] * row;
  }
  return sum;
}

EigenForm eigen_form(const std::vector<CycVec>& vectors) {
  const std::size_t n = vectors.size();
  EigenForm f{CycMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.matrix(i, j) = eigen_pairing(vectors[i], vectors[j]) * Cyclotomic(Rational(1, 5));
  return f;
}

Signature eigen_signature(const EigenForm& form) {
  CycMatrix a = form.matrix;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != a(j, i).conj()) throw std::invalid_argument("form is not hermitian");

  Signature sig;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!used[i] && !a(i, i).is_zero()) p = i;
    if (p == n) {
      // No usable diagonal entry: b_i + t b_j with t = a(i,j) has norm 2|a(i,j)|^2.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!used[i] && !used[j] && i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      const Cyclotomic t = a(pi, pj);
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += t * a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += t.conj() * a(r, pj);
      p = pi;
    }
    used[p] = true;
    const int s = sign(a(p, p));
    if (s > 0) ++sig.positive; else ++sig.negative;
    const Cyclotomic inv = a(p, p).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || a(j, p).is_zero()) continue;
      const Cyclotomic c = a(j, p) * inv;
      for (std::size_t k = 0; k < n; ++k) a(j, k) -= c * a(p, k);
      for (std::size_t k = 0; k < n; ++k) a(k, j) -= c.conj() * a(k, p);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) ++sig.zero;
  return sig;
}

CycVec xi_vector(std::size_t block) {
  if (block > 1) throw std::invalid_argument("A4 block index must be 0 or 1");
  CycVec v(t_lattice().rank());
  v[tbasis::a4(block, 1)] = Cyclotomic(1);
  v[tbasis::a4(block, 2)] = z(4) + Cyclotomic(1);
  v[tbasis::a4(block, 3)] = -z(1) - z(2);
  v[tbasis::a4(block, 4)] = -z(1);
  return v;
}

CycVec mu_vector() {
  using namespace tbasis;
  CycVec v(t_lattice().rank());
  const Cyclotomic c1 = -(z(4) + Cyclotomic(1)), c2 = -z(1) - z(2), c3 = -z(1);
  // e - (z^4+1) f + (-z-z^2)(e+f+y) - z(-e+f-x)
  v[e] = Cyclotomic(1) + c2 - c3;
  v[f] = c1 + c2 + c3;
  v[x] = -c3;
  v[y] = c2;
  return v;
}

std::vector<CycVec> diagonal_eigenbasis() { return {mu_vector(), xi_vector(0), xi_vector(1)}; }

BallPoint BallPoint::exact(CycVec coords) {
  if (coords.size() != 3) throw std::invalid_argument("ball point needs 3 coordinates");
  BallPoint p;
  p.exact_ = std::move(coords);
  return p;
}

BallPoint BallPoint::numeric(std::vector<std::complex<double>> coords) {
  if (coords.size() != 3) throw std::invalid_argument("ball point needs 3 coordinates");
  BallPoint p;
  p.numeric_ = std::move(coords);
  return p;
}

std::vector<std::complex<double>> BallPoint::numeric_coords() const {
  if (!exact_) return numeric_;
  std::vector<std::complex<double>> out;
  for (const auto& c : *exact_) out.push_back(c.embed());
  return out;
}

CycVec BallPoint::ambient() const {
  if (!exact_) throw std::logic_error("ambient vector needs an exact point");
  auto basis = diagonal_eigenbasis();
  CycVec out(basis.front().size());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += (*exact_)[i] * basis[i][j];
  return out;
}

bool ball_contains(const BallPoint& p) {
  if (p.is_exact()) {
    bool all_zero = true;
    for (const auto& c : p.exact_coords()) all_zero = all_zero && c.is_zero();
    if (all_zero) throw std::invalid_argument("zero vector is not a point of P(T_z)");
    CycVec v = p.ambient();
    return sign(eigen_pairing(v, v)) > 0;
  }
  auto c = p.numeric_coords();
  double size = 0;
  for (const auto& x : c) size += std::norm(x);
  if (size == 0) throw std::invalid_argument("zero vector is not a point of P(T_z)");
  const auto& f = numeric_form();
  std::complex<double> value = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) value += c[i] * f[i][j] * std::conj(c[j]);
  if (std::abs(value.real()) <= kNumericBand) throw IndeterminateError("norm within the numeric tolerance band");
  return value.real() > 0;
}

bool hyperplane_contains(const LatticeVec& r, const BallPoint& p) {
  if (t_lattice().norm(r) != -2) throw std::invalid_argument("hyperplane vector must have norm -2");
  auto basis = diagonal_eigenbasis();
  CycVec rc = to_cyclotomic(r);
  if (p.is_exact()) {
    Cyclotomic value;
    for (std::size_t i = 0; i < 3; ++i) value += p.exact_coords()[i] * eigen_pairing(basis[i], rc);
    return value.is_zero();
  }
  std::complex<double> value = 0;
  auto c = p.numeric_coords();
  for (std::size_t i = 0; i < 3; ++i) value += c[i] * eigen_pairing(basis[i], rc).embed();
  return std::abs(value) <= kNumericBand;
}

bool in_discriminant_hyperplane(const LatticeVec& r, const BallPoint& z) {
  return hyperplane_contains(r, z) && ball_contains(z);
}

}  // namespace k3ball
