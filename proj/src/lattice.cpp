#include "k3ball/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace k3ball {

IntLattice::IntLattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (!gram_.square()) throw std::invalid_argument("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  det_ = determinant(gram_);
  if (det_ == 0) throw std::invalid_argument("degenerate Gram matrix (det = 0)");
}

bool IntLattice::even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Signature IntLattice::signature() const { return k3ball::signature(gram_); }

Rational IntLattice::inner(const RationalVec& a, const RationalVec& b) const {
  return bilinear(to_rational(gram_), a, b);
}

LatticeVec IntLattice::unit(std::size_t i) const {
  LatticeVec v(rank(), 0);
  v.at(i) = 1;
  return v;
}

LatticeInvariants invariants(const IntLattice& l) { return {l.det(), l.rank(), l.signature(), l.even()}; }

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "+" + b.name();
  return IntLattice(block_diagonal(a.gram(), b.gram()), name);
}

IntLattice direct_sum(const std::vector<IntLattice>& parts) {
  IntLattice out;
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

IntLattice rescale(const IntLattice& l, const BigInt& m) {
  if (m == 0) throw std::invalid_argument("rescaling factor must be nonzero");
  std::string name = l.name().empty() ? std::string{} : l.name() + "(" + m.str() + ")";
  return IntLattice(m * l.gram(), name);
}

std::vector<RationalVec> dual_basis(const IntLattice& l) {
  RatMatrix inv = inverse(to_rational(l.gram()));
  std::vector<RationalVec> out;
  for (std::size_t i = 0; i < l.rank(); ++i) out.push_back(inv.col(i));
  return out;
}

IntLattice lattice_U() { return IntLattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }
IntLattice lattice_V() { return IntLattice(IntMatrix{{2, 1}, {1, -2}}, "V"); }

namespace {

IntLattice from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      std::string name) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return IntLattice(std::move(g), std::move(name));
}

}  // namespace

IntLattice root_lattice_A(std::size_t n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e, "A" + std::to_string(n));
}

IntLattice root_lattice_D(std::size_t n) {
  if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 3, n - 1);
  return from_edges(n, e, "D" + std::to_string(n));
}

IntLattice root_lattice_E(std::size_t n) {
  if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
  // Chain of n-1 nodes with the extra node on the third one.
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(2, n - 1);
  return from_edges(n, e, "E" + std::to_string(n));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

IntLattice catalog_atom(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty lattice name");
  // Trailing "(m)" rescale, possibly repeated.
  if (s.back() == ')') {
    auto open = s.rfind('(');
    if (open == std::string::npos) throw std::invalid_argument("unbalanced parenthesis in \"" + s + "\"");
    std::string factor = trim(s.substr(open + 1, s.size() - open - 2));
    BigInt m;
    try {
      m = BigInt(factor);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("bad rescale factor \"" + factor + "\"");
    }
    return rescale(catalog_atom(s.substr(0, open)), m);
  }
  if (s == "U") return lattice_U();
  if (s == "V") return lattice_V();
  auto parse_index = [&](std::size_t lo, std::size_t hi) {
    std::string digits = s.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("unknown lattice \"" + s + "\"");
    std::size_t n = std::stoul(digits);
    if (n < lo || n > hi) throw std::invalid_argument("lattice \"" + s + "\" outside the catalog range");
    return n;
  };
  switch (s[0]) {
    case 'A': return root_lattice_A(parse_index(1, 17));
    case 'D': return root_lattice_D(parse_index(4, 16));
    case 'E': return root_lattice_E(parse_index(6, 8));
    default: throw std::invalid_argument("unknown lattice \"" + s + "\"");
  }
}

}  // namespace

IntLattice catalog_lattice(const std::string& expr) {
  std::vector<IntLattice> parts;
  int depth = 0;
  std::string cur;
  for (char c : expr) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(catalog_atom(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(catalog_atom(cur));
  IntLattice l = direct_sum(parts);
  return IntLattice(l.gram(), trim(expr));
}

Sublattice::Sublattice(IntLattice ambient, IntMatrix basis_rows)
    : ambient_(std::move(ambient)), basis_(std::move(basis_rows)) {
  if (basis_.rows() > 0 && basis_.cols() != ambient_.rank())
    throw std::invalid_argument("sublattice basis has wrong length");
  if (basis_.rows() == 0) basis_ = IntMatrix(0, ambient_.rank());
  gram_ = basis_ * ambient_.gram() * basis_.transpose();
  degenerate_ = basis_.rows() > 0 && determinant(gram_) == 0;
}

IntLattice Sublattice::lattice(std::string name) const {
  if (degenerate_) throw std::domain_error("sublattice form is degenerate");
  return IntLattice(gram_, std::move(name));
}

Sublattice sublattice(const IntLattice& l, const std::vector<LatticeVec>& vecs) {
  IntMatrix b(vecs.size(), l.rank());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != l.rank()) throw std::invalid_argument("vector length does not match lattice rank");
    b.set_row(i, vecs[i]);
  }
  // Dependence witness: integer kernel of b^T.
  IntMatrix rel = integer_kernel(b.transpose());
  if (rel.rows() > 0) throw DependentVectorsError("spanning vectors are linearly dependent", rel.row(0));
  return Sublattice(l, std::move(b));
}

Sublattice orthogonal_complement(const IntLattice& l, const Sublattice& s) {
  IntMatrix k = integer_kernel(s.basis() * l.gram());
  return Sublattice(l, std::move(k));
}

BigInt index_of(const IntLattice& l, const Sublattice& s) {
  if (s.rank() != l.rank()) throw std::invalid_argument("index requires a full-rank sublattice");
  return abs(determinant(s.basis()));
}

Sublattice saturation(const IntLattice& l, const Sublattice& s) {
  // Vectors orthogonal (in the standard dot product) to the annihilator of S.
  IntMatrix ann = integer_kernel(s.basis());
  if (ann.rows() == 0) return Sublattice(l, IntMatrix::identity(l.rank()));
  return Sublattice(l, integer_kernel(ann));
}

bool same_sublattice(const Sublattice& a, const Sublattice& b) {
  if (a.ambient().gram() != b.ambient().gram()) return false;
  return row_span_basis(a.basis()) == row_span_basis(b.basis());
}

GeneratedLattice generated_lattice(const IntMatrix& g, std::string name) {
  if (!g.is_symmetric()) throw std::invalid_argument("generator Gram matrix must be symmetric");
  const std::size_t k = g.rows();
  // Greedy choice of generators whose rows of g are independent: these form a
  // Q-basis of Z^k modulo the radical.
  std::vector<std::size_t> chosen;
  RatMatrix rows(0, k);
  for (std::size_t j = 0; j < k; ++j) {
    RatMatrix trial(chosen.size() + 1, k);
    for (std::size_t a = 0; a < chosen.size(); ++a)
      for (std::size_t c = 0; c < k; ++c) trial(a, c) = g(chosen[a], c);
    for (std::size_t c = 0; c < k; ++c) trial(chosen.size(), c) = g(j, c);
    if (rank(trial) == chosen.size() + 1) chosen.push_back(j);
  }
  const std::size_t r = chosen.size();
  if (r == 0) throw std::invalid_argument("generators span the zero lattice");
  IntMatrix sub(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) sub(a, b) = g(chosen[a], chosen[b]);
  RatMatrix sub_inv = inverse(to_rational(sub));
  // Coordinates of every generator against the chosen Q-basis.
  RatMatrix coords(k, r);
  for (std::size_t j = 0; j < k; ++j) {
    RatVec pairing(r);
    for (std::size_t a = 0; a < r; ++a) pairing[a] = g(j, chosen[a]);
    coords.set_row(j, sub_inv * pairing);
  }
  bool integral = true;
  for (std::size_t j = 0; j < k && integral; ++j)
    for (std::size_t a = 0; a < r; ++a)
      if (!is_integer(coords(j, a))) {
        integral = false;
        break;
      }
  if (integral) return {IntLattice(sub, std::move(name)), to_integer(coords), chosen};

  // Fall back to an HNF basis of the module generated by all coordinates.
  BigInt den = 1;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < r; ++a) den = lcm(den, denominator(coords(j, a)));
  IntMatrix scaled = to_integer(Rational(den) * coords);
  IntMatrix basis = row_span_basis(scaled);  // r x r, rows in chosen-basis units of 1/den
  RatMatrix basis_q = Rational(1, den) * to_rational(basis);
  RatMatrix gram_q = basis_q * to_rational(sub) * basis_q.transpose();
  RatMatrix basis_inv = inverse(basis_q);
  IntMatrix gen_coords = to_integer(coords * basis_inv);
  return {IntLattice(to_integer(gram_q), std::move(name)), gen_coords, {}};
}

std::vector<LatticeVec> enumerate_norm_vectors(const IntLattice& l, const BigInt& norm) {
  const std::size_t n = l.rank();
  IntMatrix q = -l.gram();
  if (!is_positive_definite(q)) throw std::invalid_argument("vector enumeration requires a negative definite lattice");
  if (norm >= 0) throw std::invalid_argument("target norm must be negative");
  const Rational target = Rational(-norm);

  // q = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, exact LDL^T.
  RatMatrix a = to_rational(q);
  std::vector<Rational> d(n);
  RatMatrix mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = a(i, j) / d[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= mu(i, j) * a(i, k);
  }

  std::vector<LatticeVec> out;
  LatticeVec x(n, 0);
  // Depth-first from the last coordinate down.
  std::function<void(std::size_t, const Rational&)> visit = [&](std::size_t level, const Rational& used) {
    const std::size_t i = level;
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= mu(i, j) * Rational(x[j]);
    Rational room = (target - used) / d[i];
    if (room < 0) return;
    double c = center.convert_to<double>(), w = std::sqrt(room.convert_to<double>());
    BigInt lo = BigInt(static_cast<long long>(std::floor(c - w))) - 1;
    BigInt hi = BigInt(static_cast<long long>(std::ceil(c + w))) + 1;
    for (BigInt v = lo; v <= hi; ++v) {
      Rational t = Rational(v) - center;
      Rational part = d[i] * t * t;
      if (used + part > target) continue;
      x[i] = v;
      if (i == 0) {
        if (used + part == target) out.push_back(x);
      } else {
        visit(i - 1, used + part);
      }
    }
    x[i] = 0;
  };
  visit(n - 1, Rational(0));

  // Keep one of each +-pair: first nonzero coordinate positive.
  std::vector<LatticeVec> half;
  for (auto& v : out) {
    auto it = std::find_if(v.begin(), v.end(), [](const BigInt& c) { return c != 0; });
    if (it != v.end() && *it > 0) half.push_back(v);
  }
  std::sort(half.begin(), half.end());
  return half;
}

bool is_a4_orbit_gram(const IntMatrix& g) {
  if (g.rows() != 4 || !g.is_symmetric()) throw std::invalid_argument("orbit Gram must be a symmetric 4x4 matrix");
  for (std::size_t i = 0; i < 4; ++i)
    if (g(i, i) != -2) throw std::invalid_argument("orbit Gram must have diagonal -2");
  const BigInt m1 = g(0, 1), m2 = g(0, 2);
  // <rho^i r, rho^j r> depends on |i-j| only, with <r, rho^3 r> = m2.
  const BigInt expect[4] = {-2, m1, m2, m2};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (g(i, j) != expect[j - i]) return false;
  if (!is_negative_definite(g)) return false;
  return (m1 == 1 && m2 == 0) || (m1 == 0 && m2 == 1);
}

}  // namespace k3ball
