#include "k3ball/disc_form.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace k3ball {

namespace {

constexpr std::size_t kCensusCap = 1000000;
constexpr std::size_t kIsomorphismCap = 10000;
constexpr std::size_t kOrthogonalCap = 1000;

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

DiscForm::DiscForm(IntLattice lattice) : lattice_(std::move(lattice)) {
  if (!lattice_.even()) throw std::invalid_argument("discriminant quadratic form needs an even lattice");
  const std::size_t n = lattice_.rank();
  Smith s = smith_form(lattice_.gram());
  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.diagonal(i, i) == 0) throw std::logic_error("Smith form of a nondegenerate Gram has a zero");
    if (s.diagonal(i, i) != 1) nontrivial.push_back(i);
  }
  smith_rows_ = IntMatrix(nontrivial.size(), n);
  for (std::size_t k = 0; k < nontrivial.size(); ++k) {
    const std::size_t i = nontrivial[k];
    const BigInt d = s.diagonal(i, i);
    factors_.push_back(to_int64(d));
    RationalVec g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = Rational(s.right(r, i), d);
    gens_.push_back(std::move(g));
    smith_rows_.set_row(k, s.left.row(i));
    order_ *= static_cast<std::size_t>(factors_.back());
  }
  exponent_ = factors_.empty() ? 1 : factors_.back();

  const std::size_t k = gens_.size();
  q_gen_.resize(k);
  b_gen_.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rational v = lattice_.inner(gens_[i], gens_[j]) * exponent_;
      if (!is_integer(v)) throw std::logic_error("generator pairing not in (1/exponent)Z");
      std::int64_t iv = to_int64(numerator(v));
      if (i == j) q_gen_[i] = mod64(iv, 2 * exponent_);
      b_gen_[i][j] = b_gen_[j][i] = mod64(iv, exponent_);
    }
}

DiscForm discriminant_group(const IntLattice& l) { return DiscForm(l); }

DiscElement DiscForm::generator(std::size_t i) const {
  DiscElement e = zero();
  e.at(i) = 1 % factors_.at(i);
  return e;
}

DiscElement DiscForm::element_of(const RationalVec& x) const {
  RatVec y = to_rational(lattice_.gram()) * x;
  IntVec yi;
  try {
    yi = to_integer(y);
  } catch (const std::domain_error&) {
    throw std::domain_error("vector is not in the dual lattice");
  }
  IntVec c = smith_rows_ * yi;
  DiscElement e(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = to_int64(mod(c[i], BigInt(factors_[i])));
  return e;
}

RationalVec DiscForm::lift(const DiscElement& x) const {
  RationalVec v(lattice_.rank(), Rational(0));
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (x[i] != 0)
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += gens_[i][r] * x[i];
  return v;
}

DiscElement DiscForm::reduce(DiscElement a) const {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod64(a[i], factors_[i]);
  return a;
}

DiscElement DiscForm::add(const DiscElement& a, const DiscElement& b) const {
  DiscElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod64(a[i] + b[i], factors_[i]);
  return c;
}

DiscElement DiscForm::scale(const DiscElement& a, std::int64_t n) const {
  DiscElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod64(mod64(n, factors_[i]) * a[i], factors_[i]);
  return c;
}

std::int64_t DiscForm::q_scaled(const DiscElement& x) const {
  const std::int64_t m = 2 * exponent_;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    s = mod64(s + mod64(x[i] * x[i], m) * q_gen_[i], m);
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != 0) s = mod64(s + 2 * mod64(x[i] * x[j], m) * b_gen_[i][j], m);
  }
  return s;
}

std::int64_t DiscForm::b_scaled(const DiscElement& x, const DiscElement& y) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s = mod64(s + mod64(x[i] * y[j], exponent_) * b_gen_[i][j], exponent_);
  }
  return s;
}

Rational DiscForm::q(const DiscElement& x) const { return Rational(q_scaled(x), exponent_); }
Rational DiscForm::b(const DiscElement& x, const DiscElement& y) const { return Rational(b_scaled(x, y), exponent_); }

Rational q_value(const DiscForm& d, const DiscElement& x) { return d.q(d.reduce(x)); }
Rational b_value(const DiscForm& d, const DiscElement& x, const DiscElement& y) {
  return d.b(d.reduce(x), d.reduce(y));
}

Rational symmetric_q(const Rational& q) {
  Rational r = mod(q, BigInt(2));
  return r > 1 ? r - 2 : r;
}

std::vector<DiscElement> DiscForm::elements() const {
  std::vector<DiscElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::size_t DiscForm::index(const DiscElement& x) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    idx += static_cast<std::size_t>(mod64(x[i], factors_[i])) * stride;
    stride *= static_cast<std::size_t>(factors_[i]);
  }
  return idx;
}

DiscElement DiscForm::element_at(std::size_t index) const {
  DiscElement e(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    e[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return e;
}

std::size_t Census::total() const {
  std::size_t t = zero_element;
  for (const auto& [v, c] : nonzero_by_value) t += c;
  return t;
}

std::vector<std::pair<Rational, std::size_t>> Census::ordered_rows() const {
  std::vector<std::pair<Rational, std::size_t>> rows;
  for (const auto& [v, c] : nonzero_by_value) rows.emplace_back(symmetric_q(v), c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    Rational aa = abs(a.first), ab = abs(b.first);
    if (aa != ab) return aa < ab;
    return a.first > b.first;
  });
  return rows;
}

Census census(const DiscForm& d) {
  if (d.order() > kCensusCap) throw std::length_error("discriminant group too large for a census");
  Census c;
  for (std::size_t i = 0; i < d.order(); ++i) {
    DiscElement x = d.element_at(i);
    if (i == 0)
      c.zero_element++;
    else
      c.nonzero_by_value[d.q(x)]++;
  }
  return c;
}

DiscMap::DiscMap(std::shared_ptr<const DiscForm> source, std::shared_ptr<const DiscForm> target,
                 std::vector<DiscElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const auto& f = source_->invariant_factors();
  if (images_.size() != f.size()) throw std::invalid_argument("disc map needs one image per generator");
  for (std::size_t i = 0; i < f.size(); ++i) {
    images_[i] = target_->reduce(images_[i]);
    if (target_->scale(images_[i], f[i]) != target_->zero())
      throw std::invalid_argument("disc map does not respect generator orders");
  }
}

DiscMap DiscMap::identity(std::shared_ptr<const DiscForm> d) {
  std::vector<DiscElement> imgs;
  for (std::size_t i = 0; i < d->invariant_factors().size(); ++i) imgs.push_back(d->generator(i));
  return DiscMap(d, d, std::move(imgs));
}

DiscElement DiscMap::apply(const DiscElement& x) const {
  DiscElement y = target_->zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y = target_->add(y, target_->scale(images_[i], x[i]));
  return y;
}

bool DiscMap::is_identity() const {
  if (source_->invariant_factors() != target_->invariant_factors()) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != source_->generator(i)) return false;
  return true;
}

std::vector<std::uint32_t> DiscMap::permutation() const {
  std::vector<std::uint32_t> p(source_->order());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = static_cast<std::uint32_t>(target_->index(apply(source_->element_at(i))));
  return p;
}

bool DiscMap::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  auto p = permutation();
  std::vector<bool> hit(p.size(), false);
  for (auto v : p) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool DiscMap::preserves_form(int sign) const {
  const std::int64_t e = source_->exponent();
  if (target_->exponent() != e) return false;
  const std::size_t k = images_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const DiscElement gi = source_->generator(i);
    if (mod64(target_->q_scaled(images_[i]) - sign * source_->q_scaled(gi), 2 * e) != 0) return false;
    for (std::size_t j = i + 1; j < k; ++j)
      if (mod64(target_->b_scaled(images_[i], images_[j]) - sign * source_->b_scaled(gi, source_->generator(j)), e) != 0)
        return false;
  }
  return true;
}

DiscMap operator*(const DiscMap& a, const DiscMap& b) {
  std::vector<DiscElement> imgs;
  for (const auto& y : b.images_) imgs.push_back(a.apply(y));
  return DiscMap(b.source_, a.target_, std::move(imgs));
}

std::optional<long> DiscMap::order(long limit) const {
  if (source_->invariant_factors() != target_->invariant_factors())
    throw std::invalid_argument("order of a map between different groups");
  DiscMap p = *this;
  for (long k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = *this * p;
  }
  return std::nullopt;
}

DiscMap DiscMap::inverse() const {
  auto p = permutation();
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  std::vector<DiscElement> imgs;
  for (std::size_t i = 0; i < target_->invariant_factors().size(); ++i)
    imgs.push_back(source_->element_at(inv.at(target_->index(target_->generator(i)))));
  return DiscMap(target_, source_, std::move(imgs));
}

namespace {

// Backtracking over generator images with q/b pruning. `visit` returns false
// to stop the search.
void search_isometries(const std::shared_ptr<const DiscForm>& d1, const std::shared_ptr<const DiscForm>& d2,
                       int sign, const std::function<bool(const DiscMap&)>& visit) {
  const auto& f = d1->invariant_factors();
  const std::size_t k = f.size();
  const std::int64_t e = d1->exponent();
  std::vector<std::vector<DiscElement>> cand(k);
  const auto all = d2->elements();
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t target_q = d1->q_scaled(d1->generator(i)) * sign;
    for (const auto& y : all) {
      if (d2->scale(y, f[i]) != d2->zero()) continue;
      if (mod64(d2->q_scaled(y) - target_q, 2 * e) != 0) continue;
      cand[i].push_back(y);
    }
  }
  std::vector<DiscElement> chosen(k);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == k) {
      DiscMap m(d1, d2, chosen);
      if (m.is_bijective() && !visit(m)) stop = true;
      return;
    }
    for (const auto& y : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = mod64(d2->b_scaled(y, chosen[j]) - sign * d1->b_scaled(d1->generator(i), d1->generator(j)), e) == 0;
      if (!ok) continue;
      chosen[i] = y;
      rec(i + 1);
      if (stop) return;
    }
  };
  rec(0);
}

bool census_compatible(const DiscForm& d1, const DiscForm& d2, int sign) {
  Census c1 = census(d1), c2 = census(d2);
  std::map<Rational, std::size_t> flipped;
  for (const auto& [v, c] : c1.nonzero_by_value) flipped[mod(v * sign, BigInt(2))] += c;
  return flipped == c2.nonzero_by_value;
}

}  // namespace

std::optional<DiscMap> forms_isomorphic(const DiscForm& d1, const DiscForm& d2, bool anti) {
  if (d1.order() > kIsomorphismCap || d2.order() > kIsomorphismCap)
    throw std::length_error("discriminant group too large for isomorphism search");
  if (d1.invariant_factors() != d2.invariant_factors()) return std::nullopt;
  const int sign = anti ? -1 : 1;
  if (!census_compatible(d1, d2, sign)) return std::nullopt;
  auto p1 = std::make_shared<const DiscForm>(d1);
  auto p2 = std::make_shared<const DiscForm>(d2);
  std::optional<DiscMap> found;
  search_isometries(p1, p2, sign, [&](const DiscMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<DiscMap> orthogonal_group(const DiscForm& d) {
  if (d.order() > kOrthogonalCap) throw std::length_error("discriminant group too large for O(q) enumeration");
  auto p = std::make_shared<const DiscForm>(d);
  std::vector<DiscMap> out;
  search_isometries(p, p, 1, [&](const DiscMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t orthogonal_group_order(const DiscForm& d) { return orthogonal_group(d).size(); }

DiscMap induced_disc_action(const std::shared_ptr<const DiscForm>& d, const Isometry& g) {
  if (g.lattice().gram() != d->ambient().gram()) throw std::invalid_argument("isometry of a different lattice");
  std::vector<DiscElement> imgs;
  for (const auto& x : d->generators()) imgs.push_back(d->element_of(g.apply(x)));
  return DiscMap(d, d, std::move(imgs));
}

DiscMap induced_disc_action(const IntLattice& l, const Isometry& g) {
  return induced_disc_action(std::make_shared<const DiscForm>(l), g);
}

std::size_t generated_group_order(const std::vector<DiscMap>& gens) {
  if (gens.empty()) return 1;
  using Perm = std::vector<std::uint32_t>;
  std::vector<Perm> gp;
  for (const auto& g : gens) gp.push_back(g.permutation());
  Perm id(gp.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gp) {
        Perm c(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) c[i] = g[p[i]];
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Overlattice glue_overlattice(const IntLattice& s, const IntLattice& t, const DiscMap& gamma) {
  if (gamma.source().ambient().gram() != s.gram() || gamma.target().ambient().gram() != t.gram())
    throw std::invalid_argument("gluing map is not between A_S and A_T");
  if (!gamma.is_anti_isometry()) throw std::invalid_argument("gluing map is not an anti-isometry");
  const std::size_t n = s.rank(), m = t.rank();
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < n + m; ++i) {
    RatVec u(n + m, Rational(0));
    u[i] = 1;
    gens.push_back(u);
  }
  const auto& ds = gamma.source();
  for (std::size_t i = 0; i < ds.generators().size(); ++i) {
    RatVec v(n + m);
    const auto& x = ds.generators()[i];
    RatVec y = gamma.target().lift(gamma.images()[i]);
    for (std::size_t r = 0; r < n; ++r) v[r] = x[r];
    for (std::size_t r = 0; r < m; ++r) v[n + r] = y[r];
    gens.push_back(v);
  }
  BigInt den = 1;
  for (const auto& g : gens)
    for (const auto& c : g) den = lcm(den, denominator(c));
  IntMatrix scaled(gens.size(), n + m);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n + m; ++j) scaled(i, j) = numerator(gens[i][j] * den);
  IntMatrix basis_int = row_span_basis(scaled);
  RatMatrix basis = Rational(1, den) * to_rational(basis_int);
  RatMatrix gram = basis * to_rational(block_diagonal(s.gram(), t.gram())) * basis.transpose();
  return {IntLattice(to_integer(gram)), basis, n};
}

std::optional<Isometry> extend_isometry_pair(const Isometry& gs, const Isometry& gt, const DiscMap& gamma,
                                             const Overlattice& glued) {
  auto ds = gamma.source_ptr();
  auto dt = gamma.target_ptr();
  DiscMap as = induced_disc_action(ds, gs);
  DiscMap at = induced_disc_action(dt, gt);
  if (!(gamma * as == at * gamma)) return std::nullopt;
  RatMatrix block = to_rational(block_diagonal(gs.matrix(), gt.matrix()));
  RatMatrix bt = glued.basis.transpose();
  RatMatrix ext = inverse(bt) * block * bt;
  return Isometry(glued.lattice, to_integer(ext));
}

}  // namespace k3ball
