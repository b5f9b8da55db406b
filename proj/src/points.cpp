#include "k3ball/points.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace k3ball {

ProjectivePoint::ProjectivePoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
  if (x == 0 && y == 0) throw std::invalid_argument("(0 : 0) is not a point of P^1");
}

std::string ProjectivePoint::to_string() const {
  if (is_infinity()) return "inf";
  return k3ball::to_string(Rational(x / y));
}

ProjectivePoint ProjectivePoint::parse(const std::string& token) {
  std::string t;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "inf" || t == "oo" || t == "infinity") return infinity();
  if (t.empty()) throw std::invalid_argument("empty point token");
  try {
    return affine(parse_rational(t));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad point token \"" + token + "\"");
  }
}

PointConfig PointConfig::parse(const std::string& text) {
  std::vector<ProjectivePoint> pts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) pts.push_back(ProjectivePoint::parse(tok));
  if (pts.size() != 5) throw std::invalid_argument("expected 5 points, got " + std::to_string(pts.size()));
  return PointConfig{{pts[0], pts[1], pts[2], pts[3], pts[4]}};
}

std::vector<int> PointConfig::partition() const {
  std::vector<int> part;
  std::array<bool, 5> seen{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (seen[i]) continue;
    int m = 0;
    for (std::size_t j = i; j < 5; ++j)
      if (!seen[j] && points[i].same_as(points[j])) {
        seen[j] = true;
        ++m;
      }
    part.push_back(m);
  }
  std::sort(part.rbegin(), part.rend());
  return part;
}

StabilityClass classify(const PointConfig& c) {
  auto p = c.partition();
  return {p.front() <= 2 ? Stability::Stable : Stability::Unstable, p};
}

std::string to_string(Stability s) { return s == Stability::Stable ? "Stable" : "Unstable"; }

std::string partition_string(const std::vector<int>& partition) {
  std::string out = "(";
  for (std::size_t i = 0; i < partition.size(); ++i) out += (i ? "," : "") + std::to_string(partition[i]);
  return out + ")";
}

CaseLattices case_lattices(const std::vector<int>& partition) {
  int sum = 0, doubles = 0;
  for (int m : partition) {
    if (m < 1) throw std::invalid_argument("bad multiplicity in partition");
    if (m > 2) throw std::invalid_argument("unstable partition " + partition_string(partition));
    sum += m;
    doubles += m == 2;
  }
  if (sum != 5) throw std::invalid_argument("partition must sum to 5");
  switch (doubles) {
    case 0:
      return {"S", "T"};
    case 1:
      return {"S1", "T1"};
    default:
      return {"S2", "T2"};
  }
}

std::vector<Rational> expand_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

EquationBundle equations(const PointConfig& config) {
  auto cls = classify(config);
  if (cls.stability != Stability::Stable) throw std::invalid_argument("equations need a stable configuration");

  EquationBundle b;
  b.normalization = {Rational(1), Rational(0), Rational(0), Rational(1)};
  std::array<ProjectivePoint, 5> pts = config.points;
  bool has_inf = std::any_of(pts.begin(), pts.end(), [](const ProjectivePoint& p) { return p.is_infinity(); });
  if (has_inf) {
    // (x : y) -> (y : x - t y) with t avoiding every finite point.
    long t = 0;
    auto clashes = [&](long cand) {
      return std::any_of(pts.begin(), pts.end(),
                         [&](const ProjectivePoint& p) { return !p.is_infinity() && p.x == Rational(cand) * p.y; });
    };
    while (clashes(t)) ++t;
    b.normalization = {Rational(0), Rational(1), Rational(1), Rational(-t)};
    b.normalized = true;
    for (auto& p : pts) p = ProjectivePoint(p.y, p.x - Rational(t) * p.y);
  }
  for (std::size_t i = 0; i < 5; ++i) b.lambdas[i] = pts[i].x / pts[i].y;

  for (std::size_t i = 0; i < 5; ++i) {
    b.quartic_pencil[0][i] = 1;
    b.quartic_pencil[1][i] = b.lambdas[i];
  }
  auto f = expand_roots({b.lambdas.begin(), b.lambdas.end()});
  std::copy(f.begin(), f.end(), b.f5.begin());

  b.sextic.push_back({{6, 0, 0}, Rational(1)});
  for (int k = 0; k <= 5; ++k)
    if (b.f5[static_cast<std::size_t>(k)] != 0) b.sextic.push_back({{1, 5 - k, k}, -b.f5[static_cast<std::size_t>(k)]});

  std::vector<std::pair<Rational, int>> roots;
  for (const auto& l : b.lambdas) {
    auto it = std::find_if(roots.begin(), roots.end(), [&](const auto& r) { return r.first == l; });
    if (it == roots.end()) roots.emplace_back(l, 1);
    else ++it->second;
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& [r, m] : roots) b.singular_members.push_back({r, m, m == 1 ? "I" : "II"});
  b.nodal = roots.size() < 5;
  return b;
}

}  // namespace k3ball
