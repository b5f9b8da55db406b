#pragma once
// Independent reference computations used only by the tests. Deliberately naive.

#include "k3ball/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using k3ball::BigInt;
using k3ball::IntMatrix;

// Leibniz expansion; fine up to 7x7.
inline BigInt leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Counts of positive / negative eigenvalues from a floating symmetric eigensolver.
inline std::pair<int, int> float_signature(const IntMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) > 1e-9) ++pos;
    if (es.eigenvalues()(i) < -1e-9) ++neg;
  }
  return {pos, neg};
}

// Every v in [-b, b]^n with v^T G v == norm, first nonzero entry positive.
inline std::vector<std::vector<long>> box_vectors(const IntMatrix& g, int bound, long norm) {
  const std::size_t n = g.rows();
  std::vector<std::vector<long>> out;
  std::vector<long> v(n, -bound);
  for (;;) {
    long q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += v[i] * g(i, j).convert_to<long>() * v[j];
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (q == norm && first != v.end() && *first > 0) out.push_back(v);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (v[i] < bound) {
        ++v[i];
        break;
      }
      v[i] = -bound;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Product of the diagonal of a Smith form computed by gcd of k x k minors, k = 1.
inline BigInt content(const IntMatrix& m) {
  BigInt g = 0;
  for (const auto& x : m.data()) g = k3ball::gcd(g, x);
  return g;
}

}  // namespace oracle
