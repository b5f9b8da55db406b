#include "k3ball/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace k3ball {

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::domain_error("matrix entry " + to_string(m(i, j)) + " is not integral");
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

IntVec to_integer(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw std::domain_error("vector entry " + to_string(v[i]) + " is not integral");
    out[i] = numerator(v[i]);
  }
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Matrix<std::int64_t> to_int64(const IntMatrix& m) {
  Matrix<std::int64_t> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j));
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

BigInt determinant(const IntMatrix& input) {
  if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& input) {
  if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = input;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  return aug.block(0, n, n, n);
}

RatMatrix rational_kernel(const RatMatrix& m) {
  RatMatrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  RatMatrix k(m.cols() - piv.size(), m.cols());
  std::size_t r = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(r, f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(r, piv[i]) = -a(i, f);
    ++r;
  }
  return k;
}

RatVec solve(const RatMatrix& m, const RatVec& b) { return inverse(m) * b; }

namespace {

// Extended gcd: returns g = gcd(a,b) >= 0 with s*a + t*b = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, cs = 0, old_t = 0, ct = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cs;
    old_s = cs;
    cs = tmp;
    tmp = old_t - q * ct;
    old_t = ct;
    ct = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

// Replace rows (i, j) by (s*ri + t*rj, -b/g*ri + a/g*rj); unimodular.
template <typename M>
void combine_rows(M& m, std::size_t i, std::size_t j, const BigInt& s, const BigInt& t, const BigInt& u,
                  const BigInt& v) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt ri = m(i, c), rj = m(j, c);
    m(i, c) = s * ri + t * rj;
    m(j, c) = u * ri + v * rj;
  }
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Hermite hermite_rows(const IntMatrix& m) {
  Hermite h{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& a = h.form;
  IntMatrix& w = h.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Collapse column c below row r into row r by gcd steps.
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.swap_rows(r, i);
        w.swap_rows(r, i);
        continue;
      }
      BigInt s, t;
      BigInt g = ext_gcd(a(r, c), a(i, c), s, t);
      BigInt u = -a(i, c) / g, v = a(r, c) / g;
      combine_rows(a, r, i, s, t, u, v);
      combine_rows(w, r, i, s, t, u, v);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
      for (std::size_t j = 0; j < w.cols(); ++j) w(r, j) = -w(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(a(i, c), a(r, c));
      if (q == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) -= q * w(r, j);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

IntMatrix row_span_basis(const IntMatrix& m) {
  Hermite h = hermite_rows(m);
  return h.form.block(0, 0, h.rank, m.cols());
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // Left kernel of m^T: rows w with w m^T = 0, i.e. m w^T = 0.
  Hermite h = hermite_rows(m.transpose());
  const std::size_t n = m.cols();
  IntMatrix k(n - h.rank, n);
  for (std::size_t i = h.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - h.rank, j) = h.transform(i, j);
  // Size-reduce against earlier kernel rows via HNF of the kernel itself.
  if (k.rows() > 0) k = row_span_basis(k);
  return k;
}

Smith smith_form(const IntMatrix& m) {
  Smith s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& a = s.diagonal;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t k = 0; k < n; ++k) {
    // Each pass either finishes position k or strictly lowers |a(k,k)|.
    for (;;) {
      std::size_t pi = a.rows(), pj = a.cols();
      BigInt best;
      for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j)
          if (a(i, j) != 0 && (pi == a.rows() || abs(a(i, j)) < best)) {
            best = abs(a(i, j));
            pi = i;
            pj = j;
          }
      if (pi == a.rows()) return s;  // trailing block is zero
      a.swap_rows(k, pi);
      s.left.swap_rows(k, pi);
      a.swap_cols(k, pj);
      s.right.swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < a.rows(); ++i) {
        BigInt q = floor_div(a(i, k), a(k, k));
        if (q != 0) {
          for (std::size_t c = k; c < a.cols(); ++c) a(i, c) -= q * a(k, c);
          for (std::size_t c = 0; c < s.left.cols(); ++c) s.left(i, c) -= q * s.left(k, c);
        }
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        BigInt q = floor_div(a(k, j), a(k, k));
        if (q != 0) {
          for (std::size_t r = k; r < a.rows(); ++r) a(r, j) -= q * a(r, k);
          for (std::size_t r = 0; r < s.right.rows(); ++r) s.right(r, j) -= q * s.right(r, k);
        }
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row k and repeat.
      bool divides = true;
      for (std::size_t i = k + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (a(i, j) % a(k, k) != 0) {
            for (std::size_t c = k; c < a.cols(); ++c) a(k, c) += a(i, c);
            for (std::size_t c = 0; c < s.left.cols(); ++c) s.left(k, c) += s.left(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(k, k) < 0) {
      for (std::size_t c = 0; c < a.cols(); ++c) a(k, c) = -a(k, c);
      for (std::size_t c = 0; c < s.left.cols(); ++c) s.left(k, c) = -s.left(k, c);
    }
  }
  return s;
}

Signature signature(const RatMatrix& input) {
  if (!input.is_symmetric()) throw std::invalid_argument("signature of non-symmetric matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;

  auto eliminate_with = [&](std::size_t p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || a(i, p) == 0) continue;
      Rational f = a(i, p) / a(p, p);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
      for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, p);
    }
  };

  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p != n) {
      eliminate_with(p);
      (a(p, p) > 0 ? sig.positive : sig.negative)++;
      done[p] = true;
      --remaining;
      continue;
    }
    // All remaining diagonal entries vanish: split off a hyperbolic pair.
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi == n) {
      sig.zero += static_cast<int>(remaining);
      break;
    }
    // The block [[0,c],[c,0]] is invertible; clear rows/cols pi, pj elsewhere.
    const Rational c = a(pi, pj);
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || k == pi || k == pj) continue;
      // v_k -= (a_kj / c) v_i + (a_ki / c) v_j
      Rational fi = a(k, pj) / c, fj = a(k, pi) / c;
      if (fi == 0 && fj == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a(k, j) -= fi * a(pi, j) + fj * a(pj, j);
      for (std::size_t j = 0; j < n; ++j) a(j, k) -= fi * a(j, pi) + fj * a(j, pj);
    }
    sig.positive++;
    sig.negative++;
    done[pi] = done[pj] = true;
    remaining -= 2;
  }
  return sig;
}

bool is_positive_definite(const IntMatrix& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.block(0, 0, k, k)) <= 0) return false;
  return true;
}

bool is_negative_definite(const IntMatrix& m) { return is_positive_definite(-m); }

}  // namespace k3ball
