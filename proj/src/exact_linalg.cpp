#include "kspin/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace kspin {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::domain_error("matrix entry is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVector to_int(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw std::domain_error("vector entry is not integral");
    r[i] = v[i].get_num();
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rat determinant(const RatMatrix& in) {
  if (!in.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = in;
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        if (m(c, j) != 0) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Bareiss fraction-free elimination.
Int determinant(const IntMatrix& in) {
  if (!in.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  IntMatrix m = in;
  const std::size_t n = m.rows();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug = hstack(m, RatMatrix::identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix c = m;
  return rref(c).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rat(m)); }

std::vector<RatMatrix> rational_kernel(const RatMatrix& a) {
  RatMatrix m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatMatrix> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatMatrix v(a.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v(piv[r], 0) = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> kernel_matrix(const RatMatrix& a) {
  auto basis = rational_kernel(a);
  if (basis.empty()) return std::nullopt;
  RatMatrix k(a.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) k(i, j) = basis[j](i, 0);
  return k;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] -= q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t R = a.rows(), C = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(R);
  IntMatrix right = IntMatrix::identity(C);
  const std::size_t n = std::min(R, C);

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = R, pj = C;
      Int best;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j)
          if (d(i, j) != 0 && (pi == R || abs(d(i, j)) < best)) {
            best = abs(d(i, j));
            pi = i;
            pj = j;
          }
      if (pi == R) break;  // trailing block is zero
      swap_rows(d, k, pi);
      swap_rows(left, k, pi);
      swap_cols(d, k, pj);
      swap_cols(right, k, pj);

      bool dirty = false;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (d(i, k) == 0) continue;
        Int q = floor_div(d(i, k), d(k, k));
        add_row(d, i, k, q);
        add_row(left, i, k, q);
        if (d(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (d(k, j) == 0) continue;
        Int q = floor_div(d(k, j), d(k, k));
        add_col(d, j, k, q);
        add_col(right, j, k, q);
        if (d(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold any offending row into row k and retry.
      bool fixed = true;
      for (std::size_t i = k + 1; i < R && fixed; ++i)
        for (std::size_t j = k + 1; j < C; ++j)
          if (d(i, j) % d(k, k) != 0) {
            add_row(d, k, i, Int(-1));
            add_row(left, k, i, Int(-1));
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (d(k, k) < 0) {
      for (std::size_t j = 0; j < C; ++j) d(k, j) = -d(k, j);
      for (std::size_t j = 0; j < R; ++j) left(k, j) = -left(k, j);
    }
  }

  SmithForm out{std::vector<Int>(n), std::move(left), std::move(right)};
  for (std::size_t k = 0; k < n; ++k) out.invariant_factors[k] = d(k, k);
  return out;
}

RationalSquare is_rational_square(const Rat& q) {
  if (q == 0) throw std::invalid_argument("is_rational_square: zero is excluded");
  RationalSquare r;
  if (q < 0) return r;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return r;
  Int a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  r.is_square = true;
  r.root = Rat(a, b);
  r.root->canonicalize();
  return r;
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace kspin
