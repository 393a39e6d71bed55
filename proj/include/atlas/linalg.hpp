#ifndef ATLAS_LINALG_HPP
#define ATLAS_LINALG_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "atlas/field.hpp"

namespace atlas {

// Dense row-major matrix over a field object.
template <class F>
struct Mat {
  using Elem = typename F::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, Elem fill)
      : rows(r), cols(c), a(r * c, fill) {}
  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

using MatQ = Mat<QQ>;

// Exact rank by Gaussian elimination over the field.  Over QQ the pivoting is
// fraction-free in effect (gmp rationals stay canonical); over GF(p) it is
// plain elimination.  The matrix is consumed by value.
template <class F>
std::size_t rank_of(const F& K, Mat<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && K.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    auto inv = K.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (K.is_zero(m.at(i, c))) continue;
      auto f = K.mul(m.at(i, c), inv);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

template <class F>
std::size_t kernel_dim(const F& K, const Mat<F>& m) {
  return m.cols - rank_of(K, m);
}

// Basis of the right kernel {v : M v = 0}, as rows of the returned matrix.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& K, Mat<F> m) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && K.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    auto inv = K.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = K.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || K.is_zero(m.at(i, c))) continue;
      auto f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(r, j)));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free_c = 0; free_c < m.cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<typename F::Elem> v(m.cols, K.zero());
    v[free_c] = K.one();
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = K.neg(m.at(i, free_c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// 5x5 inverse (or general square) over a field; throws if singular.
template <class F>
Mat<F> inverse_of(const F& K, Mat<F> m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse_of: not square");
  std::size_t n = m.rows;
  Mat<F> inv(n, n, K.zero());
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = K.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && K.is_zero(m.at(piv, c))) ++piv;
    if (piv == n) throw std::domain_error("inverse_of: singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    auto f = K.inv(m.at(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(c, j) = K.mul(m.at(c, j), f);
      inv.at(c, j) = K.mul(inv.at(c, j), f);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || K.is_zero(m.at(i, c))) continue;
      auto g = m.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = K.sub(m.at(i, j), K.mul(g, m.at(c, j)));
        inv.at(i, j) = K.sub(inv.at(i, j), K.mul(g, inv.at(c, j)));
      }
    }
  }
  return inv;
}

// Primitive integer kernel vector of an integer matrix with a 1-dimensional
// rational kernel.  Returns empty if the kernel dimension is not exactly 1.
inline std::vector<long> primitive_kernel_vector(
    const std::vector<std::vector<long>>& rows_in, std::size_t ncols) {
  QQ K;
  Mat<QQ> m(rows_in.size(), ncols, Rat(0));
  for (std::size_t i = 0; i < rows_in.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = Rat(rows_in[i][j]);
  auto basis = kernel_basis(K, m);
  if (basis.size() != 1) return {};
  // Clear denominators and divide by the content.
  mpz_class lcm_den(1);
  for (const auto& x : basis[0]) lcm_den = lcm(lcm_den, rat_den(x));
  std::vector<mpz_class> v(ncols);
  mpz_class g(0);
  for (std::size_t j = 0; j < ncols; ++j) {
    v[j] = rat_num(basis[0][j]) * (lcm_den / rat_den(basis[0][j]));
    g = gcd(g, v[j]);
  }
  std::vector<long> out(ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    mpz_class q = v[j] / g;
    if (!q.fits_slong_p()) throw std::overflow_error("kernel vector overflow");
    out[j] = q.get_si();
  }
  return out;
}

// Fast path used by the state enumeration: the 4x5 matrix with rows
// u1,u2,u3,eta.  The kernel vector is the vector of signed 4x4 minors.
// Returns all-zero when the rows are rank-deficient.
inline std::array<long, 5> cross5(const std::array<std::array<long, 5>, 4>& m) {
  std::array<long, 5> out{};
  // det of the 4x4 minor omitting column `skip`, with alternating sign
  for (int skip = 0; skip < 5; ++skip) {
    long cols[4];
    int cc = 0;
    for (int j = 0; j < 5; ++j)
      if (j != skip) cols[cc++] = j;
    // 4x4 determinant by cofactor on the first row (entries are tiny)
    long det = 0;
    for (int j0 = 0; j0 < 4; ++j0) {
      long sub = 0;
      int c3[3];
      int t = 0;
      for (int j = 0; j < 4; ++j)
        if (j != j0) c3[t++] = j;
      // 3x3 determinant
      long a = m[1][cols[c3[0]]], b = m[1][cols[c3[1]]], c = m[1][cols[c3[2]]];
      long d = m[2][cols[c3[0]]], e = m[2][cols[c3[1]]], f = m[2][cols[c3[2]]];
      long g = m[3][cols[c3[0]]], h = m[3][cols[c3[1]]], i = m[3][cols[c3[2]]];
      sub = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
      det += ((j0 % 2 == 0) ? 1 : -1) * m[0][cols[j0]] * sub;
    }
    out[skip] = ((skip % 2 == 0) ? 1 : -1) * det;
  }
  long g = 0;
  for (long v : out) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace atlas

#endif
