#pragma once

// Exact integer linear algebra: column Hermite normal form, Smith normal
// form, integer kernels and determinants. The algorithms are templates over
// the scalar so hot paths can run them on Checked64 and retry with Int.

#include "csl4/integer.hpp"
#include "csl4/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace csl4 {

class RankDeficient : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class T> struct Echelon {
  Matrix<T> h;                  // column echelon form, same shape as input
  Matrix<T> u;                  // unimodular, input * u == h (empty unless requested)
  std::size_t rank = 0;         // leading nonzero columns of h
  std::vector<std::size_t> pivots; // pivot row of each of the first `rank` columns
};

namespace detail {

// col_a <- x*col_a + y*col_b ; col_b <- z*col_a + w*col_b  (applied to rows [0, m))
template <class T>
void combine_columns(Matrix<T>& m, std::size_t a, std::size_t b, const T& x, const T& y, const T& z,
                     const T& w) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T va = m(i, a), vb = m(i, b);
    m(i, a) = x * va + y * vb;
    m(i, b) = z * va + w * vb;
  }
}

template <class T>
void combine_rows(Matrix<T>& m, std::size_t a, std::size_t b, const T& x, const T& y, const T& z,
                  const T& w) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    T va = m(a, j), vb = m(b, j);
    m(a, j) = x * va + y * vb;
    m(b, j) = z * va + w * vb;
  }
}

template <class T> void axpy_column(Matrix<T>& m, std::size_t dst, std::size_t src, const T& q) {
  // col dst -= q * col src
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = m(i, dst) - q * m(i, src);
}

template <class T> void negate_column(Matrix<T>& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

template <class T> void negate_row(Matrix<T>& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

} // namespace detail

/// Column-style Hermite echelon form by unimodular column operations.
/// Pivots are positive; entries left of a pivot in its row lie in [0, pivot).
template <class T> Echelon<T> column_echelon(const Matrix<T>& a, bool with_transform) {
  Echelon<T> e;
  e.h = a;
  const std::size_t m = a.rows(), n = a.cols();
  if (with_transform) e.u = Matrix<T>::identity(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m && k < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) {
      if (e.h(i, j) == T(0)) continue;
      if (e.h(i, k) == T(0)) {
        e.h.swap_columns(k, j);
        if (with_transform) e.u.swap_columns(k, j);
        continue;
      }
      auto [g, x, y] = ext_gcd(e.h(i, k), e.h(i, j));
      T p = e.h(i, k) / g, q = e.h(i, j) / g;
      // [x -q; y p] has determinant x*p + y*q = 1
      detail::combine_columns(e.h, k, j, x, y, T(-q), p);
      if (with_transform) detail::combine_columns(e.u, k, j, x, y, T(-q), p);
    }
    if (e.h(i, k) == T(0)) continue;
    if (e.h(i, k) < T(0)) {
      detail::negate_column(e.h, k);
      if (with_transform) detail::negate_column(e.u, k);
    }
    for (std::size_t c = 0; c < k; ++c) {
      T q = floor_div(e.h(i, c), e.h(i, k));
      if (q == T(0)) continue;
      detail::axpy_column(e.h, c, k, q);
      if (with_transform) detail::axpy_column(e.u, c, k, q);
    }
    e.pivots.push_back(i);
    ++k;
  }
  e.rank = k;
  return e;
}

/// Unique column HNF of a full-column-rank matrix.
template <class T> Matrix<T> hnf_columns_t(const Matrix<T>& a) {
  auto e = column_echelon(a, false);
  if (e.rank != a.cols()) throw RankDeficient("hnf_columns: input lacks full column rank");
  return e.h;
}

/// Echelon basis of the column span of a generating set (any number of columns).
template <class T> Matrix<T> span_basis_t(const Matrix<T>& a) {
  auto e = column_echelon(a, false);
  return e.h.block(0, 0, a.rows(), e.rank);
}

/// Basis (in column HNF) of {x : a x = 0}; zero columns when the kernel is trivial.
template <class T> Matrix<T> integer_kernel_t(const Matrix<T>& a) {
  auto e = column_echelon(a, true);
  const std::size_t n = a.cols();
  if (e.rank == n) return Matrix<T>(n, 0);
  Matrix<T> k = e.u.block(0, e.rank, n, n - e.rank);
  return column_echelon(k, false).h;
}

/// Fraction-free (Bareiss) determinant.
template <class T> T det_t(Matrix<T> a) {
  if (!a.square()) throw DimensionError("det: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == T(0)) ++r;
      if (r == n) return T(0);
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <class T> struct Smith {
  Matrix<T> diagonal;
  Matrix<T> left;
  Matrix<T> right;
};

/// Smith normal form: left * a * right == diagonal, d1 | d2 | ..., entries >= 0.
template <class T> Smith<T> snf_t(const Matrix<T>& a) {
  const std::size_t r = a.rows(), c = a.cols();
  Smith<T> s{a, Matrix<T>::identity(r), Matrix<T>::identity(c)};
  auto& d = s.diagonal;
  const std::size_t lim = std::min(r, c);
  for (std::size_t t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != T(0) && (!best || abs_val(d(i, j)) < abs_val(d(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    d.swap_rows(t, best->first);
    s.left.swap_rows(t, best->first);
    d.swap_columns(t, best->second);
    s.right.swap_columns(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == T(0)) continue;
        if (d(i, t) % d(t, t) == T(0)) {
          const T f = d(i, t) / d(t, t);
          detail::combine_rows(d, t, i, T(1), T(0), T(-f), T(1));
          detail::combine_rows(s.left, t, i, T(1), T(0), T(-f), T(1));
          continue;
        }
        auto [g, x, y] = ext_gcd(d(t, t), d(i, t));
        T p = d(t, t) / g, q = d(i, t) / g;
        detail::combine_rows(d, t, i, x, y, T(-q), p);
        detail::combine_rows(s.left, t, i, x, y, T(-q), p);
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == T(0)) continue;
        if (d(t, j) % d(t, t) == T(0)) {
          const T f = d(t, j) / d(t, t);
          detail::combine_columns(d, t, j, T(1), T(0), T(-f), T(1));
          detail::combine_columns(s.right, t, j, T(1), T(0), T(-f), T(1));
          continue;
        }
        auto [g, x, y] = ext_gcd(d(t, t), d(t, j));
        T p = d(t, t) / g, q = d(t, j) / g;
        detail::combine_columns(d, t, j, x, y, T(-q), p);
        detail::combine_columns(s.right, t, j, x, y, T(-q), p);
      }
      for (std::size_t i = t + 1; i < r && clean; ++i)
        if (d(i, t) != T(0)) clean = false;
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and repeat.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < r && !bad; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != T(0)) {
            bad = i;
            break;
          }
      if (!bad) break;
      detail::combine_rows(d, t, *bad, T(1), T(1), T(0), T(1));
      detail::combine_rows(s.left, t, *bad, T(1), T(1), T(0), T(1));
    }
    if (d(t, t) < T(0)) {
      detail::negate_row(d, t);
      detail::negate_row(s.left, t);
    }
  }
  return s;
}

// Public API over Int.

/// Unique column HNF; throws RankDeficient for rank-deficient input.
inline IntMatrix hnf_columns(const IntMatrix& m) { return hnf_columns_t(m); }
inline Smith<Int> snf(const IntMatrix& m) { return snf_t(m); }
inline IntMatrix span_basis(const IntMatrix& m) { return span_basis_t(m); }
inline IntMatrix integer_kernel(const IntMatrix& m) { return integer_kernel_t(m); }
inline Int det(const IntMatrix& m) { return det_t(m); }

/// Diagonal entries of the Smith form.
std::vector<Int> elementary_divisors(const IntMatrix& m);

/// Solves a x = b for lower-triangular a with nonzero diagonal; nullopt
/// unless the solution is integral.
template <class T>
std::optional<std::vector<T>> solve_lower_integral(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.cols();
  if (a.rows() < n || b.size() != a.rows()) throw DimensionError("solve_lower_integral: shape");
  std::vector<T> x(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    T acc = b[i];
    for (std::size_t j = 0; j < i; ++j) acc = acc - a(i, j) * x[j];
    if (acc % a(i, i) != T(0)) return std::nullopt;
    x[i] = acc / a(i, i);
  }
  for (std::size_t i = n; i < a.rows(); ++i) {
    T acc = b[i];
    for (std::size_t j = 0; j < n; ++j) acc = acc - a(i, j) * x[j];
    if (acc != T(0)) return std::nullopt;
  }
  return x;
}

/// Exact inverse of a nonsingular integer matrix.
Matrix<Rational> rational_inverse(const IntMatrix& m);

} // namespace csl4
