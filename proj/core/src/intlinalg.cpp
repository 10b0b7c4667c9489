#include "csl4/intlinalg.hpp"

namespace csl4 {

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  auto s = snf(m);
  std::vector<Int> out;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < lim; ++i) out.push_back(s.diagonal(i, i));
  return out;
}

Matrix<Rational> rational_inverse(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("rational_inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m(i, j));
    a(i, n + i) = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw RankDeficient("rational_inverse: singular matrix");
    a.swap_rows(col, piv);
    const Rational inv = 1 / a(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) a(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return a.block(0, n, n, n);
}

} // namespace csl4
