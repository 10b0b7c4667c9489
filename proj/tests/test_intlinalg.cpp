#include "csl4/intlinalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace csl4;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_column_hnf(const IntMatrix& h) {
  // lower triangular, positive diagonal, entries left of the pivot reduced
  for (std::size_t j = 0; j < h.cols(); ++j) {
    if (h(j, j) <= 0) return false;
    for (std::size_t i = 0; i < j; ++i)
      if (h(i, j) != 0) return false;
    for (std::size_t k = 0; k < j; ++k)
      if (h(j, k) < 0 || h(j, k) >= h(j, j)) return false;
  }
  return true;
}

// Membership by brute force rational solve: columns of b span the same lattice as columns of a.
bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  auto contained = [](const IntMatrix& sub, const IntMatrix& sup) {
    auto inv = rational_inverse(sup);
    for (std::size_t j = 0; j < sub.cols(); ++j)
      for (std::size_t i = 0; i < sup.rows(); ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < sup.rows(); ++k) s += inv(i, k) * Rational(sub(k, j));
        if (denominator(s) != 1) return false;
      }
    return true;
  };
  return contained(a, b) && contained(b, a);
}

} // namespace

TEST(Integer, Checked64OverflowThrows) {
  Checked64 big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Checked64(1), ArithmeticOverflow);
  EXPECT_THROW(big * Checked64(2), ArithmeticOverflow);
  EXPECT_EQ((Checked64(7) * Checked64(-3)).value(), -21);
}

TEST(Integer, FloorDivAndGcd) {
  EXPECT_EQ(floor_div(Int(-7), Int(2)), -4);
  EXPECT_EQ(floor_div(Int(7), Int(-2)), -4);
  EXPECT_EQ(gcd_val(Int(-12), Int(18)), 6);
  EXPECT_EQ(lcm_val(Int(4), Int(6)), 12);
  auto [g, x, y] = ext_gcd(Int(240), Int(46));
  EXPECT_EQ(g, 2);
  EXPECT_EQ(240 * x + 46 * y, g);
}

TEST(Integer, SquaresAndValuation) {
  EXPECT_TRUE(is_square(Int(0)));
  EXPECT_TRUE(is_square(Int(144)));
  EXPECT_FALSE(is_square(Int(145)));
  EXPECT_FALSE(is_square(Int(-4)));
  Int big = Int(1) << 200;
  EXPECT_EQ(isqrt(big), Int(1) << 100);
  EXPECT_EQ(valuation2(Int(96)), 5u);
  EXPECT_EQ(odd_part(Int(96)), 3);
}

TEST(IntLinAlg, HnfKnown) {
  IntMatrix a{{2, 4}, {1, 3}};
  auto h = hnf_columns(a);
  EXPECT_TRUE(is_column_hnf(h));
  EXPECT_EQ(abs_val(det(h)), 2);
  EXPECT_TRUE(same_lattice(a, h));
}

TEST(IntLinAlg, HnfRandomProperties) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + trial % 4;
    IntMatrix a = random_matrix(rng, n, n, -9, 9);
    if (det(a) == 0) continue;
    auto h = hnf_columns(a);
    EXPECT_TRUE(is_column_hnf(h)) << a;
    EXPECT_EQ(abs_val(det(h)), abs_val(det(a)));
    EXPECT_TRUE(same_lattice(a, h));
    // invariance under unimodular column operations
    IntMatrix b = a;
    detail::axpy_column(b, 0, n - 1, Int(3));
    b.swap_columns(0, 1);
    EXPECT_EQ(hnf_columns(b), h);
  }
}

TEST(IntLinAlg, HnfOfGeneratingSet) {
  // six generators of a rank-3 lattice
  IntMatrix a{{2, 0, 0, 2, 4, 6}, {0, 3, 0, 3, 0, 9}, {0, 0, 5, 5, 5, 0}};
  EXPECT_THROW(hnf_columns(a), RankDeficient);
  auto h = span_basis(a);
  EXPECT_EQ(h.cols(), 3u);
  EXPECT_TRUE(is_column_hnf(h));
  EXPECT_EQ(det(h), 30);
}

TEST(IntLinAlg, RankDeficientThrows) {
  IntMatrix a{{1, 2}, {2, 4}};
  EXPECT_THROW(hnf_columns(a), RankDeficient);
}

TEST(IntLinAlg, SmithKnownAndRandom) {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(elementary_divisors(a), (std::vector<Int>{2, 6, 12}));

  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    auto s = snf(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_EQ(abs_val(det(s.left)), 1);
    EXPECT_EQ(abs_val(det(s.right)), 1);
    const std::size_t lim = std::min(r, c);
    for (std::size_t i = 0; i + 1 < lim; ++i) {
      if (s.diagonal(i + 1, i + 1) == 0) continue;
      EXPECT_EQ(s.diagonal(i + 1, i + 1) % s.diagonal(i, i), 0);
    }
    if (r == c) {
      Int prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.diagonal(i, i);
      EXPECT_EQ(prod, abs_val(det(m)));
    }
  }
}

TEST(IntLinAlg, KernelSpansSolutions) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 2, 5, -5, 5);
    auto k = integer_kernel(a);
    IntMatrix zero(2, k.cols());
    EXPECT_EQ(a * k, zero);
    if (det(IntMatrix{{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}}) != 0) EXPECT_EQ(k.cols(), 3u);
    // saturated: elementary divisors of the kernel basis are all 1
    if (k.cols() > 0)
      for (const auto& e : elementary_divisors(k)) EXPECT_EQ(e, 1);
  }
  IntMatrix id = IntMatrix::identity(3);
  EXPECT_EQ(integer_kernel(id).cols(), 0u);
}

TEST(IntLinAlg, DetBareissMatchesCofactor) {
  IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(det(a), 4);
  IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(det(b), -1);
}

TEST(IntLinAlg, Checked64PathAgreesWithInt) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 4, -20, 20);
    if (det(a) == 0) continue;
    auto fast = hnf_columns_t(a.convert<Checked64>());
    EXPECT_EQ(fast.convert<Int>(), hnf_columns(a));
  }
}

TEST(IntLinAlg, SolveLowerIntegral) {
  IntMatrix h{{2, 0}, {1, 3}};
  auto x = solve_lower_integral(h, std::vector<Int>{4, 5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_lower_integral(h, std::vector<Int>{3, 0}).has_value());
}
