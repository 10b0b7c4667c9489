#include "csl4/quat.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace csl4;

namespace {

IntQuat random_quat(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> d(-r, r);
  return {d(rng), d(rng), d(rng), d(rng)};
}

} // namespace

TEST(Quat, UnitTable) {
  const auto& u = unit_quats();
  const IntQuat one = u[0], i = u[1], j = u[2], k = u[3];
  EXPECT_EQ(mul(i, i), -one);
  EXPECT_EQ(mul(j, j), -one);
  EXPECT_EQ(mul(k, k), -one);
  EXPECT_EQ(mul(i, j), k);
  EXPECT_EQ(mul(j, k), i);
  EXPECT_EQ(mul(k, i), j);
  EXPECT_EQ(mul(j, i), -k);
}

TEST(Quat, NormIsMultiplicativeAndProductAssociative) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    IntQuat a = random_quat(rng, 20), b = random_quat(rng, 20), c = random_quat(rng, 20);
    EXPECT_EQ(mul(a, b).norm2(), a.norm2() * b.norm2());
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(conj(mul(a, b)), mul(conj(b), conj(a)));
    IntQuat n = mul(a, conj(a));
    EXPECT_EQ(n, (IntQuat{a.norm2(), 0, 0, 0}));
  }
}

TEST(Quat, PrimitiveValidation) {
  EXPECT_THROW(PrimitiveQuat(0, 0, 0, 0), NotPrimitive);
  EXPECT_THROW(PrimitiveQuat(2, 4, 0, 6), NotPrimitive);
  EXPECT_NO_THROW(PrimitiveQuat(2, 3, 0, 0));
  auto [p, c] = make_primitive(IntQuat{2, 4, 0, 6});
  EXPECT_EQ(c, 2);
  EXPECT_EQ(p.quat(), (IntQuat{1, 2, 0, 3}));
}

TEST(Quat, SigmaOf) {
  auto s = sigma_of(PrimitiveQuat(1, 1, 1, 1));
  EXPECT_EQ(s.normsq, 4);
  EXPECT_EQ(s.ell, 2u);
  EXPECT_EQ(s.sigma, 1);
  s = sigma_of(PrimitiveQuat(1, 2, 0, 0));
  EXPECT_EQ(s.sigma, 5);
  EXPECT_EQ(s.ell, 0u);
  s = sigma_of(PrimitiveQuat(1, 1, 1, 3));
  EXPECT_EQ(s.normsq, 12);
  EXPECT_EQ(s.sigma, 3);
}

TEST(Quat, PrimitiveNormNeverDivisibleBy8) {
  for (int w = -4; w <= 4; ++w)
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y)
        for (int z = -4; z <= 4; ++z) {
          IntQuat q{w, x, y, z};
          if (q.is_zero() || q.content() != 1) continue;
          EXPECT_NE(q.norm2() % 8, 0);
        }
}

TEST(Quat, Admissibility) {
  EXPECT_TRUE(is_admissible(IntQuat{1, 2, 0, 0}, IntQuat{2, 1, 0, 0}));
  EXPECT_TRUE(is_admissible(IntQuat{1, 0, 0, 0}, IntQuat{1, 1, 1, 1}));
  EXPECT_FALSE(is_admissible(IntQuat{1, 1, 0, 0}, IntQuat{1, 0, 0, 0}));
}

TEST(Quat, CanonicalSign) {
  EXPECT_EQ(canonical_sign(IntQuat{0, -1, 2, 0}), (IntQuat{0, 1, -2, 0}));
  EXPECT_EQ(canonical_sign(IntQuat{0, 1, -2, 0}), (IntQuat{0, 1, -2, 0}));
}

TEST(Quat, Parse) {
  EXPECT_EQ(parse_quat("1,2,-3,+4"), (IntQuat{1, 2, -3, 4}));
  EXPECT_EQ(parse_quat(" 1, 0 ,0,0"), (IntQuat{1, 0, 0, 0}));
  EXPECT_THROW(parse_quat("1,2,3"), std::invalid_argument);
  EXPECT_THROW(parse_quat("1,2,3,4,5"), std::invalid_argument);
  EXPECT_THROW(parse_quat("1,a,3,4"), std::invalid_argument);
  EXPECT_THROW(parse_quat("1,,3,4"), std::invalid_argument);
}
