#include "csl4/rot4.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace csl4;

namespace {

std::vector<std::pair<PrimitiveQuat, PrimitiveQuat>> small_admissible_pairs(int r, int max_norm) {
  std::vector<IntQuat> qs;
  for (int w = -r; w <= r; ++w)
    for (int x = -r; x <= r; ++x)
      for (int y = -r; y <= r; ++y)
        for (int z = -r; z <= r; ++z) {
          IntQuat q{w, x, y, z};
          if (q.is_zero() || q.content() != 1 || q.norm2() > max_norm) continue;
          qs.push_back(q);
        }
  std::vector<std::pair<PrimitiveQuat, PrimitiveQuat>> out;
  for (const auto& p : qs) {
    if (canonical_sign(p) != p) continue;
    for (const auto& q : qs)
      if (is_admissible(p, q)) out.emplace_back(PrimitiveQuat(p), PrimitiveQuat(q));
  }
  return out;
}

// x -> p x conj(q), as an integer matrix acting on coordinate columns.
IntMatrix sandwich_matrix(const IntQuat& p, const IntQuat& q) {
  IntMatrix m(4, 4);
  const auto& u = unit_quats();
  for (std::size_t j = 0; j < 4; ++j) {
    IntQuat img = mul(mul(p, u[j]), conj(q));
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = img[i];
  }
  return m;
}

} // namespace

TEST(Rot4, GoldenAsymmetricPair) {
  auto r = build_rotation(PrimitiveQuat(1, 2, 0, 0), PrimitiveQuat(2, 1, 0, 0));
  IntMatrix expected{{4, -3, 0, 0}, {3, 4, 0, 0}, {0, 0, 0, -5}, {0, 0, 5, 0}};
  EXPECT_EQ(r.d, 5);
  EXPECT_EQ(r.m, expected);
}

TEST(Rot4, MatchesSandwichAction) {
  for (const auto& [p, q] : small_admissible_pairs(2, 12)) {
    auto r = build_rotation(p, q);
    EXPECT_EQ(r.m, sandwich_matrix(p, q)) << p << " " << q;
    EXPECT_TRUE(r.is_proper_orthogonal());
  }
}

TEST(Rot4, NonAdmissibleThrowsWithProduct) {
  try {
    build_rotation(PrimitiveQuat(1, 1, 0, 0), PrimitiveQuat(1, 0, 0, 0));
    FAIL();
  } catch (const NotAdmissible& e) {
    EXPECT_EQ(e.norm_product, 2);
  }
}

TEST(Rot4, Denominators) {
  auto r = build_rotation(PrimitiveQuat(1, 0, 0, 0), PrimitiveQuat(1, 1, 1, 1));
  EXPECT_EQ(den_P(r), 2);
  EXPECT_EQ(den_F(r), 1);
  EXPECT_EQ(sigma_F(PrimitiveQuat(1, 0, 0, 0), PrimitiveQuat(1, 1, 1, 1)), 1);
  EXPECT_EQ(sigma_P(PrimitiveQuat(1, 0, 0, 0), PrimitiveQuat(1, 1, 1, 1)), 2);
  EXPECT_EQ(sigma_P(PrimitiveQuat(0, 1, 1, 1), PrimitiveQuat(3, 1, 1, 1)), 6);
}

TEST(Rot4, DenFFormulasAgree) {
  for (const auto& [p, q] : small_admissible_pairs(2, 16))
    EXPECT_EQ(den_F(build_rotation(p, q)), den_F_from_pair(p, q)) << p << " " << q;
}

TEST(Rot4, ComposeAndInverse) {
  auto pairs = small_admissible_pairs(1, 4);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto& [p1, q1] = pairs[rng() % pairs.size()];
    const auto& [p2, q2] = pairs[rng() % pairs.size()];
    auto r1 = build_rotation(p1, q1), r2 = build_rotation(p2, q2);
    // R(p1,q1) R(p2,q2) = R(p1 p2, q1 q2)
    auto [pp, cp] = make_primitive(mul(p1, p2));
    auto [qq, cq] = make_primitive(mul(q1, q2));
    EXPECT_TRUE(same_rotation(compose(r1, r2), build_rotation(pp, qq)));
    auto id = compose(r1, inverse(r1));
    EXPECT_EQ(id.d, 1);
    EXPECT_EQ(id.m, IntMatrix::identity(4));
    EXPECT_TRUE(same_rotation(inverse(r1), build_rotation(conj(p1), conj(q1))));
  }
}

TEST(Rot4, RecoverPairRoundTrip) {
  for (const auto& [p, q] : small_admissible_pairs(2, 14)) {
    auto [rp, rq] = recover_pair(build_rotation(p, q));
    EXPECT_EQ(rp, p);
    EXPECT_EQ(rq, q);
  }
  // Reduced representatives give the same pair.
  auto r = build_rotation(PrimitiveQuat(1, 1, 1, 1), PrimitiveQuat(1, 1, 1, 1)).reduced();
  auto [rp, rq] = recover_pair(r);
  EXPECT_EQ(rp.quat(), (IntQuat{1, 1, 1, 1}));
  EXPECT_EQ(rq.quat(), (IntQuat{1, 1, 1, 1}));
}

TEST(Rot4, RecoverPairRejectsNonRotation) {
  Rot4 refl{IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}, 1};
  EXPECT_THROW(recover_pair(refl), MalformedRotation);
  Rot4 junk{IntMatrix{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 1};
  EXPECT_THROW(recover_pair(junk), MalformedRotation);
}
