#include "csl4/enumerate.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace csl4;

namespace {

// r4(n) = 8 * sum of divisors of n not divisible by 4.
std::int64_t jacobi_r4(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0 && d % 4 != 0) s += d;
  return 8 * s;
}

int mobius(std::int64_t n) {
  int m = 1;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

std::int64_t primitive_r4(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % (d * d) == 0) s += mobius(d) * jacobi_r4(n / (d * d));
  return s;
}

} // namespace

TEST(Enumerate, SmallNorms) {
  EXPECT_EQ(primitive_quats_of_norm(1).quats.size(), 4u);
  EXPECT_EQ(primitive_small_quats(1, true).size(), 8u);
  EXPECT_EQ(primitive_small_quats(3, true).size(), 32u);
  EXPECT_EQ(primitive_small_quats(4, true).size(), 16u);
  EXPECT_TRUE(primitive_small_quats(8, true).empty());
  for (const auto& q : primitive_quats_of_norm(3).quats) EXPECT_EQ(canonical_sign(q), q);
}

TEST(Enumerate, JacobiOracle) {
  for (std::int64_t n = 1; n <= 256; ++n)
    EXPECT_EQ(static_cast<std::int64_t>(primitive_small_quats(n, true).size()), primitive_r4(n)) << n;
}

TEST(Enumerate, PairsAtSmallSigma) {
  // One pair per rotation: 576 symmetries at sigma 1.
  EXPECT_EQ(admissible_pairs_for_sigmaF(1).size(), 576u);
  for (const auto& x : admissible_pairs_for_sigmaF(3)) {
    auto p = PrimitiveQuat(to_int_quat(x.p)), q = PrimitiveQuat(to_int_quat(x.q));
    EXPECT_EQ(sigma_of(p).sigma, 3);
    EXPECT_EQ(sigma_of(q).sigma, 3);
  }
  for (const auto& x : admissible_pairs_for_sigmaF(5)) {
    auto p = PrimitiveQuat(to_int_quat(x.p)), q = PrimitiveQuat(to_int_quat(x.q));
    EXPECT_EQ(sigma_of(p).sigma, 5);
    EXPECT_EQ(sigma_of(q).sigma, 5);
  }
  EXPECT_TRUE(admissible_pairs_for_sigmaF(4).empty());
}

TEST(Enumerate, CatalogF) {
  struct Case {
    int sigma;
    std::size_t csls, classes, g;
  };
  for (auto c : {Case{1, 1, 1, 1}, Case{3, 16, 1, 16}, Case{5, 36, 1, 36}, Case{7, 64, 2, 32}}) {
    auto cat = build_catalog(c.sigma, LatticeKind::F);
    EXPECT_EQ(cat.csls.size(), c.csls) << c.sigma;
    EXPECT_EQ(Int(cat.csls.size()), fF(c.sigma));
    ASSERT_EQ(cat.classes.size(), c.classes) << c.sigma;
    std::size_t gsum = 0;
    for (const auto& k : cat.classes) {
      EXPECT_EQ(k.cls.g, c.g);
      EXPECT_EQ(k.distinct_csls, k.cls.g);
      EXPECT_EQ(k.cls.g * k.cls.h_order, 1152u);
      gsum += k.cls.g;
    }
    EXPECT_EQ(gsum, cat.csls.size());
    EXPECT_EQ(gsum, cat.rotation_cosets);
    EXPECT_EQ(cat.shared_csls, 0u);
    const auto base = standard_lattice(LatticeKind::F);
    for (const auto& l : cat.csls) EXPECT_EQ(index_in(l, base), c.sigma);
    for (const auto& k : cat.classes) {
      auto r = build_rotation(PrimitiveQuat(to_int_quat(k.cls.representative.p)),
                              PrimitiveQuat(to_int_quat(k.cls.representative.q)));
      EXPECT_TRUE(contains(k.csl, Lattice(den_F(r) * base.basis())));
    }
  }
}

// At Sigma = 9 the classes with one trivial side give fewer CSLs than rotation cosets.
TEST(Enumerate, CatalogFAtNine) {
  auto cat = build_catalog(9, LatticeKind::F);
  EXPECT_EQ(Int(cat.rotation_cosets), fF(9));
  EXPECT_EQ(cat.csls.size(), 152u);
  EXPECT_EQ(cat.shared_csls, 0u);
  std::map<std::pair<ClassLabel, ClassLabel>, std::size_t> distinct;
  for (const auto& k : cat.classes) distinct[{k.cls.label_p, k.cls.label_q}] = k.distinct_csls;
  EXPECT_EQ((distinct[{ClassLabel::T4, ClassLabel::T4}]), 144u);
  EXPECT_EQ((distinct[{ClassLabel::T0, ClassLabel::T4}]), 4u);
  EXPECT_EQ((distinct[{ClassLabel::T4, ClassLabel::T0}]), 4u);
}

TEST(Enumerate, CatalogPAgreesWithSplitting) {
  for (int s : {1, 3, 5, 7}) {
    auto split = verify_splitting(s);
    auto odd = build_catalog(s, LatticeKind::P);
    auto even = build_catalog(2 * s, LatticeKind::P);
    EXPECT_EQ(Int(odd.csls.size()), split.predicted_p_csls_odd) << s;
    EXPECT_EQ(Int(odd.rotation_cosets), split.predicted_p_csls_odd) << s;
    EXPECT_EQ(Int(even.rotation_cosets), split.predicted_p_csls_even) << s;
    // Each CSL with even index comes from two rotation cosets.
    EXPECT_EQ(2 * even.csls.size(), even.rotation_cosets) << s;
    EXPECT_EQ(odd.classes.size(), split.brute_odd);
    EXPECT_EQ(even.classes.size(), split.brute_even);
    const auto base = standard_lattice(LatticeKind::P);
    for (const auto& l : odd.csls) EXPECT_EQ(index_in(l, base), s);
    for (const auto& l : even.csls) EXPECT_EQ(index_in(l, base), 2 * s);
  }
  EXPECT_TRUE(build_catalog(4, LatticeKind::P).csls.empty());
}

TEST(Enumerate, Budget) {
  EXPECT_THROW(build_catalog(17, LatticeKind::F), BudgetExceeded);
  CatalogOptions small;
  small.max_pairs = 100;
  try {
    build_catalog(3, LatticeKind::F, small);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.bound, "max_pairs=100");
  }
}

TEST(Enumerate, WorkerCountDoesNotChangeCatalog) {
  CatalogOptions one, three;
  three.jobs = 3;
  auto a = build_catalog(9, LatticeKind::F, one);
  auto b = build_catalog(9, LatticeKind::F, three);
  EXPECT_EQ(a.csls, b.csls);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    EXPECT_EQ(a.classes[i].cls.representative, b.classes[i].cls.representative);
  EXPECT_EQ(a.rotation_cosets, 168u);
}

TEST(Enumerate, TheoremsUpTo16) {
  auto rep = verify_theorems(16, 2);
  EXPECT_GE(rep.pairs, 1000u);
  EXPECT_GE(rep.checks, 7 * rep.pairs);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_EQ(rep.pairs, admissible_pairs_up_to(16).size());
}

TEST(Enumerate, Splitting) {
  auto r1 = verify_splitting(1);
  ASSERT_EQ(r1.classes.size(), 1u);
  EXPECT_EQ(r1.classes[0].p_classes.size(), 2u);
  EXPECT_TRUE(r1.ok());
  auto r3 = verify_splitting(3);
  ASSERT_EQ(r3.classes.size(), 1u);
  EXPECT_EQ(r3.classes[0].odd, 1u);
  EXPECT_EQ(r3.classes[0].even, 1u);
  EXPECT_TRUE(r3.ok());
  auto r5 = verify_splitting(5);
  ASSERT_EQ(r5.classes.size(), 1u);
  EXPECT_EQ(r5.classes[0].p_classes.size(), 5u);
  EXPECT_TRUE(r5.ok());
  for (int s : {7, 9}) EXPECT_TRUE(verify_splitting(s).ok()) << s;
  EXPECT_TRUE(verify_splitting(2).classes.empty());
}
