#include "csl4/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace csl4;

namespace {

Rot4 rot(std::initializer_list<int> p, std::initializer_list<int> q) {
  auto mk = [](std::initializer_list<int> v) {
    auto it = v.begin();
    return PrimitiveQuat(it[0], it[1], it[2], it[3]);
  };
  return build_rotation(mk(p), mk(q));
}

const Rot4 kIdentity{IntMatrix::identity(4), 1};

// Oracle for L(R) independent of the kernel method: the CSL is sandwiched
// between den*L and L, so enumerate coset representatives of L / den*L
// and keep those whose R^-1 image lies in L.
Int coset_count_sigma(LatticeKind kind, const Rot4& r) {
  const Lattice l = standard_lattice(kind);
  const Rot4 rinv = inverse(r);
  const Int k = brute_den(kind, r);
  const long kk = static_cast<long>(to_i64(k));
  long count = 0;
  for (long a = 0; a < kk; ++a)
    for (long b = 0; b < kk; ++b)
      for (long c = 0; c < kk; ++c)
        for (long e = 0; e < kk; ++e) {
          std::vector<Int> coords{a, b, c, e};
          std::vector<Int> x = l.basis() * coords;
          std::vector<Int> y = rinv.m * x;
          if (l.contains_vector(y, rinv.d)) ++count;
        }
  // |L / kL| = k^4 and |L(R) / kL| = count.
  Int total = k * k * k * k;
  return total / count;
}

} // namespace

TEST(Lattice, StandardLattices) {
  auto p = standard_lattice(LatticeKind::P);
  EXPECT_EQ(p.basis(), IntMatrix::identity(4));
  auto f = standard_lattice(LatticeKind::F);
  EXPECT_EQ(abs_val(det(f.basis())), 2);
  for (std::size_t j = 0; j < 4; ++j) {
    Int n2 = 0;
    for (std::size_t i = 0; i < 4; ++i) n2 += f.basis()(i, j) * f.basis()(i, j);
    EXPECT_EQ(n2 % 2, 0);
  }
  EXPECT_TRUE(f.contains_vector({1, 1, 0, 0}));
  EXPECT_FALSE(f.contains_vector({1, 0, 0, 0}));
  EXPECT_TRUE(f.contains_vector({2, 0, 0, 0}));
}

TEST(Lattice, Canonicalization) {
  Lattice a(IntMatrix{{2, 0}, {0, 3}});
  Lattice b(IntMatrix{{2, 2}, {3, 6}});
  EXPECT_EQ(a, b);
  Lattice c(IntMatrix{{2, 0}, {0, 2}}, 4);
  EXPECT_EQ(c.den(), 2);
  EXPECT_EQ(c.basis(), IntMatrix::identity(2));
  EXPECT_THROW(Lattice(IntMatrix{{1, 2}, {2, 4}}), RankDeficient);
  EXPECT_EQ(a.key(), "2|1|2,0,0,3");
}

TEST(Lattice, IntersectAndIndex) {
  auto p = standard_lattice(LatticeKind::P), f = standard_lattice(LatticeKind::F);
  EXPECT_EQ(intersect(p, p), p);
  EXPECT_EQ(intersect(p, f), f);
  Lattice three(Int(3) * IntMatrix::identity(4));
  EXPECT_EQ(intersect(p, three), three);
  EXPECT_EQ(index_in(f, p), 2);
  EXPECT_EQ(index_in(p, p), 1);
  EXPECT_EQ(index_in(Lattice(Int(2) * IntMatrix::identity(4)), p), 16);
  EXPECT_THROW(index_in(p, f), NotSublattice);
  Lattice half(IntMatrix::identity(4), 2);
  EXPECT_EQ(index_in(p, half), 16);
  EXPECT_EQ(intersect(half, f), f);
}

TEST(Lattice, RotateSymmetries) {
  auto f = standard_lattice(LatticeKind::F);
  EXPECT_EQ(rotate(kIdentity, f), f);
  // (1,1,1,1)/2 on both sides is a symmetry of D4 but not of Z4
  auto r = rot({1, 1, 1, 1}, {1, 1, 1, 1});
  EXPECT_EQ(rotate(r, f), f);
  auto s = rot({1, 0, 0, 0}, {1, 1, 1, 1});
  EXPECT_EQ(rotate(s, f), f);
  EXPECT_NE(rotate(s, standard_lattice(LatticeKind::P)), standard_lattice(LatticeKind::P));
}

TEST(Lattice, CslExamples) {
  EXPECT_EQ(brute_sigma(LatticeKind::F, kIdentity), 1);
  EXPECT_EQ(brute_sigma(LatticeKind::P, kIdentity), 1);
  EXPECT_EQ(brute_sigma(LatticeKind::F, rot({0, 1, 1, 1}, {0, 1, 1, 1})), 3);
  EXPECT_EQ(brute_sigma(LatticeKind::P, rot({1, 0, 0, 0}, {1, 1, 1, 1})), 2);
  EXPECT_EQ(brute_sigma(LatticeKind::F, rot({2, 1, 1, 1}, {2, 1, 1, 1})), 7);
  EXPECT_EQ(brute_sigma(LatticeKind::P, rot({0, 1, 1, 1}, {3, 1, 1, 1})), 6);
  EXPECT_EQ(quotient_invariants(LatticeKind::F, kIdentity), (std::vector<Int>{1, 1, 1, 1}));
}

TEST(Lattice, KernelMethodMatchesCosetEnumeration) {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs{
      {{1, 2, 0, 0}, {2, 1, 0, 0}}, {{0, 1, 1, 1}, {0, 1, 1, 1}}, {{1, 0, 0, 0}, {1, 1, 1, 1}},
      {{2, 1, 1, 1}, {2, 1, 1, 1}}, {{0, 1, 1, 1}, {3, 1, 1, 1}}, {{1, 1, 0, 0}, {1, 1, 0, 0}},
      {{1, 2, 0, 0}, {0, 1, 2, 0}}, {{1, 1, 1, 0}, {1, 1, 1, 0}}, {{2, 2, 1, 0}, {1, 2, 2, 0}}, {{1, 1, 1, 2}, {2, 1, 1, 1}}};
  for (const auto& [p, q] : pairs) {
    auto r = build_rotation(PrimitiveQuat(p[0], p[1], p[2], p[3]), PrimitiveQuat(q[0], q[1], q[2], q[3]));
    for (auto kind : {LatticeKind::P, LatticeKind::F})
      EXPECT_EQ(brute_sigma(kind, r), coset_count_sigma(kind, r)) << to_string(kind);
  }
}

TEST(Lattice, InvariantsProductAndDenominator) {
  for (auto [p, q] : std::vector<std::pair<PrimitiveQuat, PrimitiveQuat>>{
           {PrimitiveQuat(1, 2, 0, 0), PrimitiveQuat(2, 1, 0, 0)},
           {PrimitiveQuat(2, 1, 1, 1), PrimitiveQuat(1, 1, 1, 2)},
           {PrimitiveQuat(1, 1, 1, 3), PrimitiveQuat(0, 1, 1, 1)}}) {
    auto r = build_rotation(p, q);
    for (auto kind : {LatticeKind::P, LatticeKind::F}) {
      auto inv = quotient_invariants(kind, r);
      Int prod = 1;
      for (const auto& e : inv) prod *= e;
      Int sig = brute_sigma(kind, r);
      EXPECT_EQ(prod, sig);
      Int den = brute_den(kind, r);
      for (const auto& e : inv) EXPECT_EQ(den % e, 0);
      EXPECT_LE(den, sig);
      EXPECT_LE(sig, den * den * den * den);
      // symmetric under inversion
      EXPECT_EQ(brute_sigma(kind, inverse(r)), sig);
    }
    EXPECT_EQ(brute_den(LatticeKind::P, r), den_P(r));
    EXPECT_EQ(brute_den(LatticeKind::F, r), den_F(r));
  }
}

TEST(Lattice, Checked64FallsBackOnOverflow) {
  // Huge scale forces the arbitrary-precision path.
  Int big = Int(1) << 70;
  Lattice l(IntMatrix::identity(4), big);
  auto p = standard_lattice(LatticeKind::P);
  auto x = intersect(l, p);
  EXPECT_EQ(x, p);
}
