#include "csl4/rot4.hpp"
#include "csl4/symgroup.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace csl4;

namespace {

const SmallQuat kRep[6] = {{1, 0, 0, 0}, {0, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 0, 0}, {3, 1, 1, 0}, {1, 2, 3, 4}};

// Orbit {s q s'} of a primitive quaternion under CG x CG, with signs.
std::size_t quat_orbit_size(const SmallQuat& q) {
  std::set<SmallQuat> out;
  for (const auto& s : quat_group(GroupName::CG).elements)
    for (const auto& t : quat_group(GroupName::CG).elements) out.insert(primitive_part(small_mul(small_mul(s, q), t)));
  return out.size();
}

} // namespace

TEST(SymGroup, Orders) {
  EXPECT_EQ(quat_group(GroupName::CG).order(), 48u);
  EXPECT_EQ(quat_group(GroupName::CGprime).order(), 24u);
  EXPECT_EQ(pair_group(GroupName::CGF).order(), 1152u);
  EXPECT_EQ(pair_group(GroupName::CGP).order(), 384u);
  EXPECT_EQ(rotation_count(GroupName::CGF), 576u);
  EXPECT_EQ(rotation_count(GroupName::CGP), 192u);
}

TEST(SymGroup, SymmetryRotationsHaveDenominatorOne) {
  std::set<std::string> p_rots, f_rots;
  for (const auto& x : pair_group(GroupName::CGP).elements) {
    auto r = build_rotation(PrimitiveQuat(to_int_quat(x.p)), PrimitiveQuat(to_int_quat(x.q)));
    EXPECT_EQ(den_P(r), 1);
    std::ostringstream os;
    os << r.reduced().m;
    p_rots.insert(os.str());
  }
  for (const auto& x : pair_group(GroupName::CGF).elements) {
    auto r = build_rotation(PrimitiveQuat(to_int_quat(x.p)), PrimitiveQuat(to_int_quat(x.q)));
    EXPECT_EQ(den_F(r), 1);
    std::ostringstream os;
    os << r.reduced().m << r.reduced().d;
    f_rots.insert(os.str());
  }
  EXPECT_EQ(p_rots.size(), 192u);
  EXPECT_EQ(f_rots.size(), 576u);
}

TEST(SymGroup, ScaledQuatClosure) {
  ScaledQuat w({1, 1, 0, 0});
  ScaledQuat sq = w * w;
  EXPECT_EQ(sq.quat(), (SmallQuat{0, 1, 0, 0}));
  EXPECT_EQ((w * w.inverse()).quat(), (SmallQuat{1, 0, 0, 0}));
  EXPECT_THROW(ScaledQuat({2, 1, 0, 0}), std::invalid_argument);
}

TEST(SymGroup, TableOneHOrdersAndOrbits) {
  const std::size_t h[6] = {48, 12, 6, 8, 4, 2};
  const std::size_t orbit[6] = {48, 192, 384, 288, 576, 1152};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(h_of_quat(kRep[i]).size(), h[i]) << i;
    EXPECT_EQ(index_of(classify_quat(kRep[i])), i);
    EXPECT_EQ(quat_orbit_size(kRep[i]), orbit[i]) << i;
  }
  EXPECT_EQ(classify_quat(PrimitiveQuat(3, 1, 1, 1)), ClassLabel::T1);
  EXPECT_EQ(classify_quat(PrimitiveQuat(2, 2, 1, 1)), ClassLabel::T3);
}

TEST(SymGroup, TableTwoOrders) {
  // |H_F| for each unordered type combination that can occur.
  const std::map<std::pair<int, int>, std::size_t> h{
      {{0, 0}, 1152}, {{0, 2}, 144}, {{0, 3}, 192}, {{0, 4}, 96}, {{0, 5}, 48}, {{1, 1}, 72}, {{1, 2}, 36},
      {{1, 3}, 48},   {{1, 4}, 24},  {{1, 5}, 12},  {{2, 2}, 36}, {{2, 3}, 24}, {{2, 4}, 12}, {{2, 5}, 12},
      {{3, 3}, 32},   {{3, 4}, 16},  {{3, 5}, 8},   {{4, 4}, 8},  {{4, 5}, 4},  {{5, 5}, 4}};
  for (const auto& [ij, order] : h) {
    const auto [i, j] = ij;
    EXPECT_EQ(h_of_pair(kRep[i], kRep[j], GroupName::CGF).size(), order) << i << j;
    EXPECT_EQ(h_of_pair(kRep[j], kRep[i], GroupName::CGF).size(), order) << j << i;
  }
}

TEST(SymGroup, PairSubgroupExamples) {
  EXPECT_EQ(h_of_pair(SmallQuat{1, 0, 0, 0}, SmallQuat{1, 0, 0, 0}, GroupName::CGF).size(), 1152u);
  EXPECT_EQ(h_of_pair(SmallQuat{1, 0, 0, 0}, SmallQuat{2, 1, 1, 1}, GroupName::CGF).size(), 144u);
  EXPECT_EQ(h_of_pair(SmallQuat{1, 0, 0, 0}, SmallQuat{2, 1, 0, 0}, GroupName::CGP).size(), 64u);
}

TEST(SymGroup, DoubleCosetSizesMatchStabilizers) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == 5 && j == 5) continue; // largest orbit; covered by enumeration tests
      QuatPair x{kRep[i], kRep[j]};
      auto orb = double_coset(x, GroupName::CGF);
      std::size_t hh = h_of_pair(kRep[i], kRep[j], GroupName::CGF).size();
      EXPECT_EQ(orb.size(), 576u * (1152u / hh)) << i << j;
    }
}

TEST(SymGroup, SplittingIntoPClasses) {
  auto id = f_class_to_p_classes({1, 0, 0, 0}, {1, 0, 0, 0});
  EXPECT_EQ(id.size(), 2u);
  EXPECT_EQ(f_class_to_p_classes({1, 0, 0, 0}, {2, 1, 1, 1}).size(), 3u);
  EXPECT_EQ(f_class_to_p_classes({2, 1, 0, 0}, {2, 1, 0, 0}).size(), 5u);
  auto t11 = f_class_to_p_classes({0, 1, 1, 1}, {0, 1, 1, 1});
  ASSERT_EQ(t11.size(), 2u);
  std::multiset<Int> sig;
  for (const auto& s : t11) sig.insert(*s.sigma_p);
  EXPECT_EQ(sig, (std::multiset<Int>{3, 6}));
}

TEST(SymGroup, SwapMerge) {
  std::vector<QuatPair> pairs{{{1, 0, 0, 0}, {2, 1, 1, 1}}, {{2, 1, 1, 1}, {1, 0, 0, 0}}, {{0, 1, 1, 1}, {0, 1, 1, 1}}};
  auto part = double_coset_classes(pairs, GroupName::CGF);
  ASSERT_EQ(part.classes.size(), 3u);
  auto merged = swap_merge(part);
  ASSERT_EQ(merged.size(), 2u);
  int self = 0;
  for (const auto& m : merged) {
    if (m.members.size() == 1) {
      EXPECT_TRUE(m.self_swapped);
      ++self;
    }
  }
  EXPECT_EQ(self, 1);
}
