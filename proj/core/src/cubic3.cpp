#include "csl4/cubic3.hpp"

#include "csl4/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csl4 {

namespace {

std::vector<SmallQuat> quats_with_sigma(const Int& sigma) {
  if (sigma < 1 || sigma % 2 == 0) return {};
  const auto s = static_cast<std::int64_t>(sigma);
  std::vector<SmallQuat> out;
  for (std::int64_t e = 1; e <= 4; e *= 2)
    for (const auto& q : primitive_small_quats(s * e)) out.push_back(q);
  std::sort(out.begin(), out.end());
  return out;
}

std::string csl3_key(const SmallQuat& q) {
  const auto r = rot3_from_quat(PrimitiveQuat(to_int_quat(q)));
  return csl(standard_lattice(LatticeKind::P, 3), r.m, r.d).key();
}

} // namespace

Rot3 rot3_from_quat(const PrimitiveQuat& q) {
  const Rot4 r = build_rotation(q, q);
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = r.m(i + 1, j + 1);
  Int g = gcd_val(m.content(), r.d);
  return Rot3{m.divided_by(g), r.d / g};
}

Int csl3_sigma(const PrimitiveQuat& q) {
  const auto r = rot3_from_quat(q);
  return brute_sigma(standard_lattice(LatticeKind::P, 3), r.m, r.d);
}

std::vector<Class3> classify3(const Int& sigma) {
  const auto quats = quats_with_sigma(sigma);
  const auto& g = quat_group(GroupName::CG).generators;
  std::set<SmallQuat> seen;
  std::vector<Class3> out;
  for (const auto& q : quats) {
    if (seen.count(q)) continue;
    std::vector<SmallQuat> orbit{q}, frontier{q};
    seen.insert(q);
    while (!frontier.empty()) {
      std::vector<SmallQuat> next;
      for (const auto& x : frontier)
        for (const auto& s : g)
          for (const auto& y : {small_mul(s, x), small_mul(x, s)}) {
            auto z = canonical_sign(primitive_part(y));
            if (seen.insert(z).second) {
              orbit.push_back(z);
              next.push_back(z);
            }
          }
      frontier = std::move(next);
    }
    std::set<std::string> keys;
    for (const auto& x : orbit) keys.insert(csl3_key(x));
    out.push_back(Class3{classify_quat(q), *std::min_element(orbit.begin(), orbit.end()), 2 * orbit.size(), keys.size()});
  }
  std::sort(out.begin(), out.end(), [](const Class3& a, const Class3& b) { return a.representative < b.representative; });
  return out;
}

std::size_t count_csl3(const Int& sigma) {
  std::set<std::string> keys;
  for (const auto& q : quats_with_sigma(sigma)) keys.insert(csl3_key(q));
  return keys.size();
}

} // namespace csl4
