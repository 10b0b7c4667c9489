#include "csl4/symgroup.hpp"

#include "csl4/rot4.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace csl4 {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t(1) << 31;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// All sign choices and coordinate permutations of a pattern.
std::vector<SmallQuat> signed_permutations(SmallQuat base) {
  std::set<SmallQuat> out;
  std::sort(base.begin(), base.end());
  do {
    for (int mask = 0; mask < 16; ++mask) {
      SmallQuat q = base;
      for (int i = 0; i < 4; ++i)
        if (mask & (1 << i)) q[i] = -q[i];
      out.insert(q);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return {out.begin(), out.end()};
}

template <class E, class Mul> std::vector<E> closure(const E& identity, const std::vector<E>& gens, Mul mul) {
  std::set<E> seen{identity};
  std::deque<E> todo{identity};
  while (!todo.empty()) {
    E x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      E y = mul(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

template <class E, class Mul> std::vector<E> greedy_generators(const E& identity, const std::vector<E>& elements, Mul mul) {
  std::vector<E> gens;
  std::vector<E> span{identity};
  for (const auto& e : elements) {
    if (span.size() == elements.size()) break;
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = closure(identity, gens, mul);
  }
  return gens;
}

template <class E, class Mul> void check_group(const GroupSet<E>& g, const E& identity, Mul mul, std::size_t expected) {
  if (g.elements.size() != expected)
    throw std::logic_error(g.name + ": order " + std::to_string(g.elements.size()) + ", expected " +
                           std::to_string(expected));
  if (!std::binary_search(g.elements.begin(), g.elements.end(), identity))
    throw std::logic_error(g.name + ": missing identity");
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      if (!g.contains(mul(a, b))) throw std::logic_error(g.name + ": not closed under products");
  if (closure(identity, g.generators, mul) != g.elements) throw std::logic_error(g.name + ": generators do not span");
}

const SmallQuat kOne{1, 0, 0, 0};
const QuatPair kPairOne{kOne, kOne};

auto quat_mul_scaled = [](const SmallQuat& a, const SmallQuat& b) { return primitive_part(small_mul(a, b)); };
auto pair_mul_scaled = [](const QuatPair& a, const QuatPair& b) { return pair_mul(a, b); };

// Integer rotation matrix test for a pair of small quaternions.
bool rotation_is_integral(const QuatPair& x) {
  const std::int64_t n = norm2(x.p) * norm2(x.q);
  std::int64_t d = 0;
  while ((d + 1) * (d + 1) <= n) ++d;
  if (d * d != n) return false;
  static const std::array<SmallQuat, 4> u{SmallQuat{1, 0, 0, 0}, SmallQuat{0, 1, 0, 0}, SmallQuat{0, 0, 1, 0},
                                          SmallQuat{0, 0, 0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      SmallQuat a = small_mul(x.p, u[j]), b = small_mul(u[i], x.q);
      std::int64_t e = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
      if (e % d != 0) return false;
    }
  return true;
}

QuatGroup build_cg(bool prime) {
  QuatGroup g;
  g.name = prime ? "CG'" : "CG";
  std::vector<SmallQuat> seed;
  for (const auto& base : {SmallQuat{1, 0, 0, 0}, SmallQuat{1, 1, 1, 1}, SmallQuat{1, 1, 0, 0}}) {
    if (prime && base == SmallQuat{1, 1, 0, 0}) continue;
    auto v = signed_permutations(base);
    seed.insert(seed.end(), v.begin(), v.end());
  }
  g.elements = closure(kOne, seed, quat_mul_scaled);
  g.generators = greedy_generators(kOne, g.elements, quat_mul_scaled);
  check_group(g, kOne, quat_mul_scaled, prime ? 24 : 48);
  return g;
}

PairGroup build_cgf() {
  PairGroup g;
  g.name = "CG_F";
  const auto& gp = quat_group(GroupName::CGprime).elements;
  std::vector<QuatPair> seed;
  for (const auto& a : gp)
    for (const auto& b : gp) seed.push_back({a, b});
  const SmallQuat w{1, 1, 0, 0};
  seed.push_back({w, w});
  g.elements = closure(kPairOne, seed, pair_mul_scaled);
  g.generators = greedy_generators(kPairOne, g.elements, pair_mul_scaled);
  check_group(g, kPairOne, pair_mul_scaled, 1152);
  for (const auto& x : g.elements)
    if (!in_cgf(x)) throw std::logic_error("CG_F: element with inconsistent norms");
  return g;
}

PairGroup build_cgp() {
  PairGroup g;
  g.name = "CG_P";
  for (const auto& x : pair_group(GroupName::CGF).elements)
    if (rotation_is_integral(x)) g.elements.push_back(x);
  g.generators = greedy_generators(kPairOne, g.elements, pair_mul_scaled);
  check_group(g, kPairOne, pair_mul_scaled, 384);
  // CG_F = CG_P u s1 CG_P u s2 CG_P.
  const QuatPair s1{kOne, {1, 1, 1, 1}}, s2{kOne, {1, -1, -1, -1}};
  std::set<QuatPair> uni(g.elements.begin(), g.elements.end());
  for (const auto& s : {s1, s2})
    for (const auto& x : g.elements) uni.insert(pair_mul(s, x));
  if (uni.size() != 1152 || !std::equal(uni.begin(), uni.end(), pair_group(GroupName::CGF).elements.begin()))
    throw std::logic_error("CG_P: coset decomposition of CG_F failed");
  return g;
}

} // namespace

SmallQuat to_small(const IntQuat& q) {
  SmallQuat s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (abs_val(q[i]) >= kSmallLimit) throw ArithmeticOverflow("quaternion coefficient too large for orbit search");
    s[i] = static_cast<std::int64_t>(q[i]);
  }
  return s;
}

IntQuat to_int_quat(const SmallQuat& q) { return {q[0], q[1], q[2], q[3]}; }

std::int64_t norm2(const SmallQuat& q) { return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]; }

SmallQuat small_mul(const SmallQuat& p, const SmallQuat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3], p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1], p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

SmallQuat small_conj(const SmallQuat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

SmallQuat primitive_part(const SmallQuat& a) {
  std::int64_t g = gcd64(gcd64(a[0], a[1]), gcd64(a[2], a[3]));
  if (g == 0) throw std::invalid_argument("primitive_part: zero quaternion");
  if (g == 1) return a;
  return {a[0] / g, a[1] / g, a[2] / g, a[3] / g};
}

SmallQuat canonical_sign(const SmallQuat& a) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] > 0) return a;
    if (a[i] < 0) return {-a[0], -a[1], -a[2], -a[3]};
  }
  return a;
}

ScaledQuat::ScaledQuat(const SmallQuat& q) : q_(q) {
  if (!in_cg(q)) throw std::invalid_argument("ScaledQuat: need a primitive quaternion of norm 1, 2 or 4");
}

ScaledQuat operator*(const ScaledQuat& a, const ScaledQuat& b) {
  SmallQuat r = primitive_part(small_mul(a.q_, b.q_));
  if (!in_cg(r)) throw std::logic_error("ScaledQuat: product left the group");
  return ScaledQuat(r, ScaledQuat::Trusted{});
}

ScaledQuat ScaledQuat::inverse() const { return ScaledQuat(small_conj(q_), Trusted{}); }

std::size_t QuatPairHash::operator()(const QuatPair& x) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : x.p) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
  for (auto v : x.q) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

QuatPair pair_mul(const QuatPair& a, const QuatPair& b) {
  return {primitive_part(small_mul(a.p, b.p)), primitive_part(small_mul(a.q, b.q))};
}

QuatPair pair_inverse(const QuatPair& a) { return {small_conj(a.p), small_conj(a.q)}; }

QuatPair canonical_pair(const SmallQuat& p, const SmallQuat& q) {
  SmallQuat pp = primitive_part(p), qq = primitive_part(q);
  SmallQuat pc = canonical_sign(pp);
  if (pc != pp) return {pc, {-qq[0], -qq[1], -qq[2], -qq[3]}};
  return {pp, qq};
}

QuatPair canonical_pair(const PrimitiveQuat& p, const PrimitiveQuat& q) { return canonical_pair(to_small(p), to_small(q)); }

std::string to_string(const QuatPair& x) {
  std::ostringstream os;
  os << '(' << to_int_quat(x.p) << ',' << to_int_quat(x.q) << ')';
  return os.str();
}

template <class E> bool GroupSet<E>::contains(const E& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}
template struct GroupSet<SmallQuat>;
template struct GroupSet<QuatPair>;

const char* to_string(GroupName g) {
  switch (g) {
  case GroupName::CG: return "CG";
  case GroupName::CGprime: return "CG'";
  case GroupName::CGF: return "CG_F";
  default: return "CG_P";
  }
}

const QuatGroup& quat_group(GroupName g) {
  static const QuatGroup cg = build_cg(false);
  static const QuatGroup cgp = build_cg(true);
  if (g == GroupName::CG) return cg;
  if (g == GroupName::CGprime) return cgp;
  throw std::invalid_argument("quat_group: not a quaternion group");
}

const PairGroup& pair_group(GroupName g) {
  if (g == GroupName::CGF) {
    static const PairGroup f = build_cgf();
    return f;
  }
  if (g == GroupName::CGP) {
    static const PairGroup p = build_cgp();
    return p;
  }
  throw std::invalid_argument("pair_group: not a pair group");
}

std::size_t rotation_count(GroupName g) { return pair_group(g).order() / 2; }

bool in_cg(const SmallQuat& q) {
  std::int64_t n = norm2(q);
  if (n != 1 && n != 2 && n != 4) return false;
  return gcd64(gcd64(q[0], q[1]), gcd64(q[2], q[3])) == 1;
}

bool in_cgprime(const SmallQuat& q) { return in_cg(q) && norm2(q) != 2; }

bool in_cgf(const QuatPair& x) {
  if (!in_cg(x.p) || !in_cg(x.q)) return false;
  return (norm2(x.p) == 2) == (norm2(x.q) == 2);
}

bool in_cgp(const QuatPair& x) { return pair_group(GroupName::CGP).contains(x); }

int index_of(ClassLabel l) { return static_cast<int>(l); }

const char* to_string(ClassLabel l) {
  static const char* names[] = {"T0", "T1", "T2", "T3", "T4", "T5"};
  return names[index_of(l)];
}

const char* shape_of(ClassLabel l) {
  static const char* names[] = {"(1,0,0,0)", "(0,1,1,1)", "(m,n,n,n)", "(m,n,0,0)", "(m,n,n,0)", "general"};
  return names[index_of(l)];
}

int h_order_of(ClassLabel l) {
  static const int orders[] = {48, 12, 6, 8, 4, 2};
  return orders[index_of(l)];
}

std::vector<SmallQuat> h_of_quat(const SmallQuat& q) {
  // g in CG with q^-1 g q in CG.
  std::vector<SmallQuat> out;
  const SmallQuat qc = small_conj(q);
  for (const auto& g : quat_group(GroupName::CG).elements)
    if (in_cg(primitive_part(small_mul(small_mul(qc, g), q)))) out.push_back(g);
  return out;
}

std::vector<SmallQuat> h_of_quat(const PrimitiveQuat& q) { return h_of_quat(to_small(q)); }

ClassLabel classify_quat(const SmallQuat& q) {
  switch (h_of_quat(q).size()) {
  case 48: return ClassLabel::T0;
  case 12: return ClassLabel::T1;
  case 6: return ClassLabel::T2;
  case 8: return ClassLabel::T3;
  case 4: return ClassLabel::T4;
  case 2: return ClassLabel::T5;
  default: throw std::logic_error("classify_quat: unexpected |H(q)| for " + to_string(to_int_quat(q)));
  }
}

ClassLabel classify_quat(const PrimitiveQuat& q) { return classify_quat(to_small(q)); }

std::vector<QuatPair> h_of_pair(const SmallQuat& p, const SmallQuat& q, GroupName g) {
  const auto& grp = pair_group(g);
  const bool p_side = g == GroupName::CGP;
  std::vector<QuatPair> out;
  const SmallQuat pc = small_conj(p), qc = small_conj(q);
  for (const auto& x : grp.elements) {
    QuatPair y{primitive_part(small_mul(small_mul(pc, x.p), p)), primitive_part(small_mul(small_mul(qc, x.q), q))};
    if (p_side ? in_cgp(y) : in_cgf(y)) out.push_back(x);
  }
  return out;
}

std::vector<QuatPair> h_of_pair(const PrimitiveQuat& p, const PrimitiveQuat& q, GroupName g) {
  return h_of_pair(to_small(p), to_small(q), g);
}

namespace {

template <class Visit> void orbit_bfs(const QuatPair& start, const std::vector<QuatPair>& gens, Visit&& visit) {
  std::unordered_set<QuatPair, QuatPairHash> seen;
  std::vector<QuatPair> todo{start};
  seen.insert(start);
  while (!todo.empty()) {
    QuatPair x = todo.back();
    todo.pop_back();
    visit(x);
    for (const auto& g : gens) {
      for (const auto& y : {canonical_pair(small_mul(g.p, x.p), small_mul(g.q, x.q)),
                            canonical_pair(small_mul(x.p, g.p), small_mul(x.q, g.q))})
        if (seen.insert(y).second) todo.push_back(y);
    }
  }
}

} // namespace

std::vector<QuatPair> double_coset(const QuatPair& x, GroupName g) {
  std::vector<QuatPair> out;
  orbit_bfs(canonical_pair(x.p, x.q), pair_group(g).generators, [&](const QuatPair& y) { out.push_back(y); });
  std::sort(out.begin(), out.end());
  return out;
}

Partition double_coset_classes(const std::vector<QuatPair>& pairs, GroupName g) {
  Partition part;
  part.group = g;
  const auto& grp = pair_group(g);
  std::vector<QuatPair> sorted;
  sorted.reserve(pairs.size());
  for (const auto& x : pairs) sorted.push_back(canonical_pair(x.p, x.q));
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::vector<QuatPair>> orbits;
  for (const auto& x : sorted) {
    if (part.class_of.count(x)) continue;
    std::vector<QuatPair> orb;
    orbit_bfs(x, grp.generators, [&](const QuatPair& y) { orb.push_back(y); });
    const std::size_t id = orbits.size();
    for (const auto& y : orb) part.class_of.emplace(y, id);
    orbits.push_back(std::move(orb));
  }
  // Renumber by representative so that ordering does not depend on traversal.
  std::vector<std::pair<QuatPair, std::size_t>> reps;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    reps.emplace_back(*std::min_element(orbits[i].begin(), orbits[i].end()), i);
  std::sort(reps.begin(), reps.end());
  std::vector<std::size_t> new_id(orbits.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& [rep, old] = reps[k];
    new_id[old] = k;
    PairClass c;
    c.representative = rep;
    c.label_p = classify_quat(rep.p);
    c.label_q = classify_quat(rep.q);
    c.orbit_pairs = orbits[old].size();
    c.h_order = h_of_pair(rep.p, rep.q, g).size();
    c.g = grp.order() / c.h_order;
    part.classes.push_back(c);
  }
  for (auto& [key, id] : part.class_of) id = new_id[id];
  return part;
}

std::vector<PSplit> f_class_to_p_classes(const SmallQuat& p, const SmallQuat& q) {
  auto f_orbit = double_coset(QuatPair{p, q}, GroupName::CGF);
  const auto& gens = pair_group(GroupName::CGP).generators;
  std::unordered_set<QuatPair, QuatPairHash> done;
  std::vector<PSplit> out;
  for (const auto& x : f_orbit) {
    if (done.count(x)) continue;
    PSplit s;
    s.representative = x; // f_orbit is sorted, so x is the least member of its P-orbit
    orbit_bfs(x, gens, [&](const QuatPair& y) {
      done.insert(y);
      ++s.orbit_pairs;
    });
    s.h_order = h_of_pair(x.p, x.q, GroupName::CGP).size();
    PrimitiveQuat xp(to_int_quat(x.p)), xq(to_int_quat(x.q));
    if (is_admissible(xp, xq)) s.sigma_p = sigma_P(xp, xq);
    out.push_back(s);
  }
  return out;
}

std::vector<MergedClass> swap_merge(const Partition& part) {
  const std::size_t n = part.classes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  std::vector<bool> self(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = part.classes[i].representative;
    auto it = part.class_of.find(canonical_pair(r.q, r.p));
    if (it == part.class_of.end()) continue;
    if (it->second == i) self[i] = true;
    std::size_t a = find(i), b = find(it->second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, MergedClass> groups;
  for (std::size_t i = 0; i < n; ++i) {
    auto& m = groups[find(i)];
    m.members.push_back(i);
    m.self_swapped = m.self_swapped || self[i];
  }
  std::vector<MergedClass> out;
  for (auto& [root, m] : groups) out.push_back(std::move(m));
  return out;
}

} // namespace csl4
