#include "csl4/enumerate.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace csl4 {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square64(std::int64_t n) { return n >= 0 && isqrt64(n) * isqrt64(n) == n; }

std::int64_t odd_part64(std::int64_t n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

std::int64_t to_i64(const Int& n, const char* who) {
  if (n > Int(std::numeric_limits<std::int32_t>::max())) throw BudgetExceeded(std::string(who) + ": argument too large", "int32");
  return static_cast<std::int64_t>(n);
}

PrimitiveQuat to_primitive(const SmallQuat& q) { return PrimitiveQuat(to_int_quat(q)); }

std::string pair_text(const QuatPair& x) { return to_string(x); }

} // namespace

std::vector<SmallQuat> primitive_small_quats(std::int64_t n, bool both_signs) {
  if (n < 1) throw std::invalid_argument("primitive_small_quats: norm must be positive");
  std::vector<SmallQuat> out;
  const std::int64_t b = isqrt64(n);
  for (std::int64_t a0 = -b; a0 <= b; ++a0)
    for (std::int64_t a1 = -b; a1 <= b; ++a1) {
      const std::int64_t r1 = n - a0 * a0 - a1 * a1;
      if (r1 < 0) continue;
      for (std::int64_t a2 = -b; a2 <= b; ++a2) {
        const std::int64_t r2 = r1 - a2 * a2;
        if (r2 < 0 || !is_square64(r2)) continue;
        const std::int64_t a3 = isqrt64(r2);
        for (std::int64_t s : {a3, -a3}) {
          if (std::gcd(std::gcd(a0, a1), std::gcd(a2, s)) == 1) {
            SmallQuat q{a0, a1, a2, s};
            if (both_signs || canonical_sign(q) == q) out.push_back(q);
          }
          if (a3 == 0) break;
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

NormClass primitive_quats_of_norm(const Int& n) {
  NormClass c{n, {}};
  for (const auto& q : primitive_small_quats(to_i64(n, "primitive_quats_of_norm"))) c.quats.push_back(to_primitive(q));
  std::sort(c.quats.begin(), c.quats.end());
  return c;
}

std::vector<QuatPair> admissible_pairs_for_sigmaF(const Int& sigma_in, std::optional<TypePair> type) {
  const std::int64_t sigma = to_i64(sigma_in, "admissible_pairs_for_sigmaF");
  if (sigma < 1) throw std::invalid_argument("admissible_pairs_for_sigmaF: sigma must be positive");
  std::vector<QuatPair> out;
  if (sigma % 2 == 0) return out;
  std::map<std::int64_t, std::vector<SmallQuat>> left, right;
  auto keep = [&](const SmallQuat& q, bool first) {
    return !type || classify_quat(q) == (first ? type->first : type->second);
  };
  for (std::int64_t d = 1; d <= sigma; d += 2) {
    if (sigma % d) continue;
    for (std::int64_t e = 1; e <= 4; e *= 2) {
      for (const auto& q : primitive_small_quats(d * e, true)) {
        if (canonical_sign(q) == q && keep(q, true)) left[d * e].push_back(q);
        if (keep(q, false)) right[d * e].push_back(q);
      }
    }
  }
  for (const auto& [np, ps] : left)
    for (const auto& [nq, qs] : right) {
      if (!is_square64(np * nq) || std::lcm(odd_part64(np), odd_part64(nq)) != sigma) continue;
      for (const auto& p : ps)
        for (const auto& q : qs) out.push_back({p, q});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuatPair> admissible_pairs_up_to(std::int64_t max_normsq) {
  std::vector<QuatPair> out;
  std::vector<std::vector<SmallQuat>> by_norm(static_cast<std::size_t>(max_normsq) + 1);
  for (std::int64_t n = 1; n <= max_normsq; ++n) by_norm[n] = primitive_small_quats(n, true);
  for (std::int64_t np = 1; np <= max_normsq; ++np)
    for (std::int64_t nq = 1; nq <= max_normsq; ++nq) {
      if (!is_square64(np * nq)) continue;
      for (const auto& p : by_norm[np]) {
        if (canonical_sign(p) != p) continue;
        for (const auto& q : by_norm[nq]) out.push_back({p, q});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

CslCatalog build_catalog(const Int& sigma, LatticeKind kind, const CatalogOptions& opts) {
  if (sigma < 1) throw std::invalid_argument("build_catalog: sigma must be positive");
  CslCatalog cat{sigma, kind, 0, 0, {}, {}, 0};
  Int sf = sigma;
  if (kind == LatticeKind::P && sigma % 2 == 0) sf = sigma / 2;
  if (sf % 2 == 0) return cat;
  if (sf > opts.max_sigma) {
    std::ostringstream os;
    os << "build_catalog: sigma_F = " << sf << " exceeds the budget";
    throw BudgetExceeded(os.str(), "max_sigma=" + opts.max_sigma.str());
  }
  const Int expected_pairs = fF(sf) * 576;
  if (expected_pairs > Int(opts.max_pairs)) {
    std::ostringstream os;
    os << "build_catalog: " << expected_pairs << " pairs exceed the budget";
    throw BudgetExceeded(os.str(), "max_pairs=" + std::to_string(opts.max_pairs));
  }

  auto candidates = admissible_pairs_for_sigmaF(sf);
  const Lattice base = standard_lattice(kind);
  std::vector<std::string> keys(candidates.size());
  std::vector<char> selected(candidates.size(), 1);
  detail::parallel_for(candidates.size(), opts.jobs, [&](std::size_t i) {
    const auto r = build_rotation(to_primitive(candidates[i].p), to_primitive(candidates[i].q));
    if (kind == LatticeKind::P && lcm_val(sf, den_P(r)) != sigma) {
      selected[i] = 0;
      return;
    }
    keys[i] = csl(base, r.m, r.d).key();
  });

  std::vector<QuatPair> pairs;
  std::vector<std::string> pair_keys;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (selected[i]) {
      pairs.push_back(candidates[i]);
      pair_keys.push_back(std::move(keys[i]));
    }
  cat.pair_count = pairs.size();
  if (pairs.empty()) return cat;

  const GroupName group = kind == LatticeKind::F ? GroupName::CGF : GroupName::CGP;
  cat.rotation_cosets = pairs.size() / rotation_count(group);
  const auto part = double_coset_classes(pairs, group);
  std::map<std::string, std::size_t> first_pair;
  std::map<std::string, std::set<std::size_t>> classes_of_key;
  std::vector<std::set<std::string>> keys_of_class(part.classes.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    first_pair.emplace(pair_keys[i], i);
    const std::size_t c = part.class_of.at(pairs[i]);
    classes_of_key[pair_keys[i]].insert(c);
    keys_of_class[c].insert(pair_keys[i]);
  }
  for (const auto& [key, idx] : first_pair) {
    const auto r = build_rotation(to_primitive(pairs[idx].p), to_primitive(pairs[idx].q));
    cat.csls.push_back(csl(base, r.m, r.d));
  }
  for (const auto& [key, cls] : classes_of_key)
    if (cls.size() > 1) ++cat.shared_csls;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    const auto& pc = part.classes[c];
    const auto pp = to_primitive(pc.representative.p), qq = to_primitive(pc.representative.q);
    const auto r = build_rotation(pp, qq);
    cat.classes.push_back(
        CatalogClass{pc, sigma_F(pp, qq), lcm_val(sigma_F(pp, qq), den_P(r)), keys_of_class[c].size(), csl(base, r.m, r.d)});
  }
  return cat;
}

TheoremReport verify_theorems(const Int& max_normsq, unsigned jobs) {
  TheoremReport rep;
  rep.max_normsq = max_normsq;
  const auto pairs = admissible_pairs_up_to(to_i64(max_normsq, "verify_theorems"));
  rep.pairs = pairs.size();
  const Lattice lf = standard_lattice(LatticeKind::F), lp = standard_lattice(LatticeKind::P);
  std::vector<std::vector<std::string>> fails(pairs.size());
  std::vector<std::size_t> checks(pairs.size(), 0);
  detail::parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const auto p = to_primitive(pairs[i].p), q = to_primitive(pairs[i].q);
    auto fail = [&](const std::string& what) { fails[i].push_back(pair_text(pairs[i]) + ": " + what); };
    auto check = [&](bool ok, const std::string& what) {
      ++checks[i];
      if (!ok) fail(what);
    };
    const auto r = build_rotation(p, q);
    const Int sf = sigma_F(p, q);
    const Int dp = den_P(r);
    const Int df = den_F(r);
    const Int sp = lcm_val(sf, dp);
    const Int bf = brute_sigma(lf, r.m, r.d);
    const Int bp = brute_sigma(lp, r.m, r.d);
    std::ostringstream os;
    os << "brute F index " << bf << " vs lcm " << sf;
    check(bf == sf, os.str());
    os.str("");
    os << "brute P index " << bp << " vs formula " << sp;
    check(bp == sp, os.str());
    os.str("");
    os << "den_F " << df << " vs pair formula " << den_F_from_pair(p, q);
    check(df == den_F_from_pair(p, q), os.str());
    check((sp % 2 == 0) == (dp % 2 == 0), "parity of Sigma_P and den_P differ");
    check(sp == sf || sp == 2 * sf, "Sigma_P is neither Sigma_F nor 2 Sigma_F");
    check(df <= bf && bf <= df * df * df * df, "den_F <= Sigma_F <= den_F^4 violated");
    check(dp <= bp && bp <= dp * dp * dp * dp, "den_P <= Sigma_P <= den_P^4 violated");
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    rep.checks += checks[i];
    for (auto& f : fails[i]) rep.failures.push_back(std::move(f));
  }
  return rep;
}

SplittingReport verify_splitting(const Int& sigma, unsigned jobs) {
  SplittingReport rep;
  rep.sigma = sigma;
  if (sigma % 2 == 0) return rep;
  const Int twice = 2 * sigma;
  const auto part = double_coset_classes(admissible_pairs_for_sigmaF(sigma), GroupName::CGF);
  rep.classes.resize(part.classes.size());
  const auto gp = static_cast<std::size_t>(pair_group(GroupName::CGP).order());
  detail::parallel_for(part.classes.size(), jobs, [&](std::size_t c) {
    auto& cr = rep.classes[c];
    cr.f_class = part.classes[c];
    cr.p_classes = f_class_to_p_classes(cr.f_class.representative.p, cr.f_class.representative.q);
    for (const auto& s : cr.p_classes) {
      if (s.sigma_p == sigma) ++cr.odd;
      else if (s.sigma_p == twice) ++cr.even;
    }
    cr.expected = split_counts(cr.f_class.label_p, cr.f_class.label_q);
    cr.ok = cr.odd + cr.even == cr.p_classes.size() && static_cast<int>(cr.odd) == cr.expected.first &&
            static_cast<int>(cr.even) == cr.expected.second &&
            static_cast<int>(cr.p_classes.size()) == split_total(cr.f_class.label_p, cr.f_class.label_q);
  });
  for (const auto& cr : rep.classes) {
    rep.brute_odd += cr.odd;
    rep.brute_even += cr.even;
    for (const auto& s : cr.p_classes) {
      if (s.sigma_p == sigma) rep.predicted_p_csls_odd += gp / s.h_order;
      else if (s.sigma_p == twice) rep.predicted_p_csls_even += gp / s.h_order;
    }
    if (!cr.ok) {
      std::ostringstream os;
      os << "class " << to_string(cr.f_class.representative) << " (" << to_string(cr.f_class.label_p) << ','
         << to_string(cr.f_class.label_q) << ") splits " << cr.odd << '+' << cr.even << ", tables give "
         << cr.expected.first << '+' << cr.expected.second;
      rep.failures.push_back(os.str());
    }
  }
  rep.table_odd = p_class_total(sigma);
  rep.table_even = p_class_total(2 * sigma);
  if (rep.table_odd != Rational(rep.brute_odd) || rep.table_even != Rational(rep.brute_even)) {
    std::ostringstream os;
    os << "P-class totals " << rep.brute_odd << '/' << rep.brute_even << " differ from the table " << rep.table_odd << '/'
       << rep.table_even;
    rep.failures.push_back(os.str());
  }
  return rep;
}

} // namespace csl4
