#include "csl4cli/checks.hpp"

#include "csl4/cubic3.hpp"

#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace csl4::cli {

void CheckLog::add(bool pass, std::string name, std::string detail) {
  checks_.push_back({pass, std::move(name), std::move(detail)});
}

bool CheckLog::all_passed() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

void CheckLog::print(std::ostream& out) const {
  for (const auto& c : checks_) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

namespace {

const SmallQuat kTypeRep[6] = {{1, 0, 0, 0}, {0, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 0, 0}, {3, 1, 1, 0}, {1, 2, 3, 4}};

template <class... T> std::string cat(const T&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

PrimitiveQuat prim(const SmallQuat& q) { return PrimitiveQuat(to_int_quat(q)); }

std::string type_text(ClassLabel a, ClassLabel b) { return cat('(', to_string(a), ',', to_string(b), ')'); }

} // namespace

void check_groups(CheckLog& log) {
  const std::size_t cg = quat_group(GroupName::CG).order(), cgp = quat_group(GroupName::CGprime).order();
  const std::size_t gf = pair_group(GroupName::CGF).order(), gp = pair_group(GroupName::CGP).order();
  log.add(cg == 48 && cgp == 24 && gf == 1152 && gp == 384, "group orders",
          cat("|G|=", cg, " |G'|=", cgp, " |G_F|=", gf, " |G_P|=", gp));
  const auto rf = rotation_count(GroupName::CGF), rp = rotation_count(GroupName::CGP);
  log.add(rf == 576 && rp == 192, "symmetry rotations", cat("D4 ", rf, ", Z4 ", rp));
}

void check_type_table(CheckLog& log) {
  const std::size_t h[6] = {48, 12, 6, 8, 4, 2};
  const std::size_t orbit[6] = {48, 192, 384, 288, 576, 1152};
  const auto& g = quat_group(GroupName::CG).elements;
  for (int i = 0; i < 6; ++i) {
    const auto& q = kTypeRep[i];
    const std::size_t hq = h_of_quat(q).size();
    std::set<SmallQuat> orb;
    for (const auto& s : g)
      for (const auto& t : g) orb.insert(primitive_part(small_mul(small_mul(s, q), t)));
    const auto label = classify_quat(q);
    log.add(hq == h[i] && orb.size() == orbit[i] && index_of(label) == i,
            cat("type ", to_string(kAllLabels[i]), ' ', shape_of(kAllLabels[i])),
            cat("|H|=", hq, " (", h[i], "), orbit ", orb.size(), " (", orbit[i], ")"));
  }
}

void check_pair_stabilizers(CheckLog& log) {
  const std::map<std::pair<int, int>, std::size_t> expected{
      {{0, 0}, 1152}, {{0, 2}, 144}, {{0, 3}, 192}, {{0, 4}, 96}, {{0, 5}, 48}, {{1, 1}, 72}, {{1, 2}, 36},
      {{1, 3}, 48},   {{1, 4}, 24},  {{1, 5}, 12},  {{2, 2}, 36}, {{2, 3}, 24}, {{2, 4}, 12}, {{2, 5}, 12},
      {{3, 3}, 32},   {{3, 4}, 16},  {{3, 5}, 8},   {{4, 4}, 8},  {{4, 5}, 4},  {{5, 5}, 4}};
  for (const auto& [ij, order] : expected) {
    const auto [i, j] = ij;
    const std::size_t h = h_of_pair(kTypeRep[i], kTypeRep[j], GroupName::CGF).size();
    const std::size_t g = 1152 / h;
    log.add(h == order && 1152 % h == 0 && g == 1152 / order, cat("|CH_F| ", type_text(kAllLabels[i], kAllLabels[j])),
            cat(h, " (", order, "), g=", g));
  }
}

void check_p_stabilizers(CheckLog& log) {
  struct Row {
    SmallQuat p, q;
    std::size_t order;
  };
  const Row rows[] = {
      {{1, 0, 0, 0}, {1, 0, 0, 0}, 384}, {{1, 0, 0, 0}, {1, 1, 1, 1}, 192}, {{1, 0, 0, 0}, {2, 1, 1, 1}, 48},
      {{1, 0, 0, 0}, {2, 1, 0, 0}, 64},  {{1, 0, 0, 0}, {1, 2, 1, 2}, 32},  {{1, 0, 0, 0}, {3, 1, 1, 0}, 32},
      {{1, 0, 0, 0}, {1, 2, 3, 4}, 16},  {{0, 1, 1, 1}, {0, 1, 1, 1}, 24},  {{0, 1, 1, 1}, {3, 1, 1, 1}, 12},
      {{0, 1, 1, 1}, {2, 1, 0, 0}, 16},  {{0, 1, 1, 1}, {1, 2, 1, 2}, 8},   {{0, 1, 1, 1}, {3, 1, 1, 0}, 8},
      {{2, 1, 1, 1}, {2, 1, 1, 1}, 12},  {{2, 1, 1, 1}, {2, 1, 0, 0}, 8},   {{2, 1, 1, 1}, {3, 1, 1, 0}, 4},
      {{2, 1, 0, 0}, {2, 1, 0, 0}, 32},  {{2, 1, 0, 0}, {2, 0, 1, 0}, 16},  {{2, 1, 0, 0}, {3, 1, 1, 0}, 8},
      {{2, 1, 0, 0}, {3, 0, 1, 1}, 16},  {{3, 1, 1, 0}, {3, 1, 1, 0}, 8},   {{3, 1, 1, 0}, {3, 0, 1, 1}, 4},
      {{1, 2, 3, 4}, {1, 2, 3, 4}, 4},
  };
  for (const auto& r : rows) {
    const std::size_t h = h_of_pair(r.p, r.q, GroupName::CGP).size();
    log.add(h == r.order, cat("|CH_P| ", to_string(QuatPair{r.p, r.q})), cat(h, " (", r.order, ")"));
  }
}

void check_theorems(CheckLog& log, const TheoremReport& rep, TheoremPart part) {
  const char* tags[] = {"brute F index", "den_F", "den_F <="};
  const char* ptags[] = {"brute P index", "parity", "neither", "den_P <="};
  std::size_t bad = 0;
  std::string first;
  auto scan = [&](const auto& list) {
    for (const auto& f : rep.failures)
      for (const char* t : list)
        if (f.find(t) != std::string::npos) {
          if (bad++ == 0) first = f;
          break;
        }
  };
  if (part == TheoremPart::F) scan(tags);
  else scan(ptags);
  std::string what = part == TheoremPart::F ? "F index = lcm(Sigma(p), Sigma(q))"
                                            : "P index = lcm(Sigma(p), Sigma(q), den_P), parity rule";
  log.add(bad == 0 && rep.pairs > 0, cat(what, " for |p|^2, |q|^2 <= ", rep.max_normsq),
          bad == 0 ? cat(rep.pairs, " pairs") : cat(bad, " failures, first: ", first));
}

void check_f_catalog(CheckLog& log, const CslCatalog& c) {
  const Int f = fF(c.sigma);
  const std::string at = cat("Sigma=", c.sigma, ": ");
  log.add(Int(c.csls.size()) == f, cat(at, "distinct D4 CSLs = f_F"),
          cat(c.csls.size(), " distinct CSLs, f_F=", f, " (", c.rotation_cosets, " rotation cosets)"));
  log.add(Int(c.rotation_cosets) == f, cat(at, "coincidence rotations modulo symmetries = f_F"),
          cat(c.rotation_cosets, " vs ", f));
  std::size_t gsum = 0;
  bool g_ok = true;
  for (const auto& k : c.classes) {
    gsum += k.cls.g;
    const auto& x = k.cls.representative;
    g_ok = g_ok && k.cls.g * h_of_pair(x.p, x.q, GroupName::CGF).size() == 1152;
  }
  log.add(gsum == c.rotation_cosets && g_ok, cat(at, "sum of g = rotation cosets, g = 1152/|CH_F|"),
          cat(c.classes.size(), " classes, sum of g ", gsum));
  const Lattice base = standard_lattice(LatticeKind::F);
  bool idx_ok = true;
  for (const auto& l : c.csls) idx_ok = idx_ok && index_in(l, base) == c.sigma;
  for (const auto& k : c.classes) {
    const auto& x = k.cls.representative;
    const auto r = build_rotation(prim(x.p), prim(x.q));
    IntMatrix scaled = base.basis();
    const Int df = den_F(r);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) scaled(i, j) *= df;
    idx_ok = idx_ok && contains(k.csl, Lattice(scaled, base.den()));
  }
  log.add(idx_ok, cat(at, "every CSL has index Sigma and contains den_F L"));
}

void check_class_counts(CheckLog& log, const CslCatalog& c) {
  const auto rep = count_report(c.sigma);
  std::map<TypePair, std::size_t> brute;
  for (const auto& k : c.classes) ++brute[{k.cls.label_p, k.cls.label_q}];
  std::set<TypePair> keys;
  for (const auto& [t, n] : brute) keys.insert(t);
  for (const auto& [t, n] : rep.per_class) keys.insert(t);
  const std::string at = cat("Sigma=", c.sigma, ": ");
  std::string mismatch;
  std::size_t closed = 0;
  for (const auto& t : keys) {
    const Rational table = rep.per_class.count(t) ? rep.per_class.at(t) : Rational(0);
    const std::size_t b = brute.count(t) ? brute.at(t) : 0;
    if (has_closed_form(t.first, t.second)) ++closed;
    if (table != Rational(b))
      mismatch += cat(mismatch.empty() ? "" : ", ", type_text(t.first, t.second), " table ", table, " brute ", b);
  }
  log.add(mismatch.empty(), cat(at, "class counts per type pair = n_Fij"),
          mismatch.empty() ? cat(keys.size(), " type pairs (", closed, " closed forms)") : mismatch);
  std::ostringstream sum;
  bool first = true;
  for (const auto& [t, n] : rep.per_class) {
    sum << (first ? "" : "+") << Rational(gF(t.first, t.second)) * n;
    first = false;
  }
  if (first) sum << 0;
  log.add(rep.identity_holds() && rep.inconsistencies.empty(), cat(at, "f_F = sum g n"),
          cat(sum.str(), " = ", rep.identity_sum, ", f_F=", rep.total_csls));
}

void check_splitting(CheckLog& log, const SplittingReport& rep, const CslCatalog& p_odd, const CslCatalog& p_even) {
  const std::string at = cat("Sigma_F=", rep.sigma, ": ");
  log.add(rep.ok(), cat(at, "F-classes split into P-classes as tabulated"),
          rep.ok() ? cat(rep.classes.size(), " F-classes, ", rep.brute_odd, "+", rep.brute_even, " P-classes")
                   : rep.failures.front());
  log.add(Int(p_odd.csls.size()) == rep.predicted_p_csls_odd,
          cat("Sigma_P=", p_odd.sigma, ": distinct Z4 CSLs = sum |G_P|/|CH_P| over P-classes"),
          cat(p_odd.csls.size(), " distinct, predicted ", rep.predicted_p_csls_odd, " (", p_odd.rotation_cosets,
              " rotation cosets)"));
  log.add(Int(p_even.rotation_cosets) == rep.predicted_p_csls_even,
          cat("Sigma_P=", p_even.sigma, ": P rotation cosets = sum |G_P|/|CH_P| over P-classes"),
          cat(p_even.rotation_cosets, " vs ", rep.predicted_p_csls_even, " (", p_even.csls.size(), " distinct CSLs)"));
}

void check_split_examples(CheckLog& log) {
  struct Row {
    const char* name;
    SmallQuat p, q;
    std::size_t parts, odd;
  };
  // odd = number of P-classes keeping Sigma_P = Sigma_F
  const Row rows[] = {{"identity class", {1, 0, 0, 0}, {1, 0, 0, 0}, 2, 1},
                      {"(T1,T1)", {0, 1, 1, 1}, {0, 1, 1, 1}, 2, 1},
                      {"(T3,T3)", {2, 1, 0, 0}, {2, 1, 0, 0}, 5, 2},
                      {"(T0,T2)", {1, 0, 0, 0}, {2, 1, 1, 1}, 3, 0}};
  for (const auto& r : rows) {
    const auto parts = f_class_to_p_classes(r.p, r.q);
    const Int sf = lcm_val(sigma_of(prim(r.p)).sigma, sigma_of(prim(r.q)).sigma);
    std::size_t odd = 0;
    bool admissible = true;
    for (const auto& s : parts) {
      if (!s.sigma_p) admissible = false;
      else if (*s.sigma_p == sf) ++odd;
    }
    const bool ok = parts.size() == r.parts && (!admissible || odd == r.odd);
    log.add(ok, cat("P double cosets in the ", r.name, " F-class"),
            admissible ? cat(parts.size(), " (", r.parts, "), Sigma_P=Sigma_F in ", odd, " (", r.odd, ")")
                       : cat(parts.size(), " (", r.parts, ")"));
  }
}

void check_cubic_sigma(CheckLog& log, std::int64_t max_normsq) {
  std::size_t n = 0;
  std::string bad;
  for (std::int64_t norm = 1; norm <= max_normsq; ++norm)
    for (const auto& q : primitive_small_quats(norm)) {
      ++n;
      const Int s = csl3_sigma(prim(q));
      if (s != odd_part(Int(norm)) && bad.empty()) bad = cat(to_string(to_int_quat(q)), " gives ", s);
    }
  log.add(bad.empty(), cat("3D Sigma = odd part of |q|^2 for |q|^2 <= ", max_normsq),
          bad.empty() ? cat(n, " quaternions") : bad);
}

void check_cubic_counts(CheckLog& log, std::int64_t max_sigma) {
  std::string bad;
  for (std::int64_t s = 1; s <= max_sigma; s += 2) {
    const auto n = count_csl3(s);
    if (Int(n) != f3(s)) bad += cat(bad.empty() ? "" : ", ", "Sigma=", s, ": ", n, " vs ", f3(s));
  }
  log.add(bad.empty(), cat("3D CSL counts = f(Sigma) for Sigma <= ", max_sigma), bad);
}

void check_cubic_classes(CheckLog& log, const std::vector<std::int64_t>& sigmas) {
  for (auto s : sigmas) {
    const auto classes = classify3(s);
    const auto fs = factorize(s);
    std::map<ClassLabel, std::size_t> got;
    bool g_ok = true;
    for (const auto& c : classes) {
      ++got[c.label];
      g_ok = g_ok && c.csls == static_cast<std::size_t>(g3(c.label)) && c.orbit == 48 * c.csls;
    }
    std::string bad;
    std::ostringstream summary;
    for (auto l : kAllLabels) {
      const Rational want = n3(l, fs);
      const std::size_t have = got.count(l) ? got[l] : 0;
      if (have) summary << (summary.tellp() > 0 ? " " : "") << to_string(l) << ':' << have;
      if (want != Rational(have)) bad += cat(bad.empty() ? "" : ", ", to_string(l), " table ", want, " brute ", have);
    }
    log.add(bad.empty() && g_ok, cat("3D classes at Sigma=", s), bad.empty() ? summary.str() : bad);
  }
}

void check_round_trip(CheckLog& log, std::int64_t max_normsq) {
  const auto pairs = admissible_pairs_up_to(max_normsq);
  std::string bad;
  for (const auto& x : pairs) {
    const auto p = prim(x.p), q = prim(x.q);
    const auto [rp, rq] = recover_pair(build_rotation(p, q));
    const bool same = (rp == p && rq == q) || (rp == -p && rq == -q);
    if (!same && bad.empty()) bad = cat(to_string(x), " recovered as ", to_string(rp.quat()), ", ", to_string(rq.quat()));
  }
  log.add(bad.empty() && !pairs.empty(), cat("recover_pair(build_rotation(p,q)) = +-(p,q) for |p|^2, |q|^2 <= ", max_normsq),
          bad.empty() ? cat(pairs.size(), " pairs") : bad);
}

} // namespace csl4::cli
