#include "csl4/counting.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace csl4 {

unsigned FactoredSigma::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

FactoredSigma factorize(const Int& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  FactoredSigma f{n, {}};
  Int m = n;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) f.factors.emplace_back(p, e);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

namespace {

Int ipow(const Int& b, unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// 2^e for any integer e, exactly.
Rational pow2(long e) {
  Rational r = 1;
  const Rational b = e >= 0 ? Rational(2) : Rational(1, 2);
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

Rational pow4(long e) { return pow2(2 * e); }

int mod_of(const Int& p, int m) { return static_cast<int>(p % m); }

bool is_square(const FactoredSigma& s) {
  return std::all_of(s.factors.begin(), s.factors.end(), [](const auto& f) { return f.second % 2 == 0; });
}

template <class Pred> bool all_primes(const FactoredSigma& s, Pred pred) {
  return std::all_of(s.factors.begin(), s.factors.end(), [&](const auto& f) { return pred(f.first); });
}

/// Sigma = 3 a^2; returns the factorization of a.
std::optional<FactoredSigma> three_times_square(const FactoredSigma& s) {
  if (s.exponent_of(3) % 2 != 1) return std::nullopt;
  FactoredSigma a{1, {}};
  for (const auto& [p, e] : s.factors) {
    unsigned ea = p == 3 ? e - 1 : e;
    if (ea % 2) return std::nullopt;
    if (ea) {
      a.factors.emplace_back(p, ea / 2);
      a.value *= ipow(p, ea / 2);
    }
  }
  return a;
}

// Named congruence predicates for the table conditions.
bool one_mod_4(const Int& p) { return mod_of(p, 4) == 1; }
bool one_mod_6(const Int& p) { return mod_of(p, 6) == 1; }
bool one_or_three_mod_8(const Int& p) {
  int r = mod_of(p, 8);
  return r == 1 || r == 3;
}

Rational product_of_exponents(const std::vector<unsigned>& ts) {
  Rational r = 1;
  for (unsigned t : ts) r *= t;
  return r;
}

// ---- 3D class-count rules ----

Rational n3_closed(ClassLabel l, const FactoredSigma& s) {
  const auto k = static_cast<long>(s.prime_count());
  switch (l) {
  case ClassLabel::T0:
    return s.value == 1 ? 1 : 0;
  case ClassLabel::T1:
    return s.value == 3 ? 1 : 0;
  case ClassLabel::T2: {
    if (s.value <= 3 || s.exponent_of(3) > 1) return 0;
    if (!all_primes(s, [](const Int& p) { return p == 3 || one_mod_6(p); })) return 0;
    long k6 = std::count_if(s.factors.begin(), s.factors.end(), [](const auto& f) { return one_mod_6(f.first); });
    return pow2(k6 - 1);
  }
  case ClassLabel::T3:
    if (s.value <= 1 || !all_primes(s, one_mod_4)) return 0;
    return pow2(k - 1);
  case ClassLabel::T4:
    if (s.value <= 3 || !all_primes(s, one_or_three_mod_8)) return 0;
    return pow2(k - 1);
  case ClassLabel::T5:
    break;
  }
  throw std::logic_error("n3_closed: general type has no closed rule");
}

// ---- D4 class-count closed forms, one function per row ----

Rational nF00(const FactoredSigma& s) { return s.value == 1 ? 1 : 0; }

Rational nF02(const FactoredSigma& s) {
  if (s.value == 1 || !is_square(s) || !all_primes(s, one_mod_6)) return 0;
  return pow2(static_cast<long>(s.prime_count()) - 1);
}

Rational nF03(const FactoredSigma& s) {
  if (s.value == 1 || !is_square(s) || !all_primes(s, one_mod_4)) return 0;
  return pow2(static_cast<long>(s.prime_count()) - 1);
}

Rational nF04(const FactoredSigma& s) {
  if (s.value == 1 || !is_square(s) || !all_primes(s, one_or_three_mod_8)) return 0;
  return pow2(static_cast<long>(s.prime_count()) - 1);
}

Rational nF11(const FactoredSigma& s) { return s.value == 3 ? 1 : 0; }

Rational nF12(const FactoredSigma& s) {
  auto a = three_times_square(s);
  if (!a || a->value == 1 || !all_primes(*a, one_mod_6)) return 0;
  return pow2(static_cast<long>(a->prime_count()) - 1);
}

// k counts the prime factors of Sigma_F itself (3 included).
Rational nF14(const FactoredSigma& s) {
  auto a = three_times_square(s);
  if (!a || a->value == 1 || !all_primes(s, one_or_three_mod_8)) return 0;
  return pow2(static_cast<long>(s.prime_count()) - 1);
}

Rational nF22(const FactoredSigma& s) {
  if (s.exponent_of(3) > 1) return 0;
  std::vector<unsigned> ts;
  bool square = true;
  for (const auto& [p, e] : s.factors) {
    if (p == 3) continue;
    if (!one_mod_6(p)) return 0;
    ts.push_back(e);
    square = square && e % 2 == 0;
  }
  if (ts.empty()) return 0;
  const auto k = static_cast<long>(ts.size());
  return 2 * pow4(k - 1) * product_of_exponents(ts) - (square ? pow2(k) : Rational(0));
}

Rational nF23(const FactoredSigma& s) {
  long k1 = 0, k2 = 0;
  std::vector<unsigned> ts;
  for (const auto& [p, e] : s.factors) {
    const bool m4 = one_mod_4(p), m6 = one_mod_6(p);
    if (m4 && m6) {
      ts.push_back(e);
    } else if (m4 || m6) {
      if (e % 2) return 0;
      (m4 ? k1 : k2) += 1;
    } else {
      return 0;
    }
  }
  const auto k3 = static_cast<long>(ts.size());
  if (k1 + k3 == 0 || k2 + k3 == 0) return 0;
  const bool all_even = std::all_of(ts.begin(), ts.end(), [](unsigned t) { return t % 2 == 0; });
  const int delta1 = all_even && k1 == 0;
  const int delta2 = all_even && k2 == 0;
  return pow2(k1 + k2) * pow4(k3 - 1) * product_of_exponents(ts) - delta1 * pow2(k2 + k3 - 2) -
         delta2 * pow2(k1 + k3 - 2);
}

// The factor 3^s enters k3 only for s > 1, as the condition column reads.
Rational nF24(const FactoredSigma& s) {
  long k1 = 0, k2 = 0;
  std::vector<unsigned> ts;
  const unsigned s3 = s.exponent_of(3);
  bool has6 = false, has8 = s3 > 0;
  for (const auto& [p, e] : s.factors) {
    if (p == 3) continue;
    const bool m6 = one_mod_6(p), m8 = one_or_three_mod_8(p);
    if (m6 && m8) {
      ts.push_back(e);
      has6 = has8 = true;
    } else if (m6 || m8) {
      if (e % 2) return 0;
      (m6 ? k1 : k2) += 1;
      (m6 ? has6 : has8) = true;
    } else {
      return 0;
    }
  }
  if (!has6 || !has8) return 0;
  if (s3 > 1) ts.push_back(s3);
  const auto k3 = static_cast<long>(ts.size());
  return pow2(k1 + k2) * pow4(k3 - 1) * product_of_exponents(ts) - (nF02(s) + nF12(s) + nF04(s) + nF14(s)) / 2;
}

Rational nF33(const FactoredSigma& s) {
  if (s.value == 1 || !all_primes(s, one_mod_4)) return 0;
  std::vector<unsigned> ts;
  for (const auto& f : s.factors) ts.push_back(f.second);
  const auto k = static_cast<long>(ts.size());
  return pow4(k - 1) * product_of_exponents(ts) - (is_square(s) ? pow2(k - 1) : Rational(0));
}

// Printed under the label n_F24 with that row's subtraction terms.
Rational nF34(const FactoredSigma& s) {
  long k1 = 0, k2 = 0;
  std::vector<unsigned> ts;
  for (const auto& [p, e] : s.factors) {
    const int r = mod_of(p, 8);
    if (r == 1) {
      ts.push_back(e);
    } else if (r == 5 || r == 3) {
      if (e % 2) return 0;
      (r == 5 ? k1 : k2) += 1;
    } else {
      return 0;
    }
  }
  const auto k3 = static_cast<long>(ts.size());
  if (k1 + k3 == 0 || k2 + k3 == 0) return 0;
  return pow2(k1 + k2) * pow4(k3 - 1) * product_of_exponents(ts) - (nF02(s) + nF12(s) + nF04(s) + nF14(s)) / 2;
}

Rational nF44(const FactoredSigma& s) {
  if (s.value <= 3 || !all_primes(s, one_or_three_mod_8)) return 0;
  std::vector<unsigned> ts;
  for (const auto& f : s.factors) ts.push_back(f.second);
  const auto k = static_cast<long>(ts.size());
  const bool delta = is_square(s) || three_times_square(s).has_value();
  return pow4(k - 1) * product_of_exponents(ts) - (delta ? pow2(k - 1) : Rational(0));
}

std::pair<int, int> ordered(ClassLabel i, ClassLabel j) {
  int a = index_of(i), b = index_of(j);
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

bool split_type(int a, int b) { return (a == 2 || a == 5) && (b == 2 || b == 5); }

void check_odd(const FactoredSigma& s, const char* who) {
  if (!s.is_odd()) throw std::invalid_argument(std::string(who) + ": sigma must be odd");
}

} // namespace

Int f3(const Int& n) {
  if (n < 1) throw std::invalid_argument("f3: argument must be positive");
  if (n % 2 == 0) return 0;
  Int r = 1;
  for (const auto& [p, e] : factorize(n).factors) r *= (p + 1) * ipow(p, e - 1);
  return r;
}

Int fF(const Int& n) {
  if (n < 1) throw std::invalid_argument("fF: argument must be positive");
  if (n % 2 == 0) return 0;
  Int r = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    Int t = (ipow(p, e + 1) + ipow(p, e - 1) - 2) / (p - 1);
    r *= (p + 1) * ipow(p, e - 1) * t;
  }
  return r;
}

Int gauss_floor(const Rational& x) {
  Int q = numerator(x) / denominator(x);
  if (q * denominator(x) > numerator(x)) q -= 1;
  return q;
}

int g3(ClassLabel l) {
  static constexpr std::array<int, 6> g{1, 4, 8, 6, 12, 24};
  return g[static_cast<std::size_t>(index_of(l))];
}

int gF(ClassLabel i, ClassLabel j) {
  auto [a, b] = ordered(i, j);
  int g = g3(kAllLabels[a]) * g3(kAllLabels[b]);
  return split_type(a, b) ? g / 2 : g;
}

Rational n3(ClassLabel l, const FactoredSigma& s) {
  if (!s.is_odd()) return 0;
  if (l != ClassLabel::T5) return n3_closed(l, s);
  Rational rest = Rational(f3(s.value));
  for (int i = 0; i < 5; ++i) rest -= g3(kAllLabels[i]) * n3_closed(kAllLabels[i], s);
  return rest / g3(ClassLabel::T5);
}

bool has_closed_form(ClassLabel i, ClassLabel j) {
  auto [a, b] = ordered(i, j);
  if (b == 5) return false;
  return !((a == 0 && b == 1) || (a == 1 && b == 3));
}

Rational nF(ClassLabel i, ClassLabel j, const FactoredSigma& s) {
  check_odd(s, "nF");
  auto [a, b] = ordered(i, j);
  switch (a * 10 + b) {
  case 0: return nF00(s);
  case 1: return 0;
  case 2: return nF02(s);
  case 3: return nF03(s);
  case 4: return nF04(s);
  case 11: return nF11(s);
  case 12: return nF12(s);
  case 13: return 0;
  case 14: return nF14(s);
  case 22: return nF22(s);
  case 23: return nF23(s);
  case 24: return nF24(s);
  case 33: return nF33(s);
  case 34: return nF34(s);
  case 44: return nF44(s);
  default: break;
  }
  throw std::invalid_argument("nF: no closed form for a general type; use nF_general");
}

std::vector<std::pair<Int, Int>> admissible_index_pairs(const FactoredSigma& s) {
  // Per prime p^e: exponent pairs (x, y) with max(x, y) = e and x = y mod 2.
  std::vector<std::pair<Int, Int>> out{{1, 1}};
  for (const auto& [p, e] : s.factors) {
    std::vector<std::pair<Int, Int>> next;
    for (const auto& [a, b] : out)
      for (unsigned x = 0; x <= e; ++x)
        for (unsigned y = 0; y <= e; ++y)
          if (std::max(x, y) == e && (x + y) % 2 == 0) next.emplace_back(a * ipow(p, x), b * ipow(p, y));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational mF(ClassLabel i, const FactoredSigma& s) {
  check_odd(s, "mF");
  Rational m = 0;
  for (const auto& [a, b] : admissible_index_pairs(s)) m += g3(i) * n3(i, factorize(a)) * Rational(f3(b));
  return m;
}

Rational mF2_closed(const FactoredSigma& s) {
  check_odd(s, "mF2_closed");
  const unsigned r = s.exponent_of(3);
  Rational a = 1, b = 1, tail = 1;
  bool any_p = false, any_odd = false;
  for (const auto& [p, e] : s.factors) {
    if (p == 3) continue;
    if (one_mod_6(p)) {
      any_p = true;
      any_odd = any_odd || e % 2 == 1;
      Rational pe1 = Rational(ipow(p, e - 1));
      a *= Rational(e + 1) * Rational(p + 1) * pe1 + 2 * (pe1 - 1) / Rational(p - 1);
      b *= Rational(p + 1) * pe1;
    } else {
      if (e % 2) return 0;
      tail *= Rational(p + 1) * Rational(ipow(p, e - 1));
    }
  }
  if (!any_p) return 0;
  const Rational bracket = Rational(gauss_floor(r == 0 ? Rational(4, 3) : Rational(4 * ipow(3, r - 1))));
  const int delta_f2 = any_odd ? 0 : 1;
  return 4 * bracket * (a - delta_f2 * b) * tail;
}

Rational nF_convolution(ClassLabel i, ClassLabel j, const FactoredSigma& s) {
  check_odd(s, "nF_convolution");
  Rational n = 0;
  for (const auto& [a, b] : admissible_index_pairs(s)) n += n3(i, factorize(a)) * n3(j, factorize(b));
  auto [x, y] = ordered(i, j);
  return split_type(x, y) ? 2 * n : n;
}

Rational nF_general(ClassLabel i, const FactoredSigma& s) {
  check_odd(s, "nF_general");
  const ClassLabel g = ClassLabel::T5;
  if (i == g) {
    Rational rest = Rational(fF(s.value));
    for (auto x : kAllLabels)
      for (auto y : kAllLabels)
        if (!(x == g && y == g)) rest -= gF(x, y) * nF_any(x, y, s);
    return rest / gF(g, g);
  }
  Rational m = i == ClassLabel::T2 ? mF2_closed(s) : mF(i, s);
  for (int j = 0; j < 5; ++j) m -= gF(i, kAllLabels[j]) * nF(i, kAllLabels[j], s);
  return m / gF(i, g);
}

Rational nF_any(ClassLabel i, ClassLabel j, const FactoredSigma& s) {
  if (index_of(i) < 5 && index_of(j) < 5) return nF(i, j, s);
  if (i == ClassLabel::T5) return nF_general(j, s);
  return nF_general(i, s);
}

CountReport count_report(const Int& sigma) {
  CountReport rep;
  rep.sigma = factorize(sigma);
  rep.total_csls = fF(sigma);
  if (!rep.sigma.is_odd()) return rep;
  for (auto x : kAllLabels)
    for (auto y : kAllLabels) {
      Rational n = nF_any(x, y, rep.sigma);
      if (n == 0) continue;
      rep.per_class[{x, y}] = n;
      rep.identity_sum += gF(x, y) * n;
      if (denominator(n) != 1 || n < 0) {
        std::ostringstream os;
        os << "n(" << to_string(x) << ',' << to_string(y) << ") = " << n << " at sigma " << sigma;
        rep.inconsistencies.push_back(os.str());
      }
    }
  if (!rep.identity_holds()) {
    std::ostringstream os;
    os << "sum of g*n = " << rep.identity_sum << " differs from fF = " << rep.total_csls;
    rep.inconsistencies.push_back(os.str());
  }
  return rep;
}

std::pair<int, int> split_counts(ClassLabel i, ClassLabel j) {
  auto [a, b] = ordered(i, j);
  if (b == 5) return a >= 3 ? std::pair{3, 6} : std::pair{1, 2};
  if (a >= 3) return {2, 3};
  if (a == 2 || b == 2) return {1, 2};
  return {1, 1};
}

int split_total(ClassLabel i, ClassLabel j) {
  auto [odd, even] = split_counts(i, j);
  return odd + even;
}

namespace {

struct PClassSpec {
  const char* shape;
  int a, b;
  bool doubled;
  int multiplier;
};

// One entry per row of the P-class table; shapes with the second quaternion written in coordinates.
constexpr PClassSpec kPClassRows[] = {
    {"((1,0,0,0),(1,0,0,0))", 0, 0, false, 1},
    {"((1,0,0,0),(1,1,1,1))", 0, 0, true, 1},
    {"((1,0,0,0),(m,n,n,n))", 0, 2, false, 1},
    {"((1,0,0,0),(m,n,n,n))", 0, 2, true, 2},
    {"((1,0,0,0),(m,n,0,0))", 0, 3, false, 1},
    {"((1,0,0,0),(m-n,m+n,m-n,m+n))", 0, 3, true, 1},
    {"((1,0,0,0),(m,n,n,0))", 0, 4, false, 1},
    {"((1,0,0,0),(m-2n,m+2n,m,m))", 0, 4, true, 1},
    {"((1,0,0,0),(m,n,p,q))", 0, 5, false, 1},
    {"((1,0,0,0),(m,n,p,q))", 0, 5, true, 2},
    {"((0,1,1,1),(0,1,1,1))", 1, 1, false, 1},
    {"((0,1,1,1),(3,1,1,1))", 1, 1, true, 1},
    {"((0,1,1,1),(m,n,n,n))", 1, 2, false, 1},
    {"((0,1,1,1),(m,n,n,n))", 1, 2, true, 2},
    {"((0,1,1,1),(m,n,n,0))", 1, 4, false, 1},
    {"((0,1,1,1),(m-2n,m+2n,m,m))", 1, 4, true, 1},
    {"((0,1,1,1),(m,n,p,q))", 1, 5, false, 1},
    {"((0,1,1,1),(m,n,p,q))", 1, 5, true, 2},
    {"((m,n,n,n),(m',n',n',n'))", 2, 2, false, 1},
    {"((m,n,n,n),(m',n',n',n'))", 2, 2, true, 2},
    {"((m,n,n,n),(m',n',0,0))", 2, 3, false, 1},
    {"((m,n,n,n),(m',n',0,0))", 2, 3, true, 2},
    {"((m,n,n,n),(m',n',n',0))", 2, 4, false, 1},
    {"((m,n,n,n),(m',n',n',0))", 2, 4, true, 2},
    {"((m,n,n,n),(m',n',p',q'))", 2, 5, false, 1},
    {"((m,n,n,n),(m',n',p',q'))", 2, 5, true, 2},
    {"((m,n,0,0),(m',n',0,0))", 3, 3, false, 1},
    {"((m,n,0,0),(m',0,n',0))", 3, 3, false, 1},
    {"((m,n,0,0),(m'-n',m'+n',m'-n',m'+n'))", 3, 3, true, 1},
    {"((m,n,0,0),(m'-n',m'+n',m'+n',m'-n'))", 3, 3, true, 1},
    {"((m,n,0,0),(m'-n',m'-n',m'+n',m'+n'))", 3, 3, true, 1},
    {"((m,n,0,0),(m',n',n',0))", 3, 4, false, 1},
    {"((m,n,0,0),(m',0,n',n'))", 3, 4, false, 1},
    {"((m,n,0,0),(m'-2n',m'+2n',m',m'))", 3, 4, true, 1},
    {"((m,n,0,0),(-m'-2n',m',m'-2n',m'))", 3, 4, true, 1},
    {"((m,n,0,0),(m'-2n',m',m'+2n',m'))", 3, 4, true, 1},
    {"((m,n,0,0),(m',n',p',q'))", 3, 5, false, 3},
    {"((m,n,0,0),(m',n',p',q'))", 3, 5, true, 6},
    {"((m,n,n,0),(m',n',n',0))", 4, 4, false, 1},
    {"((m,n,n,0),(m',0,n',n'))", 4, 4, false, 1},
    {"((m,n,n,0),(m'-2n',m'+2n',m',m'))", 4, 4, true, 1},
    {"((m,n,n,0),(-m'-2n',m',m'-2n',m'))", 4, 4, true, 1},
    {"((m,n,n,0),(m'-2n',m',m'+2n',m'))", 4, 4, true, 1},
    {"((m,n,n,0),(m',n',p',q'))", 4, 5, false, 3},
    {"((m,n,n,0),(m',n',p',q'))", 4, 5, true, 6},
    {"((m,n,p,q),(m',n',p',q'))", 5, 5, false, 3},
    {"((m,n,p,q),(m',n',p',q'))", 5, 5, true, 6},
};

} // namespace

std::vector<PClassRow> p_class_counts(const Int& sigma_p) {
  if (sigma_p < 1) throw std::invalid_argument("p_class_counts: sigma_P must be positive");
  const bool doubled = sigma_p % 2 == 0;
  const Int sf = doubled ? Int(sigma_p / 2) : sigma_p;
  std::vector<PClassRow> rows;
  if (sf % 2 == 0) return rows;
  const auto s = factorize(sf);
  for (const auto& t : kPClassRows) {
    if (t.doubled != doubled) continue;
    const TypePair type{kAllLabels[t.a], kAllLabels[t.b]};
    Rational c = t.multiplier * nF_any(type.first, type.second, s);
    if (c != 0) rows.push_back({t.shape, type, t.doubled, t.multiplier, c});
  }
  return rows;
}

Rational p_class_total(const Int& sigma_p) {
  if (sigma_p < 1) throw std::invalid_argument("p_class_total: sigma_P must be positive");
  const bool doubled = sigma_p % 2 == 0;
  const Int sf = doubled ? Int(sigma_p / 2) : sigma_p;
  if (sf % 2 == 0) return 0;
  const auto s = factorize(sf);
  Rational total = 0;
  for (auto x : kAllLabels)
    for (auto y : kAllLabels) {
      auto [odd, even] = split_counts(x, y);
      total += (doubled ? even : odd) * nF_any(x, y, s);
    }
  return total;
}

} // namespace csl4
