#include "csl4/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace csl4 {

const char* to_string(LatticeKind k) { return k == LatticeKind::P ? "P" : "F"; }

LatticeKind parse_lattice_kind(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c == 'P') return LatticeKind::P;
    if (c == 'F') return LatticeKind::F;
  }
  throw std::invalid_argument("unknown lattice kind '" + s + "' (expected P or F)");
}

namespace {

template <class T> struct Raw {
  Matrix<T> basis;
  T den;
};

template <class T> Raw<T> canonical_t(const Matrix<T>& gens, T den) {
  Matrix<T> h;
  if (gens.cols() == gens.rows()) {
    h = hnf_columns_t(gens);
  } else {
    h = span_basis_t(gens);
    if (h.cols() != gens.rows()) throw RankDeficient("lattice generators do not have full rank");
  }
  T g = gcd_val(h.content(), den);
  if (g != T(1)) {
    h = h.divided_by(g);
    den = den / g;
  }
  return {std::move(h), std::move(den)};
}

template <class T> Raw<T> rotate_t(const Matrix<T>& m, const T& d, const Raw<T>& l) {
  return canonical_t<T>(m * l.basis, d * l.den);
}

template <class T> Raw<T> intersect_t(const Raw<T>& a, const Raw<T>& b) {
  const std::size_t n = a.basis.rows();
  const T dd = lcm_val(a.den, b.den);
  Matrix<T> a1 = (dd / a.den) * a.basis;
  Matrix<T> a2 = (dd / b.den) * b.basis;
  Matrix<T> block = hcat(a1, T(-1) * a2);
  Matrix<T> k = integer_kernel_t(block);
  if (k.cols() != n) throw std::logic_error("intersect: kernel rank differs from dimension");
  return canonical_t<T>(a1 * k.block(0, 0, n, n), dd);
}

template <class T> Raw<T> csl_t(const Raw<T>& l, const Matrix<T>& m, const T& d) {
  return intersect_t(l, rotate_t(m, d, l));
}

template <class T> Raw<T> convert_raw(const Lattice& l) { return {l.basis().convert<T>(), from_int<T>(l.den())}; }

Int diag_product(const IntMatrix& h) {
  Int p = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) p *= h(i, i);
  return abs_val(p);
}

Int power(const Int& b, std::size_t e) {
  Int r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

} // namespace

Lattice make_canonical_lattice(IntMatrix hnf, Int den) { return Lattice(std::move(hnf), std::move(den), Lattice::Canonical{}); }

Lattice::Lattice(IntMatrix generators, Int den) {
  if (den <= 0) throw std::invalid_argument("lattice denominator must be positive");
  if (generators.rows() == 0) throw DimensionError("lattice of dimension 0");
  auto c = canonical_t<Int>(generators, den);
  basis_ = std::move(c.basis);
  den_ = std::move(c.den);
}

Rational Lattice::covolume() const { return Rational(diag_product(basis_), power(den_, dim())); }

std::string Lattice::key() const {
  std::ostringstream os;
  os << dim() << '|' << den_ << '|';
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) os << (i || j ? "," : "") << basis_(i, j);
  return os.str();
}

bool Lattice::contains_vector(const std::vector<Int>& v, const Int& v_den) const {
  if (v.size() != dim()) throw DimensionError("contains_vector: dimension mismatch");
  std::vector<Int> rhs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = v[i] * den_;
  return solve_lower_integral(v_den * basis_, rhs).has_value();
}

Lattice standard_lattice(LatticeKind kind, std::size_t dim) {
  if (kind == LatticeKind::P) return Lattice(IntMatrix::identity(dim));
  if (dim < 2) throw DimensionError("D_n needs n >= 2");
  IntMatrix g(dim, dim);
  g(0, 0) = 1;
  g(1, 0) = 1;
  g(0, 1) = 1;
  g(1, 1) = -1;
  for (std::size_t j = 2; j < dim; ++j) {
    g(j - 1, j) = 1;
    g(j, j) = 1;
  }
  return Lattice(g);
}

Lattice rotate(const IntMatrix& m, const Int& d, const Lattice& l) {
  auto r = rotate_t<Int>(m, d, convert_raw<Int>(l));
  return make_canonical_lattice(std::move(r.basis), std::move(r.den));
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw DimensionError("intersect: dimension mismatch");
  try {
    auto r = intersect_t(convert_raw<Checked64>(a), convert_raw<Checked64>(b));
    return make_canonical_lattice(r.basis.convert<Int>(), to_int(r.den));
  } catch (const ArithmeticOverflow&) {
    auto r = intersect_t(convert_raw<Int>(a), convert_raw<Int>(b));
    return make_canonical_lattice(std::move(r.basis), std::move(r.den));
  }
}

bool contains(const Lattice& sup, const Lattice& sub) {
  if (sup.dim() != sub.dim()) throw DimensionError("contains: dimension mismatch");
  const IntMatrix a = sub.den() * sup.basis();
  for (std::size_t j = 0; j < sub.basis().cols(); ++j) {
    std::vector<Int> rhs(sup.dim());
    for (std::size_t i = 0; i < sup.dim(); ++i) rhs[i] = sup.den() * sub.basis()(i, j);
    if (!solve_lower_integral(a, rhs)) return false;
  }
  return true;
}

Int index_in(const Lattice& sub, const Lattice& sup) {
  if (!contains(sup, sub)) throw NotSublattice("index_in: first lattice is not contained in the second");
  const std::size_t n = sup.dim();
  Int num = diag_product(sub.basis()) * power(sup.den(), n);
  Int den = diag_product(sup.basis()) * power(sub.den(), n);
  if (num % den != 0) throw std::logic_error("index_in: non-integral index");
  return num / den;
}

Lattice csl(const Lattice& l, const IntMatrix& m, const Int& d) {
  if (m.rows() != l.dim() || !m.square()) throw DimensionError("csl: rotation dimension mismatch");
  try {
    auto r = csl_t(convert_raw<Checked64>(l), m.convert<Checked64>(), from_int<Checked64>(d));
    return make_canonical_lattice(r.basis.convert<Int>(), to_int(r.den));
  } catch (const ArithmeticOverflow&) {
    auto r = csl_t(convert_raw<Int>(l), m, d);
    return make_canonical_lattice(std::move(r.basis), std::move(r.den));
  }
}

Lattice csl(LatticeKind kind, const Rot4& r) { return csl(standard_lattice(kind, r.m.rows()), r.m, r.d); }

Int brute_sigma(const Lattice& l, const IntMatrix& m, const Int& d) { return index_in(csl(l, m, d), l); }

Int brute_sigma(LatticeKind kind, const Rot4& r) { return brute_sigma(standard_lattice(kind, r.m.rows()), r.m, r.d); }

Int brute_den(const Lattice& l, const IntMatrix& m, const Int& d) {
  auto inv = rational_inverse(l.basis());
  IntMatrix mb = m * l.basis();
  Int k = 1;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t < l.dim(); ++t) s += inv(i, t) * Rational(mb(t, j));
      s /= Rational(d);
      k = lcm_val(k, Int(denominator(s)));
    }
  return k;
}

Int brute_den(LatticeKind kind, const Rot4& r) { return brute_den(standard_lattice(kind, r.m.rows()), r.m, r.d); }

std::vector<Int> quotient_invariants(const Lattice& l, const Lattice& sub) {
  if (!contains(l, sub)) throw NotSublattice("quotient_invariants: not a sublattice");
  auto inv = rational_inverse(l.basis());
  const std::size_t n = l.dim();
  IntMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t < n; ++t) s += inv(i, t) * Rational(sub.basis()(t, j));
      s *= Rational(l.den(), sub.den());
      x(i, j) = numerator(s);
    }
  return elementary_divisors(x);
}

std::vector<Int> quotient_invariants(LatticeKind kind, const Rot4& r) {
  auto l = standard_lattice(kind, r.m.rows());
  return quotient_invariants(l, csl(l, r.m, r.d));
}

} // namespace csl4
