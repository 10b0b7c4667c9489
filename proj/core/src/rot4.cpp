#include "csl4/rot4.hpp"

namespace csl4 {

Rot4 Rot4::reduced() const {
  Int g = gcd_val(m.content(), d);
  if (g == 1) return *this;
  return {m.divided_by(g), d / g};
}

Matrix<Rational> Rot4::entries() const {
  Matrix<Rational> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = Rational(m(i, j), d);
  return e;
}

bool Rot4::is_proper_orthogonal() const {
  if (!m.square() || d <= 0) return false;
  const std::size_t n = m.rows();
  IntMatrix g = m * m.transpose();
  const Int d2 = d * d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != (i == j ? d2 : Int(0))) return false;
  Int dn = 1;
  for (std::size_t i = 0; i < n; ++i) dn *= d;
  return det(m) == dn;
}

bool same_rotation(const Rot4& a, const Rot4& b) {
  Rot4 ra = a.reduced(), rb = b.reduced();
  return ra.d == rb.d && ra.m == rb.m;
}

void require_admissible(const IntQuat& p, const IntQuat& q) {
  Int prod = p.norm2() * q.norm2();
  if (!is_square(prod))
    throw NotAdmissible("pair " + to_string(p) + ", " + to_string(q) + " is not admissible: |p|^2|q|^2 = " +
                            prod.str() + " is not a perfect square",
                        prod);
}

Rot4 build_rotation(const PrimitiveQuat& p, const PrimitiveQuat& q) {
  require_admissible(p, q);
  const auto& u = unit_quats();
  Rot4 r{IntMatrix(4, 4), isqrt(p.norm2() * q.norm2())};
  IntQuat pu[4], uq[4];
  for (std::size_t k = 0; k < 4; ++k) {
    pu[k] = mul(p, u[k]);
    uq[k] = mul(u[k], q);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r.m(i, j) = inner(pu[j], uq[i]);
  return r;
}

Int den_P(const Rot4& r) { return r.d / gcd_val(r.m.content(), r.d); }

Int den_F(const Rot4& r) {
  Int dp = den_P(r);
  return (dp % 2 == 0) ? Int(dp / 2) : dp;
}

Int den_F_from_pair(const PrimitiveQuat& p, const PrimitiveQuat& q) {
  require_admissible(p, q);
  Int d = isqrt(p.norm2() * q.norm2());
  for (int k = 0; k < 2 && d % 2 == 0; ++k) d /= 2;
  return d;
}

Int sigma_F(const PrimitiveQuat& p, const PrimitiveQuat& q) {
  require_admissible(p, q);
  return lcm_val(sigma_of(p).sigma, sigma_of(q).sigma);
}

Int sigma_P(const PrimitiveQuat& p, const PrimitiveQuat& q) {
  Int sf = sigma_F(p, q);
  return lcm_val(sf, den_P(build_rotation(p, q)));
}

Rot4 compose(const Rot4& a, const Rot4& b) { return Rot4{a.m * b.m, a.d * b.d}.reduced(); }

Rot4 inverse(const Rot4& r) { return Rot4{r.m.transpose(), r.d}; }

const IntMatrix& bilinear_coefficients() {
  static const IntMatrix c = [] {
    const auto& u = unit_quats();
    IntMatrix out(16, 16);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b)
            out(4 * i + j, 4 * a + b) = inner(mul(u[a], u[j]), mul(u[i], u[b]));
    return out;
  }();
  return c;
}

namespace {

const Matrix<Rational>& bilinear_inverse() {
  static const Matrix<Rational> inv = rational_inverse(bilinear_coefficients());
  return inv;
}

// Clears denominators of a rational vector and divides out the content.
std::vector<Int> primitive_integer_vector(const std::vector<Rational>& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm_val(l, Int(denominator(x)));
  std::vector<Int> out;
  Int g = 0;
  for (const auto& x : v) {
    out.push_back(Int(numerator(x)) * (l / Int(denominator(x))));
    g = gcd_val(g, out.back());
  }
  if (g == 0) throw MalformedRotation("recover_pair: zero factor");
  for (auto& x : out) x /= g;
  return out;
}

} // namespace

std::pair<PrimitiveQuat, PrimitiveQuat> recover_pair(const Rot4& r) {
  if (r.m.rows() != 4 || r.m.cols() != 4) throw MalformedRotation("recover_pair: expected a 4x4 matrix");
  if (!r.is_proper_orthogonal()) throw MalformedRotation("recover_pair: matrix is not a proper rational rotation");

  const auto& inv = bilinear_inverse();
  std::vector<Rational> x(16, Rational(0));
  for (std::size_t k = 0; k < 16; ++k)
    for (std::size_t l = 0; l < 16; ++l)
      if (inv(k, l) != 0) x[k] += inv(k, l) * Rational(r.m(l / 4, l % 4));

  // x[4a+b] is proportional to p_a q_b; pick the largest entry to read both factors.
  std::size_t best = 0;
  for (std::size_t k = 1; k < 16; ++k)
    if (abs(x[k]) > abs(x[best])) best = k;
  if (x[best] == 0) throw MalformedRotation("recover_pair: vanishing product tensor");
  const std::size_t a0 = best / 4, b0 = best % 4;
  std::vector<Rational> col(4), row(4);
  for (std::size_t k = 0; k < 4; ++k) {
    col[k] = x[4 * k + b0];
    row[k] = x[4 * a0 + k];
  }
  auto pv = primitive_integer_vector(col);
  auto qv = primitive_integer_vector(row);
  IntQuat p{pv[0], pv[1], pv[2], pv[3]}, q{qv[0], qv[1], qv[2], qv[3]};

  // Rank-1 check: x[4a+b] * p_a0 q_b0 == x[best] * p_a q_b.
  const Int pq0 = p[a0] * q[b0];
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (x[4 * a + b] * Rational(pq0) != x[best] * Rational(p[a] * q[b]))
        throw MalformedRotation("recover_pair: product tensor is not rank one");
  if ((x[best] > 0) != (pq0 > 0)) q = -q;

  IntQuat pc = canonical_sign(p);
  if (pc != p) {
    p = pc;
    q = -q;
  }
  PrimitiveQuat pp(p), qq(q);
  if (!is_admissible(p, q) || !same_rotation(build_rotation(pp, qq), r))
    throw MalformedRotation("recover_pair: reconstruction does not reproduce the input");
  return {pp, qq};
}

} // namespace csl4
