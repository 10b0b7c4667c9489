#include "csl4/quat.hpp"

#include <sstream>

namespace csl4 {

Int IntQuat::content() const {
  Int g = gcd_val(w, x);
  g = gcd_val(g, y);
  return gcd_val(g, z);
}

std::strong_ordering operator<=>(const IntQuat& a, const IntQuat& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (a[i] > b[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const IntQuat& q) {
  return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

std::string to_string(const IntQuat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

PrimitiveQuat::PrimitiveQuat(IntQuat q) : q_(std::move(q)) {
  if (q_.is_zero()) throw NotPrimitive("zero quaternion is not primitive");
  if (q_.content() != 1) throw NotPrimitive("quaternion " + to_string(q_) + " is not primitive");
}

IntQuat mul(const IntQuat& p, const IntQuat& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z, p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x, p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

IntQuat conj(const IntQuat& q) { return {q.w, -q.x, -q.y, -q.z}; }

PrimitiveQuat conj(const PrimitiveQuat& q) { return PrimitiveQuat(conj(q.quat()), PrimitiveQuat::Trusted{}); }

Int inner(const IntQuat& p, const IntQuat& q) { return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z; }

std::pair<PrimitiveQuat, Int> make_primitive(const IntQuat& q) {
  if (q.is_zero()) throw std::invalid_argument("make_primitive: zero quaternion");
  Int c = q.content();
  if (c == 1) return {PrimitiveQuat(q, PrimitiveQuat::Trusted{}), c};
  return {PrimitiveQuat(IntQuat{q.w / c, q.x / c, q.y / c, q.z / c}, PrimitiveQuat::Trusted{}), c};
}

SigmaDecomp sigma_of(const PrimitiveQuat& q) {
  SigmaDecomp s;
  s.normsq = q.norm2();
  s.ell = valuation2(s.normsq);
  // A sum of four squares with coprime entries is never divisible by 8.
  if (s.ell > 2) throw std::logic_error("sigma_of: 2-adic valuation > 2 for primitive quaternion");
  s.sigma = s.normsq >> s.ell;
  return s;
}

bool is_admissible(const IntQuat& p, const IntQuat& q) { return is_square(p.norm2() * q.norm2()); }

IntQuat canonical_sign(const IntQuat& q) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (q[i] > 0) return q;
    if (q[i] < 0) return -q;
  }
  return q;
}

PrimitiveQuat canonical_sign(const PrimitiveQuat& q) {
  return PrimitiveQuat(canonical_sign(q.quat()), PrimitiveQuat::Trusted{});
}

IntQuat parse_quat(const std::string& text) {
  IntQuat q;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t end = text.find(',', pos);
    if ((i < 3) != (end != std::string::npos)) throw std::invalid_argument("expected four comma-separated integers: '" + text + "'");
    std::string tok = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty coefficient in '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    std::size_t digits = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (digits == tok.size() || tok.find_first_not_of("0123456789", digits) != std::string::npos)
      throw std::invalid_argument("bad integer '" + tok + "' in '" + text + "'");
    q[i] = Int(tok[0] == '+' ? tok.substr(1) : tok);
    pos = end + 1;
  }
  return q;
}

std::size_t QuatHash::operator()(const IntQuat& q) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t v = boost::multiprecision::hash_value(q[i]);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace csl4
