#include "csl4/integer.hpp"

namespace csl4 {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

unsigned valuation2(Int n) {
  if (n == 0) throw std::domain_error("valuation of zero");
  unsigned v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

Int odd_part(const Int& n) {
  Int m = abs_val(n);
  if (m == 0) throw std::domain_error("odd part of zero");
  while ((m & 1) == 0) m >>= 1;
  return m;
}

std::int64_t to_i64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow();
  return x.convert_to<std::int64_t>();
}

} // namespace csl4
