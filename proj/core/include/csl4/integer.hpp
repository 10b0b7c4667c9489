#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace csl4 {

/// Exact integer used throughout the public API.
using Int = boost::multiprecision::cpp_int;

/// Normalized exact rational (gcd(num, den) = 1, den > 0).
using Rational = boost::multiprecision::cpp_rational;

class ArithmeticOverflow : public std::overflow_error {
public:
  ArithmeticOverflow() : std::overflow_error("int64 overflow in fast path") {}
  explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

/// int64 that throws instead of wrapping. Used by hot loops that retry with
/// Int when an intermediate leaves the 64-bit range.
class Checked64 {
public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {} // NOLINT: implicit by design of the numeric templates

  [[nodiscard]] constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1)
      throw ArithmeticOverflow();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow();
    return -v_;
  }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }
  Checked64& operator/=(Checked64 o) { return *this = *this / o; }

  friend constexpr auto operator<=>(Checked64, Checked64) = default;
  friend constexpr bool operator==(Checked64, Checked64) = default;

private:
  std::int64_t v_ = 0;
};

// Small generic helpers over Int and Checked64.

template <class T> T abs_val(const T& x) { return x < T(0) ? T(-x) : x; }

template <class T> int sign_of(const T& x) { return x < T(0) ? -1 : (x == T(0) ? 0 : 1); }

/// Floor division (rounds toward negative infinity); b != 0.
template <class T> T floor_div(const T& a, const T& b) {
  T q = a / b;
  T r = a - q * b;
  if (r != T(0) && ((r < T(0)) != (b < T(0)))) q = q - T(1);
  return q;
}

/// Non-negative gcd; gcd(0, 0) = 0.
template <class T> T gcd_val(T a, T b) {
  a = abs_val(a);
  b = abs_val(b);
  while (b != T(0)) {
    T r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class T> T lcm_val(const T& a, const T& b) {
  if (a == T(0) || b == T(0)) return T(0);
  return abs_val(a / gcd_val(a, b) * b);
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
template <class T> std::tuple<T, T, T> ext_gcd(const T& a, const T& b) {
  T old_r = a, r = b;
  T old_s = T(1), s = T(0);
  T old_t = T(0), t = T(1);
  while (r != T(0)) {
    T q = old_r / r;
    T tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < T(0)) return {T(-old_r), T(-old_s), T(-old_t)};
  return {old_r, old_s, old_t};
}

/// Floor of the square root of a non-negative integer.
Int isqrt(const Int& n);

/// True iff n is a perfect square (n >= 0).
bool is_square(const Int& n);

/// 2-adic valuation of a nonzero integer.
unsigned valuation2(Int n);

/// Odd part of a nonzero integer (sign dropped).
Int odd_part(const Int& n);

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

/// Narrowing conversion that throws ArithmeticOverflow when out of range.
std::int64_t to_i64(const Int& x);

inline Int to_int(Checked64 x) { return Int(x.value()); }
inline Int to_int(const Int& x) { return x; }

template <class T> T from_int(const Int& x);
template <> inline Int from_int<Int>(const Int& x) { return x; }
template <> inline Checked64 from_int<Checked64>(const Int& x) { return Checked64(to_i64(x)); }

} // namespace csl4
