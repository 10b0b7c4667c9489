#pragma once

#include "csl4/integer.hpp"

#include <array>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace csl4 {

/// Integer quaternion w + x i + y j + z k, identified with (w, x, y, z) in Z^4.
struct IntQuat {
  Int w, x, y, z;

  IntQuat() = default;
  IntQuat(Int w_, Int x_, Int y_, Int z_) : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  [[nodiscard]] const Int& operator[](std::size_t i) const {
    switch (i) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
    }
  }
  [[nodiscard]] Int& operator[](std::size_t i) { return const_cast<Int&>(std::as_const(*this)[i]); }

  [[nodiscard]] Int norm2() const { return w * w + x * x + y * y + z * z; }
  [[nodiscard]] bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  [[nodiscard]] Int content() const;
  [[nodiscard]] IntQuat operator-() const { return {-w, -x, -y, -z}; }

  friend bool operator==(const IntQuat&, const IntQuat&) = default;
  friend std::strong_ordering operator<=>(const IntQuat& a, const IntQuat& b);
};

std::ostream& operator<<(std::ostream& os, const IntQuat& q);

/// "(w,x,y,z)".
std::string to_string(const IntQuat& q);

/// Unit quaternions u0..u3.
inline const std::array<IntQuat, 4>& unit_quats() {
  static const std::array<IntQuat, 4> u{IntQuat{1, 0, 0, 0}, IntQuat{0, 1, 0, 0}, IntQuat{0, 0, 1, 0},
                                        IntQuat{0, 0, 0, 1}};
  return u;
}

class NotPrimitive : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotAdmissible : public std::invalid_argument {
public:
  NotAdmissible(const std::string& what, Int product) : std::invalid_argument(what), norm_product(std::move(product)) {}
  Int norm_product; // |p|^2 |q|^2
};

/// Integer quaternion with coprime coefficients.
class PrimitiveQuat {
public:
  /// Throws NotPrimitive when q is zero or has content > 1.
  explicit PrimitiveQuat(IntQuat q);
  PrimitiveQuat(Int w, Int x, Int y, Int z) : PrimitiveQuat(IntQuat{std::move(w), std::move(x), std::move(y), std::move(z)}) {}

  [[nodiscard]] const IntQuat& quat() const { return q_; }
  operator const IntQuat&() const { return q_; } // NOLINT
  [[nodiscard]] const Int& operator[](std::size_t i) const { return q_[i]; }
  [[nodiscard]] Int norm2() const { return q_.norm2(); }
  [[nodiscard]] PrimitiveQuat operator-() const { return PrimitiveQuat(-q_, Trusted{}); }

  friend bool operator==(const PrimitiveQuat&, const PrimitiveQuat&) = default;
  friend std::strong_ordering operator<=>(const PrimitiveQuat& a, const PrimitiveQuat& b) { return a.q_ <=> b.q_; }

private:
  struct Trusted {};
  PrimitiveQuat(IntQuat q, Trusted) : q_(std::move(q)) {}
  friend std::pair<PrimitiveQuat, Int> make_primitive(const IntQuat& q);
  friend PrimitiveQuat conj(const PrimitiveQuat& q);
  friend PrimitiveQuat canonical_sign(const PrimitiveQuat& q);
  IntQuat q_;
};

inline std::ostream& operator<<(std::ostream& os, const PrimitiveQuat& q) { return os << q.quat(); }

/// Odd/even split of |q|^2 for a primitive quaternion.
struct SigmaDecomp {
  Int normsq;
  unsigned ell = 0; // 2-adic valuation of normsq, at most 2
  Int sigma;        // odd part of normsq
};

/// Hamilton product.
IntQuat mul(const IntQuat& p, const IntQuat& q);
IntQuat conj(const IntQuat& q);
PrimitiveQuat conj(const PrimitiveQuat& q);

/// Euclidean inner product in Z^4.
Int inner(const IntQuat& p, const IntQuat& q);

/// Divides out the content; throws std::invalid_argument for the zero quaternion.
std::pair<PrimitiveQuat, Int> make_primitive(const IntQuat& q);

/// |q|^2 = 2^ell * sigma with sigma odd.
SigmaDecomp sigma_of(const PrimitiveQuat& q);

/// True iff |p|^2 |q|^2 is a perfect square.
bool is_admissible(const IntQuat& p, const IntQuat& q);

/// Flips the sign so that the first nonzero coefficient is positive.
IntQuat canonical_sign(const IntQuat& q);
PrimitiveQuat canonical_sign(const PrimitiveQuat& q);

/// Parses "w,x,y,z"; throws std::invalid_argument on malformed text.
IntQuat parse_quat(const std::string& text);

/// Hash over the coefficients.
struct QuatHash {
  std::size_t operator()(const IntQuat& q) const noexcept;
  std::size_t operator()(const PrimitiveQuat& q) const noexcept { return (*this)(q.quat()); }
};

} // namespace csl4
