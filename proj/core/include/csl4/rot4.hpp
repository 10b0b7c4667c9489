#pragma once

#include "csl4/intlinalg.hpp"
#include "csl4/matrix.hpp"
#include "csl4/quat.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace csl4 {

class MalformedRotation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact rational rotation m / d with m m^T = d^2 I and det m = d^4.
struct Rot4 {
  IntMatrix m;
  Int d;

  /// Common factor of m and d removed.
  [[nodiscard]] Rot4 reduced() const;
  [[nodiscard]] Matrix<Rational> entries() const;
  [[nodiscard]] bool is_proper_orthogonal() const;

  /// Equality as rational matrices.
  friend bool same_rotation(const Rot4& a, const Rot4& b);
};

/// M(p,q) with entry (i,j) = <p u_j, u_i q>, scale d = |pq|; acts as x -> p x conj(q) / d.
Rot4 build_rotation(const PrimitiveQuat& p, const PrimitiveQuat& q);

/// Throws NotAdmissible (carrying |p|^2 |q|^2) unless the pair is admissible.
void require_admissible(const IntQuat& p, const IntQuat& q);

/// Least k with k * R integral.
Int den_P(const Rot4& r);

/// den_P with at most one factor 2 removed.
Int den_F(const Rot4& r);

/// |pq| with its factors 2 removed (at most two of them).
Int den_F_from_pair(const PrimitiveQuat& p, const PrimitiveQuat& q);

/// lcm(Sigma(p), Sigma(q)).
Int sigma_F(const PrimitiveQuat& p, const PrimitiveQuat& q);

/// lcm(Sigma(p), Sigma(q), den_P(R(p,q))).
Int sigma_P(const PrimitiveQuat& p, const PrimitiveQuat& q);

Rot4 compose(const Rot4& a, const Rot4& b);
Rot4 inverse(const Rot4& r);

/// Pair (p, q) with build_rotation(p, q) equal to r, canonical up to the
/// simultaneous sign (first nonzero coefficient of p positive).
std::pair<PrimitiveQuat, PrimitiveQuat> recover_pair(const Rot4& r);

/// 16x16 integer matrix C with vec(M(p,q)) = C vec(p q^T) (row-major in both).
const IntMatrix& bilinear_coefficients();

} // namespace csl4
