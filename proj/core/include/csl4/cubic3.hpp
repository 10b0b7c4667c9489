#pragma once

#include "csl4/lattice.hpp"
#include "csl4/symgroup.hpp"

#include <vector>

namespace csl4 {

/// Rational 3D rotation m / d with m m^T = d^2 I and det m = d^3, reduced.
struct Rot3 {
  IntMatrix m;
  Int d;
};

/// Rotation x -> q x conj(q) / |q|^2 on the pure quaternions (the 3x3 block of build_rotation(q, q)).
Rot3 rot3_from_quat(const PrimitiveQuat& q);

/// [Z^3 : Z^3 cap R Z^3] by explicit intersection.
Int csl3_sigma(const PrimitiveQuat& q);

/// One CG double coset of quaternions with a given Sigma.
struct Class3 {
  ClassLabel label = ClassLabel::T0;
  SmallQuat representative{}; // least canonical-sign member
  std::size_t orbit = 0;      // size of CG q CG, signs included
  std::size_t csls = 0;       // distinct 3D CSLs produced by the class
};

/// Primitive quaternions with odd part of the norm equal to sigma, partitioned into
/// CG double cosets; sorted by representative.
std::vector<Class3> classify3(const Int& sigma);

/// Number of distinct 3D CSLs of index sigma, by enumeration.
std::size_t count_csl3(const Int& sigma);

} // namespace csl4
