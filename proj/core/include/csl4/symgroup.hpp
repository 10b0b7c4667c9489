#pragma once

#include "csl4/quat.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace csl4 {

/// Quaternion with machine-word coefficients; used for group elements and orbit keys.
using SmallQuat = std::array<std::int64_t, 4>;

/// Throws ArithmeticOverflow if a coefficient exceeds 2^31 in absolute value.
SmallQuat to_small(const IntQuat& q);
IntQuat to_int_quat(const SmallQuat& q);
std::int64_t norm2(const SmallQuat& q);
SmallQuat small_mul(const SmallQuat& a, const SmallQuat& b);
SmallQuat small_conj(const SmallQuat& a);
/// Divides by the positive gcd of the coefficients.
SmallQuat primitive_part(const SmallQuat& a);
SmallQuat canonical_sign(const SmallQuat& a);

/// Unit quaternion q / |q| with q primitive of norm 1, 2 or 4.
class ScaledQuat {
public:
  /// Throws std::invalid_argument unless q is primitive with norm in {1, 2, 4}.
  explicit ScaledQuat(const SmallQuat& q);
  [[nodiscard]] const SmallQuat& quat() const { return q_; }
  [[nodiscard]] std::int64_t norm2() const { return csl4::norm2(q_); }
  friend ScaledQuat operator*(const ScaledQuat& a, const ScaledQuat& b);
  [[nodiscard]] ScaledQuat inverse() const;
  friend auto operator<=>(const ScaledQuat&, const ScaledQuat&) = default;

private:
  struct Trusted {};
  ScaledQuat(const SmallQuat& q, Trusted) : q_(q) {}
  SmallQuat q_;
};

/// Pair of quaternions, compared coefficientwise.
struct QuatPair {
  SmallQuat p, q;
  friend auto operator<=>(const QuatPair&, const QuatPair&) = default;
};

struct QuatPairHash {
  std::size_t operator()(const QuatPair& x) const noexcept;
};

QuatPair pair_mul(const QuatPair& a, const QuatPair& b);
QuatPair pair_inverse(const QuatPair& a);

/// Primitive parts of both members, simultaneous sign fixed so that p has
/// a positive leading coefficient. (p,q) and (-p,-q) give the same rotation.
QuatPair canonical_pair(const SmallQuat& p, const SmallQuat& q);
QuatPair canonical_pair(const PrimitiveQuat& p, const PrimitiveQuat& q);

std::string to_string(const QuatPair& x);

/// Finite group stored as a sorted element list plus a generating set.
template <class E> struct GroupSet {
  std::string name;
  std::vector<E> elements;   // sorted
  std::vector<E> generators; // small generating set
  [[nodiscard]] std::size_t order() const { return elements.size(); }
  [[nodiscard]] bool contains(const E& e) const;
};

using QuatGroup = GroupSet<SmallQuat>;
using PairGroup = GroupSet<QuatPair>;

enum class GroupName { CG, CGprime, CGF, CGP };
const char* to_string(GroupName g);

/// Closure of the standard generators; cached, built once. Throws std::logic_error
/// if closure or the expected order fails.
const QuatGroup& quat_group(GroupName g); // CG or CGprime
const PairGroup& pair_group(GroupName g); // CGF or CGP

/// Distinct rotations represented by a pair group (order / 2).
std::size_t rotation_count(GroupName g);

/// Members of CG: primitive with norm 1, 2 or 4.
bool in_cg(const SmallQuat& q);
bool in_cgprime(const SmallQuat& q);
/// Membership in CG_F / CG_P of a pair of primitive quaternions.
bool in_cgf(const QuatPair& x);
bool in_cgp(const QuatPair& x);

/// The six quaternion types.
enum class ClassLabel { T0, T1, T2, T3, T4, T5 };
inline constexpr std::array<ClassLabel, 6> kAllLabels{ClassLabel::T0, ClassLabel::T1, ClassLabel::T2,
                                                      ClassLabel::T3, ClassLabel::T4, ClassLabel::T5};
int index_of(ClassLabel l);
const char* to_string(ClassLabel l);
/// Representative shape: "(1,0,0,0)", "(0,1,1,1)", "(m,n,n,n)", "(m,n,0,0)", "(m,n,n,0)", "general".
const char* shape_of(ClassLabel l);
/// |H(q)| for a quaternion of this type: 48, 12, 6, 8, 4, 2.
int h_order_of(ClassLabel l);

/// CG cap q CG q^-1 (as a sorted element list).
std::vector<SmallQuat> h_of_quat(const PrimitiveQuat& q);
std::vector<SmallQuat> h_of_quat(const SmallQuat& q);
ClassLabel classify_quat(const PrimitiveQuat& q);
ClassLabel classify_quat(const SmallQuat& q);

/// G cap R G R^-1 for R = R(p, q), G = CG_F or CG_P.
std::vector<QuatPair> h_of_pair(const SmallQuat& p, const SmallQuat& q, GroupName g);
std::vector<QuatPair> h_of_pair(const PrimitiveQuat& p, const PrimitiveQuat& q, GroupName g);

/// One equivalence class of admissible pairs.
struct PairClass {
  QuatPair representative; // least canonical pair of the orbit
  ClassLabel label_p = ClassLabel::T0;
  ClassLabel label_q = ClassLabel::T0;
  std::size_t orbit_pairs = 0; // canonical pairs (= rotations) in the double coset
  std::size_t h_order = 0;     // |H_F| or |H_P| of the representative
  std::size_t g = 0;           // distinct CSLs in the class: group order / h_order
};

struct Partition {
  GroupName group = GroupName::CGF;
  std::vector<PairClass> classes; // sorted by representative
  std::unordered_map<QuatPair, std::size_t, QuatPairHash> class_of;
};

/// Orbit G x G of a pair, as canonical pairs (sorted).
std::vector<QuatPair> double_coset(const QuatPair& x, GroupName g);

/// Partition of the pairs (and their full orbits) into double cosets G R G.
Partition double_coset_classes(const std::vector<QuatPair>& pairs, GroupName g);

/// A P-class inside an F-class.
struct PSplit {
  QuatPair representative;
  std::size_t orbit_pairs = 0;
  std::size_t h_order = 0;
  std::optional<Int> sigma_p; // only for admissible pairs
};

/// Decomposition of CG_F (p,q) CG_F into CG_P double cosets, sorted by representative.
std::vector<PSplit> f_class_to_p_classes(const SmallQuat& p, const SmallQuat& q);

struct MergedClass {
  std::vector<std::size_t> members; // indices into Partition::classes
  bool self_swapped = false;        // the class contains the swap of its own representative
};

/// Merges each class with the class holding its swapped pair (q, p).
std::vector<MergedClass> swap_merge(const Partition& part);

} // namespace csl4
