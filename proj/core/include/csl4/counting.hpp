#pragma once

#include "csl4/integer.hpp"
#include "csl4/lattice.hpp"
#include "csl4/symgroup.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace csl4 {

/// Positive integer with its prime factorization (ascending, distinct primes).
struct FactoredSigma {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;

  [[nodiscard]] bool is_odd() const { return value % 2 != 0; }
  [[nodiscard]] unsigned exponent_of(const Int& p) const;
  [[nodiscard]] std::size_t prime_count() const { return factors.size(); }
};

/// Trial division; throws std::invalid_argument for n < 1.
FactoredSigma factorize(const Int& n);

/// Number of different 3D cubic CSLs with index n (multiplicative, 0 for even n).
Int f3(const Int& n);
/// Number of different CSLs of D4 with index n (multiplicative, 0 for even n).
Int fF(const Int& n);

/// Gauss bracket: largest integer <= x.
Int gauss_floor(const Rational& x);
/// 0 for a == 0, 1 for a >= 1.
inline int nu(const Int& a) { return a == 0 ? 0 : 1; }

/// Number of different 3D CSLs in one equivalence class of type l: 1, 4, 8, 6, 12, 24.
int g3(ClassLabel l);
/// |CG_F| / |H_F| for a pair of type (i, j) (symmetric).
int gF(ClassLabel i, ClassLabel j);

/// Inequivalent 3D CSLs of type l at index sigma. T0..T4 by the closed rules,
/// T5 by subtraction from f3. Zero for even sigma.
Rational n3(ClassLabel l, const FactoredSigma& sigma);

/// Closed-form n_Fij from the class-count tables, evaluated exactly.
/// Entries without a closed form (any general type, (0,1), (1,3)) return 0 / nullopt via has_closed_form.
bool has_closed_form(ClassLabel i, ClassLabel j);
Rational nF(ClassLabel i, ClassLabel j, const FactoredSigma& sigma);

/// n_Fi5 by subtraction from m_Fi, and n_F55 from the global identity.
Rational nF_general(ClassLabel i, const FactoredSigma& sigma);

/// Class count for any type pair: closed form where available, else nF_general.
Rational nF_any(ClassLabel i, ClassLabel j, const FactoredSigma& sigma);

/// Pairs (a, b) of odd indices with lcm(a, b) = sigma and a*b a perfect square.
std::vector<std::pair<Int, Int>> admissible_index_pairs(const FactoredSigma& sigma);

/// Number of different CSLs whose left quaternion has type i, by convolution of 3D counts.
Rational mF(ClassLabel i, const FactoredSigma& sigma);
/// The closed form for m_F2 with its delta_F2 correction.
Rational mF2_closed(const FactoredSigma& sigma);
/// n_Fij from 3D class counts: sum of n3_i(a) n3_j(b) over admissible index pairs,
/// doubled for the split types (2,2), (2,5), (5,5).
Rational nF_convolution(ClassLabel i, ClassLabel j, const FactoredSigma& sigma);

using TypePair = std::pair<ClassLabel, ClassLabel>;

struct CountReport {
  FactoredSigma sigma;
  LatticeKind lattice = LatticeKind::F;
  Int total_csls;                       // fF(sigma)
  std::map<TypePair, Rational> per_class; // nonzero n_Fij, both orders
  Rational identity_sum;                 // sum of g_Fij n_Fij
  std::vector<std::string> inconsistencies; // non-integral or negative values
  [[nodiscard]] bool identity_holds() const { return identity_sum == Rational(total_csls); }
};

CountReport count_report(const Int& sigma);

/// Number of P-classes an F-class of type (i, j) splits into: {Sigma_P = Sigma_F, Sigma_P = 2 Sigma_F}.
std::pair<int, int> split_counts(ClassLabel i, ClassLabel j);
/// Total double cosets in the splitting of an F-class of type (i, j): 2, 3, 5 or 9.
int split_total(ClassLabel i, ClassLabel j);

struct PClassRow {
  std::string shape;     // representative pair shape
  TypePair type;
  bool doubled_sigma;    // column Sigma_P = 2 Sigma_F
  int multiplier;        // count = multiplier * n_Fij (or a fixed 1 for the two special rows)
  Rational count;
};

/// Rows of the P-inequivalent pair table at a given Sigma_P (zero-count rows omitted).
std::vector<PClassRow> p_class_counts(const Int& sigma_p);
/// Sum of counts over the table rows, including the swapped orders (q, p).
Rational p_class_total(const Int& sigma_p);

} // namespace csl4
