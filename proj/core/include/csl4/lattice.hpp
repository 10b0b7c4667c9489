#pragma once

#include "csl4/intlinalg.hpp"
#include "csl4/rot4.hpp"

#include <string>
#include <vector>

namespace csl4 {

enum class LatticeKind { P, F };

const char* to_string(LatticeKind k);
/// "P" or "F" (case-insensitive); throws std::invalid_argument otherwise.
LatticeKind parse_lattice_kind(const std::string& s);

class NotSublattice : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Full-rank lattice (1/den) * span(basis columns) in Q^n, kept canonical:
/// basis in column HNF and gcd(content(basis), den) = 1.
class Lattice {
public:
  /// Canonicalizes; throws RankDeficient if the columns do not span Q^n, std::invalid_argument if den <= 0.
  Lattice(IntMatrix generators, Int den = 1);

  [[nodiscard]] const IntMatrix& basis() const { return basis_; }
  [[nodiscard]] const Int& den() const { return den_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  /// |det basis| / den^n as an exact rational.
  [[nodiscard]] Rational covolume() const;
  /// Byte-stable canonical key "n|den|row-major entries".
  [[nodiscard]] std::string key() const;

  [[nodiscard]] bool contains_vector(const std::vector<Int>& v, const Int& v_den = 1) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

private:
  struct Canonical {};
  Lattice(IntMatrix hnf, Int den, Canonical) : basis_(std::move(hnf)), den_(std::move(den)) {}
  friend Lattice make_canonical_lattice(IntMatrix hnf, Int den);
  IntMatrix basis_;
  Int den_;
};

/// Z^n for P; D_n (integer vectors with even coordinate sum) for F.
Lattice standard_lattice(LatticeKind kind, std::size_t dim = 4);

/// The image (m / d) * l.
Lattice rotate(const IntMatrix& m, const Int& d, const Lattice& l);
inline Lattice rotate(const Rot4& r, const Lattice& l) { return rotate(r.m, r.d, l); }

Lattice intersect(const Lattice& a, const Lattice& b);

/// sub is a subset of sup.
bool contains(const Lattice& sup, const Lattice& sub);

/// Group index [sup : sub]; throws NotSublattice unless sub is contained in sup.
Int index_in(const Lattice& sub, const Lattice& sup);

/// L(R) = L cap R L.
Lattice csl(LatticeKind kind, const Rot4& r);
Lattice csl(const Lattice& l, const IntMatrix& m, const Int& d);

/// [L : L(R)] by explicit intersection.
Int brute_sigma(LatticeKind kind, const Rot4& r);
Int brute_sigma(const Lattice& l, const IntMatrix& m, const Int& d);

/// Least k > 0 with k R L contained in L.
Int brute_den(LatticeKind kind, const Rot4& r);
Int brute_den(const Lattice& l, const IntMatrix& m, const Int& d);

/// Elementary divisors of L(R) written in a basis of L.
std::vector<Int> quotient_invariants(LatticeKind kind, const Rot4& r);
std::vector<Int> quotient_invariants(const Lattice& l, const Lattice& sub);

} // namespace csl4
