#pragma once

#include "csl4/counting.hpp"
#include "csl4/lattice.hpp"
#include "csl4/symgroup.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csl4 {

/// A desk-scale limit was hit; no partial result is returned.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::string bound_) : std::runtime_error(what), bound(std::move(bound_)) {}
  std::string bound; // e.g. "max_sigma=15"
};

/// All primitive quaternions of norm n, canonical sign, sorted.
struct NormClass {
  Int n;
  std::vector<PrimitiveQuat> quats;
};

NormClass primitive_quats_of_norm(const Int& n);
/// Same set as machine-word quaternions; with both_signs every q and -q is listed.
std::vector<SmallQuat> primitive_small_quats(std::int64_t n, bool both_signs = false);

/// Admissible pairs with lcm(Sigma(p), Sigma(q)) = sigma, one pair per rotation
/// (p with canonical sign), sorted. Optionally restricted to one type pair.
std::vector<QuatPair> admissible_pairs_for_sigmaF(const Int& sigma, std::optional<TypePair> type = std::nullopt);

struct CatalogOptions {
  Int max_sigma = 15;
  std::size_t max_pairs = 1'000'000;
  unsigned jobs = 1;
};

struct CatalogClass {
  PairClass cls;
  Int sigma_f;
  Int sigma_p;                 // of the representative
  std::size_t distinct_csls{}; // different CSLs produced by the class's pairs
  Lattice csl;                 // CSL of the representative
};

struct CslCatalog {
  Int sigma;
  LatticeKind lattice = LatticeKind::F;
  std::size_t pair_count = 0;
  std::size_t rotation_cosets = 0; // coincidence rotations modulo symmetries (sum of g)
  std::vector<Lattice> csls;       // distinct, sorted by key()
  std::vector<CatalogClass> classes;
  std::size_t shared_csls = 0; // CSLs reached from more than one class
};

/// For F: pairs with Sigma_F = sigma (odd). For P: pairs with Sigma_P = sigma, taken from
/// Sigma_F = sigma or sigma / 2. Throws BudgetExceeded beyond the options' limits.
CslCatalog build_catalog(const Int& sigma, LatticeKind lattice, const CatalogOptions& opts = {});

struct TheoremReport {
  Int max_normsq;
  std::size_t pairs = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Brute-force check of both index formulas, the den_F agreement, the parity rule and
/// den <= Sigma <= den^4 on every admissible pair with |p|^2, |q|^2 <= max_normsq.
TheoremReport verify_theorems(const Int& max_normsq, unsigned jobs = 1);

/// Admissible pairs (p canonical) with both norms <= max_normsq.
std::vector<QuatPair> admissible_pairs_up_to(std::int64_t max_normsq);

struct SplitClassReport {
  PairClass f_class;
  std::vector<PSplit> p_classes;
  std::size_t odd = 0;  // P-classes with Sigma_P = Sigma_F
  std::size_t even = 0; // P-classes with Sigma_P = 2 Sigma_F
  std::pair<int, int> expected{};
  bool ok = false;
};

struct SplittingReport {
  Int sigma;
  std::vector<SplitClassReport> classes;
  std::size_t brute_odd = 0, brute_even = 0;
  Rational table_odd, table_even;
  Int predicted_p_csls_odd, predicted_p_csls_even; // sum of |CG_P| / |H_P| over the P-classes
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// F-classes at sigma decomposed into CG_P double cosets and compared with the split tables.
SplittingReport verify_splitting(const Int& sigma, unsigned jobs = 1);

} // namespace csl4
