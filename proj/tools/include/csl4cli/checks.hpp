#pragma once

#include "csl4/counting.hpp"
#include "csl4/enumerate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace csl4::cli {

struct Check {
  bool pass = false;
  std::string name;
  std::string detail;
};

class CheckLog {
public:
  void add(bool pass, std::string name, std::string detail = {});
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] bool all_passed() const;
  /// One "PASS name: detail" / "FAIL name: detail" line per check.
  void print(std::ostream& out) const;

private:
  std::vector<Check> checks_;
};

void check_groups(CheckLog& log);
/// H orders and CG double coset sizes for one quaternion per type.
void check_type_table(CheckLog& log);
/// |CH_F| and g = 1152 / |CH_F| for one pair per type combination.
void check_pair_stabilizers(CheckLog& log);
/// |CH_P| for listed P-class representatives.
void check_p_stabilizers(CheckLog& log);

enum class TheoremPart { F, P };
void check_theorems(CheckLog& log, const TheoremReport& rep, TheoremPart part);

/// Catalog invariants against fF: distinct CSLs, rotation cosets, g values, indices.
void check_f_catalog(CheckLog& log, const CslCatalog& cat);
/// Brute-force class counts per type pair against the tables, plus the global identity.
void check_class_counts(CheckLog& log, const CslCatalog& cat);
/// F -> P splitting and the P catalogs at sigma and 2 sigma.
void check_splitting(CheckLog& log, const SplittingReport& rep, const CslCatalog& p_odd, const CslCatalog& p_even);
/// Number of P double cosets in the F-classes of a few representatives.
void check_split_examples(CheckLog& log);

void check_cubic_sigma(CheckLog& log, std::int64_t max_normsq);
void check_cubic_counts(CheckLog& log, std::int64_t max_sigma);
void check_cubic_classes(CheckLog& log, const std::vector<std::int64_t>& sigmas);

void check_round_trip(CheckLog& log, std::int64_t max_normsq);

} // namespace csl4::cli
