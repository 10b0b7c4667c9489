#pragma once

#include "csl4/enumerate.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace csl4::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Tsv };
Format parse_format(const std::string& s);

// Integers that fit in 64 bits are written as JSON numbers, larger ones as decimal strings.
nlohmann::json to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);
// "a" or "a/b".
nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const SmallQuat& q);
nlohmann::json matrix_to_json(const IntMatrix& m); // row-major

/// {"den": d, "basis": [row-major entries]}; basis columns are the lattice generators.
nlohmann::json lattice_to_json(const Lattice& l);
/// Re-canonicalizes; throws on malformed input.
Lattice lattice_from_json(const nlohmann::json& j);

/// One equivalence class as streamed by `enumerate`.
struct EnumRecord {
  LatticeKind lattice = LatticeKind::F;
  Int sigma;
  QuatPair representative;
  ClassLabel label_p = ClassLabel::T0, label_q = ClassLabel::T0;
  std::size_t h_order = 0;
  std::size_t g = 0;
  std::size_t orbit_rotations = 0;
  std::size_t distinct_csls = 0;
  Int sigma_f, sigma_p;
  std::optional<std::pair<std::size_t, std::size_t>> p_split; // F only: P-classes with Sigma_P = Sigma_F, 2 Sigma_F
  Lattice csl = standard_lattice(LatticeKind::P);
};

std::vector<EnumRecord> records_of(const CslCatalog& cat);

nlohmann::json to_json(const EnumRecord& r);
EnumRecord record_from_json(const nlohmann::json& j);

void write_records(std::ostream& out, const std::vector<EnumRecord>& recs, LatticeKind lattice, Format format);

} // namespace csl4::cli
