#pragma once

#include "csl4cli/records.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace csl4::cli {

inline constexpr const char* kCacheEnv = "CSL4_CACHE_DIR";

/// Flag value if given, else $CSL4_CACHE_DIR, else ".cslcache".
std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

/// Line-delimited JSON: a header line, one line per distinct CSL basis, one line per class.
struct CatalogCacheEntry {
  Int sigma;
  LatticeKind lattice = LatticeKind::F;
  std::vector<Lattice> csl_bases;
  std::vector<EnumRecord> class_reps;
};

CatalogCacheEntry cache_entry_of(const CslCatalog& cat);

std::filesystem::path cache_file(const std::filesystem::path& dir, const Int& sigma, LatticeKind lattice);

void write_cache(const std::filesystem::path& file, const CatalogCacheEntry& e);

enum class CacheStatus { Hit, Missing, Corrupt, VersionMismatch };

struct CacheLoad {
  CacheStatus status = CacheStatus::Missing;
  std::optional<CatalogCacheEntry> entry;
  std::string reason;
};

/// Reads and re-verifies an entry: every stored basis must already be canonical, and
/// every class representative must reproduce its stored CSL.
CacheLoad read_cache(const std::filesystem::path& file, const Int& sigma, LatticeKind lattice);

} // namespace csl4::cli
