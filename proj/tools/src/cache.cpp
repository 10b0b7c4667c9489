#include "csl4cli/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace csl4::cli {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path resolve_cache_dir(const std::optional<fs::path>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return ".cslcache";
}

CatalogCacheEntry cache_entry_of(const CslCatalog& cat) {
  return {cat.sigma, cat.lattice, cat.csls, records_of(cat)};
}

fs::path cache_file(const fs::path& dir, const Int& sigma, LatticeKind lattice) {
  return dir / ("csl-" + std::string(to_string(lattice)) + "-" + sigma.str() + ".jsonl");
}

void write_cache(const fs::path& file, const CatalogCacheEntry& e) {
  fs::create_directories(file.parent_path());
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << json{{"schema_version", kSchemaVersion},
                {"kind", "header"},
                {"sigma", to_json(e.sigma)},
                {"lattice", to_string(e.lattice)},
                {"csl_count", e.csl_bases.size()},
                {"class_count", e.class_reps.size()}}
               .dump()
        << '\n';
    for (const auto& l : e.csl_bases) {
      auto j = lattice_to_json(l);
      j["kind"] = "csl";
      out << j.dump() << '\n';
    }
    for (const auto& r : e.class_reps) {
      auto j = to_json(r);
      j["kind"] = "class";
      out << j.dump() << '\n';
    }
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, file);
}

namespace {

CacheLoad corrupt(std::string why) { return {CacheStatus::Corrupt, std::nullopt, std::move(why)}; }

} // namespace

CacheLoad read_cache(const fs::path& file, const Int& sigma, LatticeKind lattice) {
  std::ifstream in(file);
  if (!in) return {CacheStatus::Missing, std::nullopt, "no cache file"};
  try {
    std::string line;
    if (!std::getline(in, line)) return corrupt("empty file");
    const auto head = json::parse(line);
    if (!head.contains("schema_version") || head["schema_version"] != kSchemaVersion)
      return {CacheStatus::VersionMismatch, std::nullopt, "schema version " + head.value("schema_version", json()).dump()};
    if (head.at("kind") != "header" || int_from_json(head.at("sigma")) != sigma ||
        head.at("lattice").get<std::string>() != to_string(lattice))
      return corrupt("header does not match the request");
    const auto n_csl = head.at("csl_count").get<std::size_t>();
    const auto n_class = head.at("class_count").get<std::size_t>();

    CatalogCacheEntry e{sigma, lattice, {}, {}};
    std::vector<std::string> keys;
    while (std::getline(in, line)) {
      const auto j = json::parse(line);
      const auto kind = j.at("kind").get<std::string>();
      if (kind == "csl") {
        auto l = lattice_from_json(j);
        if (lattice_to_json(l) != json{{"den", j.at("den")}, {"basis", j.at("basis")}})
          return corrupt("stored basis is not canonical");
        keys.push_back(l.key());
        e.csl_bases.push_back(std::move(l));
      } else if (kind == "class") {
        e.class_reps.push_back(record_from_json(j));
      } else {
        return corrupt("unknown record kind " + kind);
      }
    }
    if (e.csl_bases.size() != n_csl || e.class_reps.size() != n_class) return corrupt("record count mismatch");
    for (std::size_t i = 1; i < keys.size(); ++i)
      if (!(keys[i - 1] < keys[i])) return corrupt("CSL bases not sorted");
    const Lattice base = standard_lattice(lattice);
    for (const auto& r : e.class_reps) {
      if (r.sigma != sigma || r.lattice != lattice) return corrupt("class record for another catalog");
      const auto rot = build_rotation(PrimitiveQuat(to_int_quat(r.representative.p)),
                                      PrimitiveQuat(to_int_quat(r.representative.q)));
      const auto fresh = csl(base, rot.m, rot.d);
      if (!(fresh == r.csl)) return corrupt("class " + to_string(r.representative) + " does not reproduce its CSL");
      if (!std::binary_search(keys.begin(), keys.end(), fresh.key())) return corrupt("class CSL missing from the basis list");
    }
    return {CacheStatus::Hit, std::move(e), {}};
  } catch (const std::exception& ex) {
    return corrupt(ex.what());
  }
}

} // namespace csl4::cli
