#pragma once

#include "csl4cli/records.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace csl4::cli {

// Stable exit-code contract.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParseError = 2,
  kExitNotAdmissible = 3,
  kExitBudget = 4,
};

unsigned default_jobs();

struct SigmaArgs {
  std::string p, q;
  std::optional<LatticeKind> lattice;
  Format format = Format::Json;
};

struct CslArgs {
  std::string p, q;
  LatticeKind lattice = LatticeKind::F;
  Format format = Format::Json;
};

struct CountArgs {
  std::string sigma;
  LatticeKind lattice = LatticeKind::F;
  enum class Mode { Total, Classes } mode = Mode::Total;
  bool brute = false; // add the enumerated counts (mode total)
  std::string max_sigma = "15";
  unsigned jobs = 1;
  Format format = Format::Json;
};

struct VerifyArgs {
  std::optional<std::int64_t> max_normsq;
  std::vector<std::string> sigmas;
  std::string max_sigma = "15";
  unsigned jobs = 1;
};

struct EnumerateArgs {
  std::string sigma;
  LatticeKind lattice = LatticeKind::F;
  Format format = Format::Json;
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  std::string max_sigma = "15";
  unsigned jobs = 1;
};

// Each command writes its result to out, diagnostics to err, and returns an ExitCode.
int cmd_sigma(const SigmaArgs& a, std::ostream& out, std::ostream& err);
int cmd_csl(const CslArgs& a, std::ostream& out, std::ostream& err);
int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err);

/// Decimal positive integer; throws std::invalid_argument otherwise.
Int parse_positive(const std::string& s);

} // namespace csl4::cli
