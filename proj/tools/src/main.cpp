#include "csl4cli/cache.hpp"
#include "csl4cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace csl4;
using namespace csl4::cli;

namespace {

const std::map<std::string, LatticeKind> kLattices{{"F", LatticeKind::F}, {"P", LatticeKind::P}};
const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"tsv", Format::Tsv}};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence site lattices of the 4D hypercubic lattices Z^4 (P) and D_4 (F)", "csl4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "csl4 0.1.0");

  SigmaArgs sa;
  std::string sigma_lattice;
  auto* sigma = app.add_subcommand("sigma", "Coincidence indices, denominators and the rotation matrix of a pair");
  sigma->add_option("--p", sa.p, "first quaternion, w,x,y,z")->required();
  sigma->add_option("--q", sa.q, "second quaternion, w,x,y,z")->required();
  sigma->add_option("--lattice", sigma_lattice, "also report Sigma and den for this lattice (P or F)")
      ->check(CLI::IsMember({"P", "F"}));
  sigma->add_option("--format", sa.format, "json or tsv")->transform(CLI::CheckedTransformer(kFormats));

  CslArgs ca;
  auto* cslc = app.add_subcommand("csl", "Canonical basis of the CSL of a pair");
  cslc->add_option("--p", ca.p, "first quaternion, w,x,y,z")->required();
  cslc->add_option("--q", ca.q, "second quaternion, w,x,y,z")->required();
  cslc->add_option("--lattice", ca.lattice, "P or F")->transform(CLI::CheckedTransformer(kLattices))->default_str("F");
  cslc->add_option("--format", ca.format, "json or tsv")->transform(CLI::CheckedTransformer(kFormats));

  CountArgs na;
  na.jobs = default_jobs();
  std::string mode = "total";
  auto* count = app.add_subcommand("count", "Number of CSLs or of inequivalent classes at a given index");
  count->add_option("--sigma", na.sigma, "coincidence index")->required();
  count->add_option("--lattice", na.lattice, "P or F")->transform(CLI::CheckedTransformer(kLattices))->default_str("F");
  count->add_option("--mode", mode, "total or classes")->check(CLI::IsMember({"total", "classes"}))->capture_default_str();
  count->add_flag("--brute", na.brute, "also enumerate and report brute-force counts (mode total)");
  count->add_option("--max-sigma", na.max_sigma, "enumeration budget on Sigma_F")->capture_default_str();
  count->add_option("--jobs", na.jobs, "worker threads")->check(CLI::PositiveNumber);
  count->add_option("--format", na.format, "json or tsv")->transform(CLI::CheckedTransformer(kFormats));

  VerifyArgs va;
  va.jobs = default_jobs();
  std::int64_t max_normsq = 0;
  auto* verify = app.add_subcommand("verify", "Check the index theorems and counting tables by brute force");
  auto* mn = verify->add_option("--max-normsq", max_normsq, "check all admissible pairs with |p|^2, |q|^2 up to this bound")
                 ->check(CLI::PositiveNumber);
  verify->add_option("--sigma-list", va.sigmas, "comma-separated Sigma_F values")->delimiter(',');
  verify->add_option("--max-sigma", va.max_sigma, "enumeration budget on Sigma_F")->capture_default_str();
  verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::PositiveNumber);

  EnumerateArgs ea;
  ea.jobs = default_jobs();
  std::string cache_dir;
  bool no_cache = false;
  auto* enumerate = app.add_subcommand("enumerate", "One record per equivalence class of coincidence rotations");
  enumerate->add_option("--sigma", ea.sigma, "coincidence index of the lattice")->required();
  enumerate->add_option("--lattice", ea.lattice, "P or F")->transform(CLI::CheckedTransformer(kLattices))->default_str("F");
  enumerate->add_option("--format", ea.format, "json or tsv")->transform(CLI::CheckedTransformer(kFormats));
  enumerate->add_option("--cache-dir", cache_dir, std::string("catalog cache directory (default $") + kCacheEnv +
                                                      ", then .cslcache)");
  enumerate->add_flag("--no-cache", no_cache, "neither read nor write the cache");
  enumerate->add_option("--max-sigma", ea.max_sigma, "enumeration budget on Sigma_F")->capture_default_str();
  enumerate->add_option("--jobs", ea.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  if (sigma->parsed()) {
    if (!sigma_lattice.empty()) sa.lattice = parse_lattice_kind(sigma_lattice);
    return cmd_sigma(sa, std::cout, std::cerr);
  }
  if (cslc->parsed()) return cmd_csl(ca, std::cout, std::cerr);
  if (count->parsed()) {
    na.mode = mode == "classes" ? CountArgs::Mode::Classes : CountArgs::Mode::Total;
    return cmd_count(na, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    if (*mn) va.max_normsq = max_normsq;
    else if (va.sigmas.empty()) va.max_normsq = 16;
    return cmd_verify(va, std::cout, std::cerr);
  }
  if (!cache_dir.empty()) ea.cache_dir = cache_dir;
  ea.use_cache = !no_cache;
  return cmd_enumerate(ea, std::cout, std::cerr);
}
