// Acceptance run: one PASS/FAIL line per criterion, failing sub-checks listed below it.
// Usage: csl4_acceptance [jobs]

#include "csl4cli/checks.hpp"
#include "csl4cli/commands.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace csl4;
using namespace csl4::cli;

namespace {

unsigned g_jobs = 1;
std::map<Int, CslCatalog> g_f_catalogs;

const CslCatalog& f_catalog(const Int& sigma) {
  auto it = g_f_catalogs.find(sigma);
  if (it == g_f_catalogs.end()) it = g_f_catalogs.emplace(sigma, build_catalog(sigma, LatticeKind::F, {15, 1'000'000, g_jobs})).first;
  return it->second;
}

const TheoremReport& theorems() {
  static const TheoremReport rep = verify_theorems(36, g_jobs);
  return rep;
}

bool run(int id, const char* title, const std::function<void(CheckLog&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckLog log;
  try {
    body(log);
  } catch (const std::exception& e) {
    log.add(false, "exception", e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = log.all_passed() && !log.checks().empty();
  std::cout << (ok ? "PASS " : "FAIL ") << id << ' ' << title << " (checks: " << log.checks().size() << ", ";
  std::cout.precision(1);
  std::cout << std::fixed << secs << " s)\n";
  for (const auto& c : log.checks())
    if (!c.pass) std::cout << "    FAIL " << c.name << (c.detail.empty() ? "" : ": ") << c.detail << '\n';
  std::cout.flush();
  return ok;
}

std::string enumerate_output(const std::string& sigma, LatticeKind lattice, Format format, unsigned jobs) {
  EnumerateArgs a;
  a.sigma = sigma;
  a.lattice = lattice;
  a.format = format;
  a.use_cache = false;
  a.jobs = jobs;
  std::ostringstream out, err;
  if (cmd_enumerate(a, out, err) != kExitOk) throw std::runtime_error("enumerate failed: " + err.str());
  return out.str();
}

} // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_jobs = static_cast<unsigned>(std::stoul(argv[1]));
  const std::int64_t odd[] = {1, 3, 5, 7, 9};
  int failed = 0;

  failed += !run(1, "F-CSL index = lcm(Sigma(p), Sigma(q)) for |p|^2, |q|^2 <= 36", [](CheckLog& log) {
    const auto& rep = theorems();
    log.add(rep.pairs >= 1000, "at least 1000 admissible pairs", std::to_string(rep.pairs));
    check_theorems(log, rep, TheoremPart::F);
  });

  failed += !run(2, "P-CSL index = lcm(Sigma(p), Sigma(q), den_P) and parity rule for |p|^2, |q|^2 <= 36",
                 [](CheckLog& log) { check_theorems(log, theorems(), TheoremPart::P); });

  failed += !run(3, "distinct D4 CSLs = f_F at Sigma = 1, 3, 5, 7, 9", [&](CheckLog& log) {
    const std::map<std::int64_t, std::size_t> expected{{1, 1}, {3, 16}, {5, 36}, {7, 64}, {9, 168}};
    for (auto s : odd) {
      const auto& c = f_catalog(s);
      const std::size_t want = expected.at(s);
      std::ostringstream d;
      d << c.csls.size() << " distinct CSLs, f_F=" << fF(s) << ", expected " << want << " (" << c.rotation_cosets
        << " rotation cosets)";
      log.add(c.csls.size() == want && fF(s) == Int(want), "Sigma=" + std::to_string(s), d.str());
    }
  });

  failed += !run(4, "group orders and symmetry rotation counts", [](CheckLog& log) { check_groups(log); });

  failed += !run(5, "H-orders and orbit sizes per quaternion type", [](CheckLog& log) { check_type_table(log); });

  failed += !run(6, "|CH_F| and g for every type combination", [](CheckLog& log) { check_pair_stabilizers(log); });

  failed += !run(7, "class counts n_Fij and f_F = sum g n at Sigma = 1, 3, 5, 7, 9", [&](CheckLog& log) {
    for (auto s : odd) check_class_counts(log, f_catalog(s));
  });

  failed += !run(8, "F -> P splitting and Sigma_P columns at Sigma <= 9, CH_P orders", [&](CheckLog& log) {
    check_split_examples(log);
    for (auto s : odd) {
      const auto rep = verify_splitting(s, g_jobs);
      std::ostringstream d;
      d << rep.classes.size() << " F-classes, P-classes " << rep.brute_odd << '+' << rep.brute_even << ", tables "
        << rep.table_odd << '+' << rep.table_even;
      log.add(rep.ok(), "splitting at Sigma_F=" + std::to_string(s), rep.ok() ? d.str() : rep.failures.front());
    }
    check_p_stabilizers(log);
  });

  failed += !run(9, "3D oracle: Sigma, f(Sigma), class counts", [](CheckLog& log) {
    check_cubic_sigma(log, 100);
    check_cubic_counts(log, 21);
    check_cubic_classes(log, {3, 5, 7, 9});
  });

  failed += !run(10, "recover_pair inverts build_rotation for |p|^2, |q|^2 <= 20",
                 [](CheckLog& log) { check_round_trip(log, 20); });

  failed += !run(11, "enumerate output independent of the worker count", [](CheckLog& log) {
    const std::pair<const char*, LatticeKind> runs[] = {{"9", LatticeKind::F}, {"14", LatticeKind::P}};
    for (const auto& [s, lattice] : runs)
      for (auto format : {Format::Json, Format::Tsv}) {
        const auto a = enumerate_output(s, lattice, format, 1);
        const auto b = enumerate_output(s, lattice, format, 3);
        std::ostringstream name;
        name << "enumerate --sigma " << s << " --lattice " << to_string(lattice) << " --format "
             << (format == Format::Json ? "json" : "tsv") << ", jobs 1 vs 3";
        log.add(a == b && !a.empty(), name.str(), std::to_string(a.size()) + " bytes");
      }
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
