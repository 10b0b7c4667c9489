#include "csl4cli/commands.hpp"

#include "csl4cli/cache.hpp"
#include "csl4cli/checks.hpp"

#include <ostream>
#include <thread>

namespace csl4::cli {

using nlohmann::json;

unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

Int parse_positive(const std::string& s) {
  if (s.empty() || s.size() > 40 || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a positive integer, got '" + s + "'");
  Int v(s);
  if (v < 1) throw std::invalid_argument("expected a positive integer, got '" + s + "'");
  return v;
}

namespace {

// Maps library exceptions onto the exit-code contract.
template <class F> int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const NotAdmissible& e) {
    err << "error: pair is not admissible: |p|^2|q|^2 = " << e.norm_product << " is not a square\n";
    return kExitNotAdmissible;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded (" << e.bound << "): " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
}

std::pair<PrimitiveQuat, PrimitiveQuat> parse_pair(const std::string& p, const std::string& q) {
  const IntQuat a = parse_quat(p), b = parse_quat(q);
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("quaternions must be nonzero");
  // Scaling p or q by a positive factor leaves the rotation unchanged.
  auto pp = make_primitive(a).first, qq = make_primitive(b).first;
  require_admissible(pp, qq);
  return {pp, qq};
}

json quat_json(const IntQuat& q) { return json::array({to_json(q.w), to_json(q.x), to_json(q.y), to_json(q.z)}); }

void tsv_matrix_header(std::ostream& out, const char* prefix) {
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out << '\t' << prefix << i << k;
}

void tsv_matrix(std::ostream& out, const IntMatrix& m) {
  for (const auto& x : m.data()) out << '\t' << x;
}

} // namespace

int cmd_sigma(const SigmaArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [p, q] = parse_pair(a.p, a.q);
    const Rot4 r = build_rotation(p, q).reduced();
    const Int sf = sigma_F(p, q), sp = sigma_P(p, q);
    const Int df = den_F(r), dp = den_P(r);
    const Int npq = isqrt(p.norm2() * q.norm2());
    if (a.format == Format::Json) {
      json j{{"schema_version", kSchemaVersion},
             {"p", quat_json(p)},
             {"q", quat_json(q)},
             {"norm_pq", to_json(npq)},
             {"sigma_F", to_json(sf)},
             {"sigma_P", to_json(sp)},
             {"den_F", to_json(df)},
             {"den_P", to_json(dp)},
             {"rotation", {{"den", to_json(r.d)}, {"matrix", matrix_to_json(r.m)}}}};
      if (a.lattice) {
        j["lattice"] = to_string(*a.lattice);
        j["sigma"] = to_json(*a.lattice == LatticeKind::F ? sf : sp);
        j["den"] = to_json(*a.lattice == LatticeKind::F ? df : dp);
      }
      out << j.dump() << '\n';
    } else {
      out << "norm_pq\tsigma_F\tsigma_P\tden_F\tden_P\tden";
      tsv_matrix_header(out, "m");
      out << '\n' << npq << '\t' << sf << '\t' << sp << '\t' << df << '\t' << dp << '\t' << r.d;
      tsv_matrix(out, r.m);
      out << '\n';
    }
    return kExitOk;
  });
}

int cmd_csl(const CslArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto [p, q] = parse_pair(a.p, a.q);
    const Rot4 r = build_rotation(p, q);
    const Lattice base = standard_lattice(a.lattice);
    const Lattice l = csl(base, r.m, r.d);
    const Int index = index_in(l, base);
    const auto inv = quotient_invariants(base, l);
    if (a.format == Format::Json) {
      json jinv = json::array();
      for (const auto& x : inv) jinv.push_back(to_json(x));
      out << json{{"schema_version", kSchemaVersion},
                  {"lattice", to_string(a.lattice)},
                  {"p", quat_json(p)},
                  {"q", quat_json(q)},
                  {"sigma", to_json(index)},
                  {"csl", lattice_to_json(l)},
                  {"quotient_invariants", jinv}}
                 .dump()
          << '\n';
    } else {
      out << "sigma\tden";
      tsv_matrix_header(out, "b");
      for (std::size_t i = 0; i < inv.size(); ++i) out << "\td" << i;
      out << '\n' << index << '\t' << l.den();
      tsv_matrix(out, l.basis());
      for (const auto& x : inv) out << '\t' << x;
      out << '\n';
    }
    return kExitOk;
  });
}

namespace {

void write_rational_tsv(std::ostream& out, const Rational& x) { out << '\t' << numerator(x) << '\t' << denominator(x); }

int count_total(const CountArgs& a, const Int& sigma, std::ostream& out) {
  std::optional<CslCatalog> cat;
  if (a.brute) cat = build_catalog(sigma, a.lattice, {parse_positive(a.max_sigma), 1'000'000, a.jobs});
  json j{{"schema_version", kSchemaVersion}, {"record", "total"}, {"lattice", to_string(a.lattice)}, {"sigma", to_json(sigma)}};
  Rational value;
  if (a.lattice == LatticeKind::F) {
    value = fF(sigma);
    j["csls"] = to_json(value);
  } else {
    value = p_class_total(sigma);
    j["classes"] = to_json(value);
  }
  if (cat) {
    j["brute_classes"] = cat->classes.size();
    j["brute_distinct_csls"] = cat->csls.size();
    j["brute_rotation_cosets"] = cat->rotation_cosets;
  }
  if (a.format == Format::Json) {
    out << j.dump() << '\n';
  } else {
    out << "sigma\t" << (a.lattice == LatticeKind::F ? "csls" : "classes") << "_num\t"
        << (a.lattice == LatticeKind::F ? "csls" : "classes") << "_den";
    if (cat) out << "\tbrute_classes\tbrute_distinct_csls\tbrute_rotation_cosets";
    out << '\n' << sigma;
    write_rational_tsv(out, value);
    if (cat) out << '\t' << cat->classes.size() << '\t' << cat->csls.size() << '\t' << cat->rotation_cosets;
    out << '\n';
  }
  return kExitOk;
}

int count_classes_f(const CountArgs& a, const Int& sigma, std::ostream& out) {
  std::vector<std::pair<TypePair, Rational>> rows;
  Rational total = 0, sum = 0;
  std::vector<std::string> notes;
  if (sigma % 2 != 0) {
    const auto rep = count_report(sigma);
    rows.assign(rep.per_class.begin(), rep.per_class.end());
    total = rep.total_csls;
    sum = rep.identity_sum;
    notes = rep.inconsistencies;
  }
  if (a.format == Format::Json) {
    for (const auto& [t, n] : rows)
      out << json{{"schema_version", kSchemaVersion},
                  {"record", "class"},
                  {"lattice", "F"},
                  {"sigma", to_json(sigma)},
                  {"type", json::array({to_string(t.first), to_string(t.second)})},
                  {"closed_form", has_closed_form(t.first, t.second)},
                  {"n", to_json(n)},
                  {"g", gF(t.first, t.second)}}
                 .dump()
          << '\n';
    out << json{{"schema_version", kSchemaVersion},
                {"record", "identity"},
                {"lattice", "F"},
                {"sigma", to_json(sigma)},
                {"total", to_json(total)},
                {"sum_g_n", to_json(sum)},
                {"holds", total == sum},
                {"inconsistencies", notes}}
               .dump()
        << '\n';
  } else {
    out << "type_p\ttype_q\tn_num\tn_den\tg\n";
    for (const auto& [t, n] : rows) {
      out << index_of(t.first) << '\t' << index_of(t.second);
      write_rational_tsv(out, n);
      out << '\t' << gF(t.first, t.second) << '\n';
    }
    out << "# identity " << total << " = " << sum << '\n';
  }
  return kExitOk;
}

int count_classes_p(const CountArgs& a, const Int& sigma, std::ostream& out) {
  const auto rows = p_class_counts(sigma);
  const Rational total = p_class_total(sigma);
  if (a.format == Format::Json) {
    for (const auto& r : rows)
      out << json{{"schema_version", kSchemaVersion},
                  {"record", "class"},
                  {"lattice", "P"},
                  {"sigma", to_json(sigma)},
                  {"shape", r.shape},
                  {"type", json::array({to_string(r.type.first), to_string(r.type.second)})},
                  {"sigma_p_doubled", r.doubled_sigma},
                  {"multiplier", r.multiplier},
                  {"count", to_json(r.count)}}
                 .dump()
          << '\n';
    out << json{{"schema_version", kSchemaVersion},
                {"record", "total"},
                {"lattice", "P"},
                {"sigma", to_json(sigma)},
                {"classes", to_json(total)}}
               .dump()
        << '\n';
  } else {
    out << "type_p\ttype_q\tdoubled\tmultiplier\tcount_num\tcount_den\n";
    for (const auto& r : rows) {
      out << index_of(r.type.first) << '\t' << index_of(r.type.second) << '\t' << (r.doubled_sigma ? 1 : 0) << '\t'
          << r.multiplier;
      write_rational_tsv(out, r.count);
      out << '\n';
    }
    out << "# total " << total << '\n';
  }
  return kExitOk;
}

} // namespace

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Int sigma = parse_positive(a.sigma);
    if (a.mode == CountArgs::Mode::Total) return count_total(a, sigma, out);
    return a.lattice == LatticeKind::F ? count_classes_f(a, sigma, out) : count_classes_p(a, sigma, out);
  });
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Int> sigmas;
    for (const auto& s : a.sigmas) sigmas.push_back(parse_positive(s));
    const Int max_sigma = parse_positive(a.max_sigma);
    for (const auto& s : sigmas)
      if (s > max_sigma) throw BudgetExceeded("Sigma_F " + s.str() + " is above the budget", "max_sigma=" + max_sigma.str());
    const CatalogOptions opts{max_sigma, 1'000'000, a.jobs};

    CheckLog log;
    check_groups(log);
    check_type_table(log);
    check_pair_stabilizers(log);
    check_p_stabilizers(log);
    check_split_examples(log);
    if (a.max_normsq) {
      const auto rep = verify_theorems(*a.max_normsq, a.jobs);
      check_theorems(log, rep, TheoremPart::F);
      check_theorems(log, rep, TheoremPart::P);
    }
    std::vector<std::int64_t> cubic;
    for (const auto& s : sigmas) {
      if (s % 2 == 0) {
        const bool none = admissible_pairs_for_sigmaF(s).empty() && fF(s) == 0;
        log.add(none, "Sigma=" + s.str() + ": no admissible pairs (Sigma_F is odd)");
        continue;
      }
      const auto f = build_catalog(s, LatticeKind::F, opts);
      check_f_catalog(log, f);
      check_class_counts(log, f);
      const auto split = verify_splitting(s, a.jobs);
      const auto p_odd = build_catalog(s, LatticeKind::P, opts);
      const auto p_even = build_catalog(2 * s, LatticeKind::P, opts);
      check_splitting(log, split, p_odd, p_even);
      if (s <= 45) cubic.push_back(static_cast<std::int64_t>(s));
    }
    check_cubic_classes(log, cubic);
    log.print(out);
    return log.all_passed() ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Int sigma = parse_positive(a.sigma);
    const CatalogOptions opts{parse_positive(a.max_sigma), 1'000'000, a.jobs};
    std::optional<std::filesystem::path> file;
    std::vector<EnumRecord> recs;
    bool have = false;
    if (a.use_cache) {
      file = cache_file(resolve_cache_dir(a.cache_dir), sigma, a.lattice);
      auto load = read_cache(*file, sigma, a.lattice);
      if (load.status == CacheStatus::Hit) {
        recs = std::move(load.entry->class_reps);
        have = true;
      } else if (load.status == CacheStatus::Corrupt) {
        err << "warning: cache file " << file->string() << " is corrupt (" << load.reason << "), rebuilding\n";
      } else if (load.status == CacheStatus::VersionMismatch) {
        err << "note: cache file " << file->string() << " has another " << load.reason << ", rebuilding\n";
      }
    }
    if (!have) {
      const auto cat = build_catalog(sigma, a.lattice, opts);
      auto entry = cache_entry_of(cat);
      if (file) {
        try {
          write_cache(*file, entry);
        } catch (const std::exception& e) {
          err << "warning: " << e.what() << '\n';
        }
      }
      recs = std::move(entry.class_reps);
    }
    write_records(out, recs, a.lattice, a.format);
    return kExitOk;
  });
}

} // namespace csl4::cli
