#include "csl4cli/records.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace csl4::cli {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  throw std::invalid_argument("unknown format '" + s + "' (json or tsv)");
}

json to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("not an integer: " + s);
    return Int(s);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Int(numerator(x)));
  return x.str();
}

json to_json(const SmallQuat& q) { return json::array({q[0], q[1], q[2], q[3]}); }

json matrix_to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(to_json(m(i, j)));
  return a;
}

json lattice_to_json(const Lattice& l) { return {{"den", to_json(l.den())}, {"basis", matrix_to_json(l.basis())}}; }

Lattice lattice_from_json(const json& j) {
  const auto& b = j.at("basis");
  if (!b.is_array() || b.size() != 16) throw std::invalid_argument("basis must have 16 entries");
  IntMatrix m(4, 4);
  for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = int_from_json(b[k]);
  return Lattice(std::move(m), int_from_json(j.at("den")));
}

namespace {

ClassLabel parse_label(const std::string& s) {
  for (auto l : kAllLabels)
    if (s == to_string(l)) return l;
  throw std::invalid_argument("unknown type label " + s);
}

SmallQuat quat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion must have 4 entries");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(), j[3].get<std::int64_t>()};
}

} // namespace

std::vector<EnumRecord> records_of(const CslCatalog& cat) {
  std::vector<EnumRecord> out;
  out.reserve(cat.classes.size());
  for (const auto& c : cat.classes) {
    EnumRecord r;
    r.lattice = cat.lattice;
    r.sigma = cat.sigma;
    r.representative = c.cls.representative;
    r.label_p = c.cls.label_p;
    r.label_q = c.cls.label_q;
    r.h_order = c.cls.h_order;
    r.g = c.cls.g;
    r.orbit_rotations = c.cls.orbit_pairs;
    r.distinct_csls = c.distinct_csls;
    r.sigma_f = c.sigma_f;
    r.sigma_p = c.sigma_p;
    if (cat.lattice == LatticeKind::F) {
      std::size_t odd = 0, even = 0;
      for (const auto& s : f_class_to_p_classes(c.cls.representative.p, c.cls.representative.q)) {
        if (s.sigma_p == c.sigma_f) ++odd;
        else ++even;
      }
      r.p_split = {odd, even};
    }
    r.csl = c.csl;
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const EnumRecord& r) {
  json j{{"schema_version", kSchemaVersion},
         {"lattice", to_string(r.lattice)},
         {"sigma", to_json(r.sigma)},
         {"p", to_json(r.representative.p)},
         {"q", to_json(r.representative.q)},
         {"type", json::array({to_string(r.label_p), to_string(r.label_q)})},
         {"h_order", r.h_order},
         {"g", r.g},
         {"orbit_rotations", r.orbit_rotations},
         {"distinct_csls", r.distinct_csls},
         {"sigma_f", to_json(r.sigma_f)},
         {"sigma_p", to_json(r.sigma_p)},
         {"csl", lattice_to_json(r.csl)}};
  if (r.p_split) j["p_split"] = json::array({r.p_split->first, r.p_split->second});
  return j;
}

EnumRecord record_from_json(const json& j) {
  EnumRecord r;
  r.lattice = parse_lattice_kind(j.at("lattice").get<std::string>());
  r.sigma = int_from_json(j.at("sigma"));
  r.representative = {quat_from_json(j.at("p")), quat_from_json(j.at("q"))};
  const auto& t = j.at("type");
  r.label_p = parse_label(t.at(0).get<std::string>());
  r.label_q = parse_label(t.at(1).get<std::string>());
  r.h_order = j.at("h_order").get<std::size_t>();
  r.g = j.at("g").get<std::size_t>();
  r.orbit_rotations = j.at("orbit_rotations").get<std::size_t>();
  r.distinct_csls = j.at("distinct_csls").get<std::size_t>();
  r.sigma_f = int_from_json(j.at("sigma_f"));
  r.sigma_p = int_from_json(j.at("sigma_p"));
  if (j.contains("p_split")) r.p_split = {j["p_split"].at(0).get<std::size_t>(), j["p_split"].at(1).get<std::size_t>()};
  r.csl = lattice_from_json(j.at("csl"));
  return r;
}

void write_records(std::ostream& out, const std::vector<EnumRecord>& recs, LatticeKind lattice, Format format) {
  if (format == Format::Json) {
    for (const auto& r : recs) out << to_json(r).dump() << '\n';
    return;
  }
  out << "sigma\tp0\tp1\tp2\tp3\tq0\tq1\tq2\tq3\ttype_p\ttype_q\th_order\tg\torbit_rotations\tdistinct_csls\tsigma_f\tsigma_p";
  if (lattice == LatticeKind::F) out << "\tsplit_odd\tsplit_even";
  out << "\tden";
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out << "\tb" << i << k;
  out << '\n';
  for (const auto& r : recs) {
    out << r.sigma;
    for (auto x : r.representative.p) out << '\t' << x;
    for (auto x : r.representative.q) out << '\t' << x;
    out << '\t' << index_of(r.label_p) << '\t' << index_of(r.label_q) << '\t' << r.h_order << '\t' << r.g << '\t'
        << r.orbit_rotations << '\t' << r.distinct_csls << '\t' << r.sigma_f << '\t' << r.sigma_p;
    if (lattice == LatticeKind::F) {
      const auto split = r.p_split.value_or(std::pair<std::size_t, std::size_t>{0, 0});
      out << '\t' << split.first << '\t' << split.second;
    }
    out << '\t' << r.csl.den();
    for (const auto& x : r.csl.basis().data()) out << '\t' << x;
    out << '\n';
  }
}

} // namespace csl4::cli
