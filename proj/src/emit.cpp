#include "steinext/emit.hpp"

#include <sstream>

namespace steinext {

namespace {

Json indices(SubsetMask s) {
  Json a = Json::array();
  for (int i : s.indices()) a.push_back(i);
  return a;
}

Json coords(const CharacterVector& v) {
  Json a = Json::array();
  for (auto c : v.coords) a.push_back(c);
  return a;
}

const char* series_letter(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E: return "E";
    case Series::F: return "F";
    case Series::G: return "G";
  }
  return "?";
}

}  // namespace

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const HomologyGroup& g) {
  Json t = Json::array();
  for (const auto& e : g.torsion) t.push_back(to_json(e));
  return Json{{"rank", g.free_rank}, {"torsion", t}};
}

Json to_json(const ExtTable& table, const TableQuery& query, const std::string& method) {
  Json q;
  q["series"] = series_letter(query.rs->series());
  q["rank"] = query.rs->rank();
  q["I"] = indices(query.I);
  q["J"] = indices(query.J);
  q["ring"] = query.ring.to_string();
  q["center_rank"] = query.center_rank;
  Json t = Json::object();
  for (const auto& [deg, g] : table.entries) t[std::to_string(deg)] = to_json(g);
  Json out;
  out["query"] = q;
  out["method"] = method;
  out["within_hypotheses"] = table.within_hypotheses;
  out["table"] = t;
  return out;
}

Json to_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (const auto& row : rs.cartan()) cartan.push_back(row);
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(coords(r));
  return Json{{"series", series_letter(rs.series())}, {"rank", rs.rank()}, {"cartan", cartan}, {"positive_roots", roots}};
}

Json to_json(const ChainComplex& c) {
  Json diffs = Json::array();
  for (const auto& d : c.differentials) {
    Json m = Json::array();
    for (const auto& x : d.data()) m.push_back(to_json(x));
    diffs.push_back(m);
  }
  return Json{{"ranks", c.ranks}, {"differentials", diffs}, {"labels", c.labels}};
}

Json to_json(const ConditionReport& report, const RootSystem& rs, const RingSpec& spec) {
  Json bon{{"ok", report.bon.ok}, {"n_max", report.bon.n_max}};
  Json banal{{"ok", report.banal_proxy.ok},
             {"degrees", report.banal_proxy.degrees},
             {"p_divides_d", report.banal_proxy.p_divides_d}};
  Json witness = Json::object();
  if (report.bon.failing_r) {
    witness["bon_r"] = *report.bon.failing_r;
    witness["bon_factor"] = to_json(report.bon.failing_factor);  // 1 - q^r
    witness["bon_factor_mod"] = to_json(reduce(report.bon.failing_factor, spec));
  }
  if (report.banal_proxy.p_divides_d) witness["banal_p"] = spec.p;
  if (report.banal_proxy.failing_degree) {
    witness["banal_degree"] = *report.banal_proxy.failing_degree;
    witness["banal_divisor"] = to_json(report.banal_proxy.failing_divisor);
  }
  Json out;
  out["type"] = rs.name();
  out["ring"] = spec.to_string();
  out["bon"] = bon;
  out["banal_proxy"] = banal;
  out["assumption3"] = report.assumption3;
  out["assumption4_asserted"] = report.assumption4_asserted;
  out["witness"] = witness;
  out["notes"] = report.notes;
  return out;
}

Json to_json(const DoubleCosetRep& rep, const RootSystem& rs) {
  Json action = Json::array();
  for (int m = 0; m < static_cast<int>(rs.positive_roots().size()); ++m) {
    SignedRoot r = rep.w.image(m);
    action.push_back(r.positive ? r.index + 1 : -(r.index + 1));
  }
  return Json{{"length", rep.length},         {"action", action},
              {"levi", indices(rep.levi)},     {"coset_size", rep.coset_size},
              {"gamma", coords(rep.gamma_exp)}, {"delta", coords(rep.delta_exp)}};
}

Json to_json(const VanishingCertificate& cert) {
  Json out;
  out["length"] = cert.rep.length;
  out["beta"] = cert.beta_index ? Json(*cert.beta_index) : Json(nullptr);
  out["exponent"] = cert.exponent;
  out["unit_value"] = to_json(cert.unit_value);
  out["from_delta"] = cert.from_delta;
  return out;
}

Json to_json(const VerifyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"check", r.check}, {"I", indices(r.I)}, {"J", indices(r.J)}, {"ok", r.ok}, {"detail", r.detail}});
  Json out;
  out["type"] = report.type;
  out["ring"] = report.ring;
  out["pair_checks"] = report.pair_checks;
  out["subset_checks"] = report.subset_checks;
  out["strata_checked"] = report.strata_checked;
  out["failures"] = report.failures();
  out["ok"] = report.ok();
  out["rows"] = rows;
  return out;
}

std::string table_tsv(const ExtTable& table) {
  std::ostringstream os;
  os << "degree\trank\ttorsion\n";
  for (const auto& [deg, g] : table.entries) {
    os << deg << '\t' << g.free_rank << '\t';
    for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? "," : "") << g.torsion[i].get_str();
    os << '\n';
  }
  return os.str();
}

std::string emit_table(const ExtTable& table, const TableQuery& query, const std::string& method, Format format) {
  if (format == Format::tsv) return table_tsv(table);
  return to_json(table, query, method).dump(2) + "\n";
}

}  // namespace steinext
