#include "steinext/cli.hpp"

#include "steinext/emit.hpp"
#include "steinext/errors.hpp"
#include "steinext/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace steinext {

namespace {

struct CommandConfig {
  std::string type;
  std::string I;
  std::string J;
  std::string ring = "Q";
  int center_rank = 0;
  std::string method = "closed";
  std::string format = "json";
  std::string cache_dir;
  std::string of = "v";
  bool dump_complex = false;
  bool assume_theta = false;
  bool all_pairs = false;
  int parallel = 1;
  int strata_max_rank = 3;
  int k = 0;
  std::string perm;
};

const char* kLabeling =
    "Simple roots are 0-based in Bourbaki order: A_n, B_n, C_n chains 0-...-(n-1) "
    "(B_n: short root n-1; C_n: long root n-1); D_n: chain 0-...-(n-2) with n-1 attached to n-3; "
    "E_n: 0-2-3-...-(n-1) with 1 attached to 3; F4: 0-1=>2-3; G2: 0 short, 1 long.";

SubsetMask parse_subset(const std::string& text, int rank, const char* what) {
  SubsetMask s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad index '") + item + "' in --" + what);
    }
    if (pos != item.size() || v < 0 || v >= rank)
      throw ConfigError(std::string("index '") + item + "' in --" + what + " outside 0.." + std::to_string(rank - 1));
    s = s.with(v);
  }
  return s;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    try {
      out.push_back(std::stoi(item, &pos));
    } catch (const std::exception&) {
      throw ConfigError("bad integer '" + item + "'");
    }
    if (pos != item.size()) throw ConfigError("bad integer '" + item + "'");
  }
  return out;
}

Format parse_format(const std::string& f) { return f == "tsv" ? Format::tsv : Format::json; }

std::optional<std::filesystem::path> cache_dir(const CommandConfig& cfg) {
  if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
  if (const char* env = std::getenv("STEINEXT_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

WeylGroup weyl_for(const RootSystem& rs, const CommandConfig& cfg) {
  auto dir = cache_dir(cfg);
  return dir ? cached_weyl_group(*dir, rs) : generate_weyl(rs);
}

Json trace_json(const ExtTrace& trace) {
  Json a = Json::array();
  for (const auto& item : trace.items) {
    Json h = Json::array();
    for (const auto& g : item.homology.degrees) h.push_back(to_json(g));
    a.push_back(Json{{"name", item.name}, {"complex", to_json(item.complex)}, {"homology", h}});
  }
  return a;
}

// Shared driver for the three queries that have closed and complex routes.
using Route = std::function<ExtTable(Method, ExtTrace*)>;

int run_two_route(const CommandConfig& cfg, const TableQuery& query, const Route& route, std::ostream& out,
                  std::ostream& err) {
  const Format format = parse_format(cfg.format);
  if (cfg.dump_complex && format != Format::json) throw ConfigError("--dump-complex needs --format json");
  ExtTrace trace;
  const bool want_trace = cfg.dump_complex || cfg.method == "both";
  ExtTable table;
  std::string method_name;
  if (cfg.method == "closed") {
    table = route(Method::closed_form, nullptr);
    method_name = to_string(Method::closed_form);
  } else if (cfg.method == "complex") {
    table = route(Method::complex_built, want_trace ? &trace : nullptr);
    method_name = to_string(Method::complex_built);
  } else {
    ExtTable closed = route(Method::closed_form, nullptr);
    ExtTable built = route(Method::complex_built, &trace);
    method_name = "both";
    if (!closed.same_modules(built)) {
      Json report{{"error", "verification_failure"},
                  {"closed_form", to_json(closed, query, to_string(Method::closed_form))},
                  {"complex_built", to_json(built, query, to_string(Method::complex_built))},
                  {"complexes", trace_json(trace)}};
      err << report.dump(2) << "\n";
      return kExitMismatch;
    }
    table = closed;
    table.within_hypotheses = built.within_hypotheses;
  }
  if (!table.within_hypotheses) err << "note: ring " << query.ring.to_string() << " is outside the bon/banal hypotheses\n";
  if (format == Format::tsv) {
    out << table_tsv(table);
    return kExitOk;
  }
  Json j = to_json(table, query, method_name);
  if (cfg.dump_complex) j["complexes"] = trace_json(trace);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_ext(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_root_system(cfg.type);
  const RingSpec spec = parse_ring(cfg.ring);
  const SubsetMask I = parse_subset(cfg.I, rs.rank(), "I"), J = parse_subset(cfg.J, rs.rank(), "J");
  if (cfg.center_rank < 0) throw ConfigError("--center-rank must be non-negative");
  TableQuery q{&rs, I, J, spec, cfg.center_rank};
  return run_two_route(cfg, q,
                       [&](Method m, ExtTrace* t) { return ext_steinberg(rs, I, J, spec, m, cfg.center_rank, t); },
                       out, err);
}

int cmd_ext_vi(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_root_system(cfg.type);
  const RingSpec spec = parse_ring(cfg.ring);
  const SubsetMask I = parse_subset(cfg.I, rs.rank(), "I"), J = parse_subset(cfg.J, rs.rank(), "J");
  TableQuery q{&rs, I, J, spec, 0};
  return run_two_route(cfg, q, [&](Method m, ExtTrace* t) { return ext_v_to_induced(rs, I, J, spec, m, t); }, out,
                       err);
}

int cmd_cohomology(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_root_system(cfg.type);
  const RingSpec spec = parse_ring(cfg.ring);
  const SubsetMask I = parse_subset(cfg.I, rs.rank(), "I");
  TableQuery q{&rs, I, I, spec, cfg.center_rank};
  if (cfg.of == "v")
    return run_two_route(cfg, q, [&](Method m, ExtTrace* t) { return cohomology_v(rs, I, spec, m, t); }, out, err);
  if (cfg.method != "closed") throw ConfigError("--of " + cfg.of + " has only the closed form");
  ExtTable table = cfg.of == "induced" ? induced_cohomology(rs, I, spec)
                                       : trivial_cohomology(rs, spec, cfg.center_rank);
  out << emit_table(table, q, to_string(Method::closed_form), parse_format(cfg.format));
  return kExitOk;
}

int cmd_ext_induced(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_root_system(cfg.type);
  const RingSpec spec = parse_ring(cfg.ring);
  const SubsetMask I = parse_subset(cfg.I, rs.rank(), "I"), J = parse_subset(cfg.J, rs.rank(), "J");
  TableQuery q{&rs, I, J, spec, 0};
  ExtTable closed = ext_induced_closed(rs, I, J, spec);
  if (cfg.method == "closed") {
    out << emit_table(closed, q, to_string(Method::closed_form), parse_format(cfg.format));
    return kExitOk;
  }
  const WeylGroup group = weyl_for(rs, cfg);
  std::vector<VanishingCertificate> certs;
  ExtTable via = ext_induced_via_strata(group, I, J, spec, &certs);
  if (cfg.method == "both" && !via.same_modules(closed)) {
    err << "verification failure: strata " << via.to_string() << " vs closed " << closed.to_string() << "\n";
    return kExitMismatch;
  }
  if (parse_format(cfg.format) == Format::tsv) {
    out << table_tsv(via);
    return kExitOk;
  }
  Json j = to_json(via, q, cfg.method == "both" ? "both" : "strata");
  Json c = Json::array();
  for (const auto& cert : certs) c.push_back(to_json(cert));
  j["certificates"] = c;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_dcosets(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  const RootSystem rs = parse_root_system(cfg.type);
  const SubsetMask I = parse_subset(cfg.I, rs.rank(), "I"), J = parse_subset(cfg.J, rs.rank(), "J");
  const WeylGroup group = weyl_for(rs, cfg);
  const auto reps = kostant_reps(group, I, J);
  if (parse_format(cfg.format) == Format::tsv) {
    out << "length\tcoset_size\tlevi\tgamma\tdelta\n";
    for (const auto& r : reps)
      out << r.length << '\t' << r.coset_size << '\t' << r.levi.to_string() << '\t' << r.gamma_exp.to_string() << '\t'
          << r.delta_exp.to_string() << '\n';
    return kExitOk;
  }
  Json a = Json::array();
  for (const auto& r : reps) a.push_back(to_json(r, rs));
  std::vector<int> Iidx = I.indices(), Jidx = J.indices();
  Json j{{"type", rs.name()}, {"I", Iidx}, {"J", Jidx}, {"weyl_order", group.size()}, {"reps", a}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_check_ring(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  const RootSystem rs = parse_root_system(cfg.type);
  const RingSpec spec = parse_ring(cfg.ring);
  const ConditionReport report = check_ring(rs, spec, cfg.assume_theta);
  if (parse_format(cfg.format) == Format::tsv) {
    out << "condition\tok\n"
        << "bon\t" << (report.bon.ok ? "true" : "false") << "\n"
        << "banal_proxy\t" << (report.banal_proxy.ok ? "true" : "false") << "\n"
        << "assumption3\t" << (report.assumption3 ? "true" : "false") << "\n";
    return kExitOk;
  }
  out << to_json(report, rs, spec).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const RootSystem rs = parse_root_system(cfg.type);
  const RingSpec spec = parse_ring(cfg.ring);
  VerifyOptions opts;
  opts.all_pairs = cfg.all_pairs;
  if (!cfg.all_pairs) {
    opts.I = parse_subset(cfg.I, rs.rank(), "I");
    opts.J = parse_subset(cfg.J, rs.rank(), "J");
  }
  if (cfg.parallel < 1) throw ConfigError("--parallel must be at least 1");
  opts.threads = cfg.parallel;
  opts.strata_max_rank = cfg.strata_max_rank;
  opts.cache_dir = cache_dir(cfg);
  const VerifyReport report = run_verify(rs, spec, opts);
  if (parse_format(cfg.format) == Format::tsv) {
    out << "check\tI\tJ\tok\tdetail\n";
    for (const auto& r : report.rows)
      out << r.check << '\t' << r.I.to_string() << '\t' << r.J.to_string() << '\t' << (r.ok ? "ok" : "FAIL") << '\t'
          << r.detail << '\n';
  } else {
    out << to_json(report).dump(2) << "\n";
  }
  err << report.type << " over " << report.ring << ": " << report.pair_checks << " pair checks, "
      << report.failures() << " failures\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_zelevinsky(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.k < 2) throw ConfigError("--k must be at least 2");
  const RingSpec spec = parse_ring(cfg.ring);
  const SubsetMask I = parse_subset(cfg.I, cfg.k - 1, "I"), J = parse_subset(cfg.J, cfg.k - 1, "J");
  const Orientation oi = orientation_from_subset(cfg.k, I), oj = orientation_from_subset(cfg.k, J);
  if (subset_from_orientation(oi) != I || subset_from_orientation(oj) != J)
    throw VerificationFailure("orientation round trip failed");
  const ExtTable table = ext_cuspidal_line(cfg.k, I, J, spec);
  const RootSystem rs = build_root_system(Series::A, cfg.k - 1);
  TableQuery q{&rs, I, J, spec, 1};
  if (parse_format(cfg.format) == Format::tsv) {
    out << table_tsv(table);
    return kExitOk;
  }
  Json j = to_json(table, q, to_string(Method::closed_form));
  j["k"] = cfg.k;
  j["orientation_I"] = oi.to_string();
  j["orientation_J"] = oj.to_string();
  if (!cfg.perm.empty()) {
    const auto w = parse_ints(cfg.perm);
    j["orientation_perm"] = orientation_from_permutation(cfg.k, w).to_string();
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_roots(const CommandConfig& cfg, std::ostream& out, std::ostream&) {
  out << to_json(parse_root_system(cfg.type)).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Ext groups between generalized Steinberg representations"};
  app.footer(kLabeling);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Root system type, e.g. A2, B3, G2")->required();
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", cfg.ring, "Coefficients: Q, Q,q=<pk> or q=<pk>,d=<n>")->capture_default_str();
  };
  auto add_subsets = [&](CLI::App* sub) {
    sub->add_option("--I", cfg.I, "Subset I of simple roots, comma-separated 0-based indices");
    sub->add_option("--J", cfg.J, "Subset J of simple roots, comma-separated 0-based indices");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  };
  auto add_method = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--method", cfg.method, "Computation route")->check(CLI::IsMember(allowed))->capture_default_str();
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "Weyl group cache directory (or STEINEXT_CACHE_DIR)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->footer(kLabeling);
    sub->add_flag("--assume-theta", cfg.assume_theta, "Acknowledge that Theta_M is an isomorphism after base change");
  };

  CLI::App* ext = app.add_subcommand("ext", "Ext^*(v_{P_I}, v_{P_J})");
  add_type(ext), add_ring(ext), add_subsets(ext), add_format(ext), add_method(ext, {"closed", "complex", "both"});
  add_common(ext);
  ext->add_option("--center-rank", cfg.center_rank, "Rank of the center Z(G)");
  ext->add_flag("--dump-complex", cfg.dump_complex, "Include the built complexes in the JSON output");

  CLI::App* ext_induced = app.add_subcommand("ext-induced", "Ext^*(i_{P_I}, i_{P_J}), closed or via Bruhat strata");
  add_type(ext_induced), add_ring(ext_induced), add_subsets(ext_induced), add_format(ext_induced);
  add_method(ext_induced, {"closed", "complex", "both"}), add_cache(ext_induced), add_common(ext_induced);

  CLI::App* ext_vi = app.add_subcommand("ext-vi", "Ext^*(v_{P_I}, i_{P_J})");
  add_type(ext_vi), add_ring(ext_vi), add_subsets(ext_vi), add_format(ext_vi);
  add_method(ext_vi, {"closed", "complex", "both"}), add_common(ext_vi);
  ext_vi->add_flag("--dump-complex", cfg.dump_complex, "Include the built complexes in the JSON output");

  CLI::App* coh = app.add_subcommand("cohomology", "H^*(G, v_{P_I}), H^*(G, i_{P_I}) or H^*(G, 1)");
  add_type(coh), add_ring(coh), add_format(coh), add_method(coh, {"closed", "complex", "both"}), add_common(coh);
  coh->add_option("--I", cfg.I, "Subset I, comma-separated 0-based indices");
  coh->add_option("--of", cfg.of, "Module: v, induced or trivial")
      ->check(CLI::IsMember({"v", "induced", "trivial"}))
      ->capture_default_str();
  coh->add_option("--center-rank", cfg.center_rank, "Rank of the center (trivial module only)");
  coh->add_flag("--dump-complex", cfg.dump_complex, "Include the built complexes in the JSON output");

  CLI::App* dcosets = app.add_subcommand("dcosets", "Minimal-length W_I\\W/W_J representatives with exponents");
  add_type(dcosets), add_subsets(dcosets), add_format(dcosets), add_cache(dcosets), add_common(dcosets);

  CLI::App* check = app.add_subcommand("check-ring", "Report the bon and banal_proxy conditions");
  add_type(check), add_ring(check), add_format(check), add_common(check);

  CLI::App* verify = app.add_subcommand("verify", "Method-agreement sweep for one type and ring");
  add_type(verify), add_ring(verify), add_subsets(verify), add_format(verify), add_cache(verify), add_common(verify);
  verify->add_flag("--all-pairs", cfg.all_pairs, "Check every pair (I, J)");
  verify->add_option("--parallel", cfg.parallel, "Worker threads for the pair sweep")->capture_default_str();
  verify->add_option("--strata-max-rank", cfg.strata_max_rank, "Largest rank for the Bruhat-strata checks")
      ->capture_default_str();

  CLI::App* zel = app.add_subcommand("zelevinsky", "Segment-graph orientations and Ext for a cuspidal line");
  zel->add_option("--k", cfg.k, "Segment length k")->required();
  add_ring(zel), add_subsets(zel), add_format(zel), add_common(zel);
  zel->add_option("--perm", cfg.perm, "Permutation of 0..k-1, comma-separated");

  CLI::App* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
  add_type(roots), add_common(roots);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (ext->parsed()) return cmd_ext(cfg, out, err);
    if (ext_induced->parsed()) return cmd_ext_induced(cfg, out, err);
    if (ext_vi->parsed()) return cmd_ext_vi(cfg, out, err);
    if (coh->parsed()) return cmd_cohomology(cfg, out, err);
    if (dcosets->parsed()) return cmd_dcosets(cfg, out, err);
    if (check->parsed()) return cmd_check_ring(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (zel->parsed()) return cmd_zelevinsky(cfg, out, err);
    if (roots->parsed()) return cmd_roots(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RingAssumptionError& e) {
    err << "ring assumption error: " << e.what() << "\n";
    return kExitRing;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const ContractError& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitMismatch;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace steinext
