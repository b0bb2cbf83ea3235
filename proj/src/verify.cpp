#include "steinext/verify.hpp"

#include "steinext/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <omp.h>

namespace steinext {

bool row_less(const CheckRow& a, const CheckRow& b) {
  return std::tuple(a.I.bits(), a.J.bits(), a.check) < std::tuple(b.I.bits(), b.J.bits(), b.check);
}

namespace {

// Runs `body`; any library error becomes a failed row.
template <class F>
CheckRow guarded(std::string name, SubsetMask I, SubsetMask J, F&& body) {
  CheckRow row{std::move(name), I, J, true, false, {}};
  try {
    body(row);
  } catch (const RingAssumptionError& e) {
    row.ok = false;
    row.ring_failure = true;
    row.detail = e.what();
  } catch (const std::exception& e) {
    row.ok = false;
    row.detail = e.what();
  }
  return row;
}

void compare(CheckRow& row, const ExtTable& built, const ExtTable& closed) {
  if (!built.same_modules(closed)) {
    row.ok = false;
    row.detail = "complex " + built.to_string() + " vs closed " + closed.to_string();
    return;
  }
  if (!built.torsion_free()) {
    row.ok = false;
    row.detail = "torsion in " + built.to_string();
    return;
  }
  row.detail = built.to_string();
}

}  // namespace

std::vector<CheckRow> check_pair(const SweepContext& ctx, PairJob job) {
  const RootSystem& rs = *ctx.rs;
  const auto [I, J] = job;
  std::vector<CheckRow> rows;

  rows.push_back(guarded("ext_steinberg", I, J, [&](CheckRow& row) {
    ExtTable closed = ext_steinberg(rs, I, J, ctx.spec, Method::closed_form);
    ExtTable built = ext_steinberg(rs, I, J, ctx.spec, Method::complex_built);
    compare(row, built, closed);
    const int i0 = (I | J).size() - (I & J).size();
    if (row.ok && (closed.entries.size() != 1 || closed.rank_at(i0) != 1)) {
      row.ok = false;
      row.detail = "closed form not concentrated in degree " + std::to_string(i0);
    }
  }));

  rows.push_back(guarded("ext_v_to_induced", I, J, [&](CheckRow& row) {
    compare(row, ext_v_to_induced(rs, I, J, ctx.spec, Method::complex_built),
            ext_v_to_induced(rs, I, J, ctx.spec, Method::closed_form));
  }));

  if (ctx.group) {
    rows.push_back(guarded("strata", I, J, [&](CheckRow& row) {
      std::vector<VanishingCertificate> certs;
      ExtTable via = ext_induced_via_strata(*ctx.group, I, J, ctx.spec, &certs);
      compare(row, via, ext_induced_closed(rs, I, J, ctx.spec));
      if (!row.ok) return;
      // Dichotomy: exactly the identity stratum with J ⊆ I lacks a certificate.
      const auto reps = kostant_reps(*ctx.group, I, J);
      const std::size_t survivors = reps.size() - certs.size();
      const std::size_t expected = J.subset_of(I) ? 1 : 0;
      bool identity_certified = false;
      for (const auto& c : certs)
        if (c.rep.w.is_identity()) identity_certified = true;
      if (survivors != expected || (expected == 1 && identity_certified)) {
        row.ok = false;
        row.detail = std::to_string(survivors) + " uncertified strata, expected " + std::to_string(expected);
        return;
      }
      row.detail += " strata=" + std::to_string(reps.size());
    }));
  }
  return rows;
}

std::vector<CheckRow> check_subset(const SweepContext& ctx, SubsetMask I) {
  const RootSystem& rs = *ctx.rs;
  const SubsetMask delta = rs.full_mask();
  std::vector<CheckRow> rows;

  rows.push_back(guarded("cohomology_v", I, I, [&](CheckRow& row) {
    compare(row, cohomology_v(rs, I, ctx.spec, Method::complex_built),
            cohomology_v(rs, I, ctx.spec, Method::closed_form));
  }));

  rows.push_back(guarded("exterior_rows_exact", I, I, [&](CheckRow& row) {
    const int nI = (delta - I).size();
    for (int t = 0; t < nI; ++t) {
      HomologyResult h = homology_with_coefficients(exterior_row_complex(rs.rank(), I, t), ctx.spec);
      if (!h.is_zero()) {
        row.ok = false;
        row.detail = "row t=" + std::to_string(t) + " not exact";
        return;
      }
    }
    row.detail = std::to_string(nI) + " rows exact";
  }));

  rows.push_back(guarded("constant_lattice", I, I, [&](CheckRow& row) {
    HomologyResult h = homology_with_coefficients(constant_lattice_complex(rs.rank(), I), ctx.spec);
    const bool expect_exact = I != delta;
    const bool good = expect_exact ? h.is_zero()
                                   : (h.degrees.size() == 1 && h.degrees[0].free_rank == 1 &&
                                      h.degrees[0].torsion.empty());
    if (!good) {
      row.ok = false;
      row.detail = expect_exact ? "not exact" : "expected R in degree 0";
    }
  }));

  rows.push_back(guarded("ext_steinberg_vs_trivial", I, delta, [&](CheckRow& row) {
    ExtTable expected;
    expected.add_free((delta - I).size(), 1);
    compare(row, ext_steinberg(rs, I, delta, ctx.spec, Method::complex_built), expected);
  }));
  return rows;
}

std::vector<PairJob> all_pair_jobs(int rank) {
  std::vector<PairJob> jobs;
  const auto subsets = all_subsets(rank);
  for (SubsetMask I : subsets)
    for (SubsetMask J : subsets) jobs.push_back({I, J});
  return jobs;
}

std::vector<CheckRow> sweep_pairs_serial(const SweepContext& ctx, const std::vector<PairJob>& jobs) {
  std::vector<CheckRow> rows;
  for (const PairJob& job : jobs) {
    auto part = check_pair(ctx, job);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::vector<CheckRow> sweep_pairs_parallel(const SweepContext& ctx, const std::vector<PairJob>& jobs, int threads) {
  std::vector<std::vector<CheckRow>> parts(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (long k = 0; k < n; ++k) parts[k] = check_pair(ctx, jobs[k]);
  std::vector<CheckRow> rows;
  for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.ok; }));
}

VerifyReport run_verify(const RootSystem& rs, const RingSpec& spec, const VerifyOptions& opts) {
  VerifyReport report;
  report.type = rs.name();
  report.ring = spec.to_string();
  report.ring_report = check_ring(rs, spec);
  if (!report.ring_report.hypotheses_hold()) {
    std::string why;
    if (!report.ring_report.bon.ok)
      why = "bon fails: 1 - q^" + std::to_string(*report.ring_report.bon.failing_r) + " = " +
            report.ring_report.bon.failing_factor.get_str() + " is not a unit";
    else
      why = "banal_proxy fails";
    throw RingAssumptionError(rs.name() + " over " + spec.to_string() + ": " + why +
                              "; closed forms are not asserted outside the hypotheses");
  }

  std::optional<WeylGroup> group;
  if (rs.rank() <= opts.strata_max_rank)
    group = opts.cache_dir ? cached_weyl_group(*opts.cache_dir, rs) : generate_weyl(rs);
  SweepContext ctx{&rs, spec, group ? &*group : nullptr};
  report.strata_checked = group.has_value();

  std::vector<PairJob> jobs;
  if (opts.all_pairs)
    jobs = all_pair_jobs(rs.rank());
  else
    jobs.push_back({opts.I, opts.J});
  report.pair_checks = jobs.size();
  report.rows = opts.threads > 1 ? sweep_pairs_parallel(ctx, jobs, opts.threads) : sweep_pairs_serial(ctx, jobs);

  std::vector<SubsetMask> subsets;
  if (opts.all_pairs)
    subsets = all_subsets(rs.rank());
  else {
    subsets.push_back(opts.I);
    if (opts.J != opts.I) subsets.push_back(opts.J);
  }
  report.subset_checks = subsets.size();
  for (SubsetMask I : subsets) {
    auto part = check_subset(ctx, I);
    report.rows.insert(report.rows.end(), part.begin(), part.end());
  }

  // Symmetry of Ext between generalized Steinberg representations.
  if (opts.all_pairs) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::string> seen;
    for (const auto& r : report.rows)
      if (r.check == "ext_steinberg" && r.ok) seen[{r.I.bits(), r.J.bits()}] = r.detail;
    for (const auto& [key, detail] : seen) {
      if (key.first >= key.second) continue;
      auto it = seen.find({key.second, key.first});
      CheckRow row{"ext_steinberg_symmetry", SubsetMask(key.first), SubsetMask(key.second), true, false, detail};
      if (it == seen.end() || it->second != detail) {
        row.ok = false;
        row.detail = detail + " vs " + (it == seen.end() ? std::string("missing") : it->second);
      }
      report.rows.push_back(row);
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), row_less);

  for (const auto& r : report.rows)
    if (r.ring_failure) throw RingAssumptionError(r.check + " " + r.I.to_string() + "," + r.J.to_string() + ": " + r.detail);
  return report;
}

}  // namespace steinext
