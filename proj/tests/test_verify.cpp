#include "steinext/verify.hpp"

#include <doctest.h>

using namespace steinext;

TEST_CASE("serial and OpenMP sweeps agree row for row") {
  for (const char* t : {"A3", "B3", "G2"}) {
    const RootSystem rs = parse_root_system(t);
    const WeylGroup W = generate_weyl(rs);
    SweepContext ctx{&rs, parse_ring("q=5,d=23"), &W};
    const auto jobs = all_pair_jobs(rs.rank());
    const auto serial = sweep_pairs_serial(ctx, jobs);
    for (int threads : {1, 2, 4}) CHECK(sweep_pairs_parallel(ctx, jobs, threads) == serial);
    CHECK(std::all_of(serial.begin(), serial.end(), [](const CheckRow& r) { return r.ok; }));
    CHECK(serial.size() == 3 * jobs.size());
  }
}

TEST_CASE("single-pair verify") {
  const RootSystem rs = parse_root_system("C3");
  VerifyOptions opts;
  opts.all_pairs = false;
  opts.I = SubsetMask(0b001);
  opts.J = SubsetMask(0b110);
  const auto report = run_verify(rs, parse_ring("Q"), opts);
  CHECK(report.ok());
  CHECK(report.pair_checks == 1);
  CHECK(report.subset_checks == 2);
}

TEST_CASE("rank above the strata limit skips the strata checks") {
  VerifyOptions opts;
  opts.strata_max_rank = 2;
  const auto report = run_verify(parse_root_system("A3"), parse_ring("Q"), opts);
  CHECK_FALSE(report.strata_checked);
  CHECK(report.ok());
  CHECK(std::none_of(report.rows.begin(), report.rows.end(), [](const CheckRow& r) { return r.check == "strata"; }));
}
