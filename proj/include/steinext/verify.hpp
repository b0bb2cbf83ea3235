#pragma once

// Exhaustive method-agreement sweeps for one root system and ring. Per-pair
// work runs either serially or as an OpenMP loop; both produce the same
// rows in the same order.

#include "steinext/extengine.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace steinext {

struct CheckRow {
  std::string check;
  SubsetMask I;
  SubsetMask J;
  bool ok = true;
  bool ring_failure = false;  // a RingAssumptionError surfaced inside the check
  std::string detail;

  friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

bool row_less(const CheckRow& a, const CheckRow& b);

struct PairJob {
  SubsetMask I;
  SubsetMask J;
};

struct SweepContext {
  const RootSystem* rs = nullptr;
  RingSpec spec;
  const WeylGroup* group = nullptr;  // strata checks run only when set
};

// Checks for one (I, J): Ext(v_I, v_J) complex vs closed, Ext(v_I, i_J)
// complex vs closed, and, with a Weyl group, the Bruhat strata.
std::vector<CheckRow> check_pair(const SweepContext& ctx, PairJob job);
// Checks for one I: H^*(G, v_I) complex vs closed, exactness of the lower
// exterior rows, the constant lattice complex, and Ext(v_I, v_Δ).
std::vector<CheckRow> check_subset(const SweepContext& ctx, SubsetMask I);

std::vector<CheckRow> sweep_pairs_serial(const SweepContext& ctx, const std::vector<PairJob>& jobs);
std::vector<CheckRow> sweep_pairs_parallel(const SweepContext& ctx, const std::vector<PairJob>& jobs, int threads);

std::vector<PairJob> all_pair_jobs(int rank);

struct VerifyOptions {
  bool all_pairs = true;
  SubsetMask I;  // used when !all_pairs
  SubsetMask J;
  int strata_max_rank = 3;
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

struct VerifyReport {
  std::string type;
  std::string ring;
  ConditionReport ring_report;
  std::size_t pair_checks = 0;
  std::size_t subset_checks = 0;
  bool strata_checked = false;
  std::vector<CheckRow> rows;  // sorted

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Throws RingAssumptionError before any sweep if the ring fails the bon or
// banal_proxy checks, or if one surfaces during the sweep.
VerifyReport run_verify(const RootSystem& rs, const RingSpec& spec, const VerifyOptions& opts);

}  // namespace steinext
