#include "steinext/errors.hpp"
#include "steinext/extengine.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace steinext;

namespace {

const RingSpec Q = parse_ring("Q");
const RingSpec Z5 = parse_ring("q=3,d=5");
const RingSpec Z23 = parse_ring("q=5,d=23");

ExtTable free_table(std::initializer_list<std::pair<int, std::size_t>> entries) {
  ExtTable t;
  for (auto [d, r] : entries) t.add_free(d, r);
  return t;
}

}  // namespace

TEST_CASE("ExtTable bookkeeping") {
  ExtTable t = free_table({{2, 1}, {1, 1}});
  CHECK(t.to_string() == "{1:1, 2:1}");
  t.add_free(3, 0);
  CHECK(t.entries.size() == 2);
  CHECK(t.rank_at(5) == 0);
  CHECK(free_table({}).empty());
  CHECK_THROWS_AS(t.add_free(-1, 1), ContractError);
}

TEST_CASE("closed forms for induced representations") {
  const RootSystem a2 = parse_root_system("A2");
  CHECK(ext_induced_closed(a2, a2.full_mask(), SubsetMask(), Q).same_modules(free_table({{0, 1}, {1, 2}, {2, 1}})));
  CHECK(ext_induced_closed(a2, SubsetMask(1), SubsetMask(2), Q).empty());
  CHECK(ext_induced_closed(a2, SubsetMask(1), SubsetMask(1), Q).same_modules(free_table({{0, 1}, {1, 1}})));
  CHECK(induced_cohomology(a2, SubsetMask(), Q).same_modules(free_table({{0, 1}, {1, 2}, {2, 1}})));
  CHECK(trivial_cohomology(a2, Q, 2).same_modules(free_table({{0, 1}, {1, 2}, {2, 1}})));
  CHECK(trivial_cohomology(a2, Q, 0).same_modules(free_table({{0, 1}})));
}

TEST_CASE("degree shifts check the identity chain") {
  for (int rank = 1; rank <= 5; ++rank)
    for (SubsetMask I : all_subsets(rank))
      for (SubsetMask J : all_subsets(rank)) {
        const auto s = degree_shift(ShiftKind::ext_steinberg, rank, I, J);
        CHECK(s.expected == (I | J).size() - (I & J).size());
        CHECK(s.K == ((SubsetMask::full(rank) - I) | J));
      }
  CHECK(degree_shift(ShiftKind::cohomology_v, 3, SubsetMask(1), SubsetMask(1)).expected == 2);
  CHECK(degree_shift(ShiftKind::ext_v_to_induced, 2, SubsetMask(1), SubsetMask(2)).expected == 1);
  CHECK(degree_shift(ShiftKind::ext_v_to_induced, 2, SubsetMask(), SubsetMask(2)).expected == -1);
}

TEST_CASE("cohomology of generalized Steinberg representations") {
  const RootSystem a1 = parse_root_system("A1"), a2 = parse_root_system("A2");
  for (Method m : {Method::closed_form, Method::complex_built}) {
    CHECK(cohomology_v(a1, SubsetMask(), Q, m).same_modules(free_table({{1, 1}})));
    CHECK(cohomology_v(a2, a2.full_mask(), Z5, m).same_modules(free_table({{0, 1}})));
    CHECK(cohomology_v(a2, SubsetMask(1), Z5, m).same_modules(free_table({{1, 1}})));
  }
  ExtTrace trace;
  cohomology_v(a2, SubsetMask(), Q, Method::complex_built, &trace);
  CHECK(trace.items.size() == 3);
}

TEST_CASE("Ext from generalized Steinberg to induced") {
  const RootSystem a2 = parse_root_system("A2");
  for (Method m : {Method::closed_form, Method::complex_built}) {
    CHECK(ext_v_to_induced(a2, SubsetMask(1), SubsetMask(2), Q, m).same_modules(free_table({{1, 1}, {2, 1}})));
    CHECK(ext_v_to_induced(a2, SubsetMask(), SubsetMask(2), Q, m).empty());
    CHECK(ext_v_to_induced(a2, a2.full_mask(), SubsetMask(), Z5, m)
              .same_modules(free_table({{0, 1}, {1, 2}, {2, 1}})));
  }
}

TEST_CASE("Ext between generalized Steinberg representations") {
  const RootSystem a1 = parse_root_system("A1"), a2 = parse_root_system("A2");
  for (Method m : {Method::closed_form, Method::complex_built}) {
    CHECK(ext_steinberg(a1, SubsetMask(), a1.full_mask(), Q, m).same_modules(free_table({{1, 1}})));
    CHECK(ext_steinberg(a2, SubsetMask(1), SubsetMask(2), Z5, m).same_modules(free_table({{2, 1}})));
    CHECK(ext_steinberg(a2, SubsetMask(1), SubsetMask(2), Q, m, 1).same_modules(free_table({{2, 1}, {3, 1}})));
    for (SubsetMask I : all_subsets(2))
      CHECK(ext_steinberg(a2, I, I, Q, m).same_modules(free_table({{0, 1}})));
  }
  CHECK(ext_steinberg(a2, SubsetMask(1), SubsetMask(2), Q, Method::closed_form, 2)
            .same_modules(free_table({{2, 1}, {3, 2}, {4, 1}})));
}

TEST_CASE("symmetry and the consistency ladder, complex route") {
  for (const char* t : {"B3", "C3", "G2", "A4"}) {
    const RootSystem rs = parse_root_system(t);
    const auto subsets = all_subsets(rs.rank());
    for (SubsetMask I : subsets) {
      const auto top = ext_steinberg(rs, I, rs.full_mask(), Q, Method::complex_built);
      CHECK(top.same_modules(free_table({{(rs.full_mask() - I).size(), 1}})));
      for (SubsetMask J : subsets)
        CHECK(ext_steinberg(rs, I, J, Q, Method::complex_built)
                  .same_modules(ext_steinberg(rs, J, I, Q, Method::complex_built)));
    }
  }
}

TEST_CASE("hypotheses are labelled, not asserted") {
  const RootSystem a3 = parse_root_system("A3");
  const auto t = ext_steinberg(a3, SubsetMask(1), SubsetMask(2), Z5, Method::complex_built);
  CHECK_FALSE(t.within_hypotheses);
  CHECK(t.same_modules(free_table({{2, 1}})));
  CHECK(ext_steinberg(a3, SubsetMask(1), SubsetMask(2), Z23, Method::closed_form).within_hypotheses);
}

TEST_CASE("vanishing certificates") {
  const RootSystem a1 = parse_root_system("A1");
  const auto reps = kostant_reps(a1, SubsetMask(), SubsetMask());
  auto cert = vanishing_certificate(a1, reps[1], Z5);
  REQUIRE(cert.has_value());
  CHECK(cert->beta_index == 0);
  CHECK(cert->exponent == 1);
  CHECK(cert->unit_value == 2);
  CHECK_FALSE(cert->from_delta);
  CHECK_FALSE(vanishing_certificate(a1, reps[0], Z5).has_value());

  const RootSystem a2 = parse_root_system("A2");
  const auto reps2 = kostant_reps(a2, SubsetMask(1), SubsetMask(2));
  auto c2 = vanishing_certificate(a2, reps2.front(), Z5);
  REQUIRE(c2.has_value());
  CHECK(c2->from_delta);
  CHECK(c2->exponent != 0);

  // Over Z/2 with q = 3, q - 1 is not a unit.
  CHECK_THROWS_AS(vanishing_certificate(a1, reps[1], parse_ring("q=3,d=2")), RingAssumptionError);
}

TEST_CASE("strata reproduce the closed form and the dichotomy") {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const RootSystem rs = parse_root_system(t);
    const WeylGroup W = generate_weyl(rs);
    for (SubsetMask I : all_subsets(rs.rank()))
      for (SubsetMask J : all_subsets(rs.rank())) {
        CAPTURE(t);
        CAPTURE(I.to_string());
        CAPTURE(J.to_string());
        std::vector<VanishingCertificate> certs;
        const auto via = ext_induced_via_strata(W, I, J, Z23, &certs);
        CHECK(via.same_modules(ext_induced_closed(rs, I, J, Z23)));
        for (const auto& rep : kostant_reps(W, I, J)) {
          const bool survives = rep.w.is_identity() && J.subset_of(I);
          CHECK(vanishing_certificate(rs, rep, Z23).has_value() == !survives);
        }
      }
  }
  const RootSystem a2 = parse_root_system("A2");
  CHECK(ext_induced_via_strata(generate_weyl(a2), a2.full_mask(), SubsetMask(), Z5)
            .same_modules(ext_induced_closed(a2, a2.full_mask(), SubsetMask(), Z5)));
  const RootSystem a1 = parse_root_system("A1");
  CHECK(ext_induced_via_strata(generate_weyl(a1), SubsetMask(), a1.full_mask(), Z5).empty());
  CHECK(ext_induced_via_strata(generate_weyl(a1), a1.full_mask(), a1.full_mask(), Z5)
            .same_modules(free_table({{0, 1}})));
}

TEST_CASE("orientations of the segment graph") {
  CHECK(orientation_from_subset(3, SubsetMask(1)).to_string() == "FB");
  CHECK(orientation_from_subset(2, SubsetMask()).to_string() == "B");
  CHECK(orientation_from_subset(4, SubsetMask::full(3)).to_string() == "FFF");
  for (int k = 1; k <= 8; ++k)
    for (SubsetMask I : all_subsets(k - 1)) CHECK(subset_from_orientation(orientation_from_subset(k, I)) == I);

  const int id[] = {0, 1, 2, 3};
  const int rev[] = {3, 2, 1, 0};
  const int swap01[] = {1, 0, 2};
  CHECK(orientation_from_permutation(4, id).to_string() == "FFF");
  CHECK(orientation_from_permutation(4, rev).to_string() == "BBB");
  CHECK(orientation_from_permutation(3, swap01).to_string() == "BF");
  const int bad[] = {0, 0, 1};
  CHECK_THROWS_AS(orientation_from_permutation(3, bad), ConfigError);

  for (int k = 1; k <= 6; ++k) {
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 0);
    std::set<Orientation> hit;
    do {
      hit.insert(orientation_from_permutation(k, w));
    } while (std::next_permutation(w.begin(), w.end()));
    CHECK(hit.size() == (std::size_t{1} << (k - 1)));
  }
}

TEST_CASE("Ext along a cuspidal line") {
  CHECK(ext_cuspidal_line(2, SubsetMask(), SubsetMask(), Q).same_modules(free_table({{0, 1}, {1, 1}})));
  CHECK(ext_cuspidal_line(3, SubsetMask(1), SubsetMask(2), Q).same_modules(free_table({{2, 1}, {3, 1}})));
  for (int k = 2; k <= 4; ++k) {
    const RootSystem rs = build_root_system(Series::A, k - 1);
    for (SubsetMask I : all_subsets(k - 1)) {
      CHECK(ext_cuspidal_line(k, I, I, Z5).same_modules(free_table({{0, 1}, {1, 1}})));
      for (SubsetMask J : all_subsets(k - 1))
        CHECK(ext_cuspidal_line(k, I, J, Q).same_modules(
            ext_steinberg(rs, I, J, Q, Method::complex_built, 1)));
    }
  }
}
