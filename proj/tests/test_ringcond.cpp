#include "oracles.hpp"

#include "steinext/errors.hpp"
#include "steinext/ringcond.hpp"

#include <doctest.h>

using namespace steinext;

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Degrees from the height distribution of positive roots: the exponents
// form the partition conjugate to (#roots of height 1, height 2, ...).
std::vector<int> degrees_from_heights(const std::vector<std::vector<int>>& cartan) {
  std::map<std::int64_t, int> by_height;
  for (const auto& r : oracle::positive_roots(cartan)) {
    std::int64_t h = 0;
    for (auto c : r) h += c;
    ++by_height[h];
  }
  const int n = static_cast<int>(cartan.size());
  std::vector<int> degrees;
  for (int i = 1; i <= n; ++i) {
    int m = 0;  // number of heights with at least i roots
    for (const auto& [h, count] : by_height)
      if (count >= i) ++m;
    degrees.push_back(m + 1);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

TEST_CASE("ring parsing round trips") {
  for (const char* s : {"Q", "Q,q=5", "q=3,d=5", "q=9,d=4", "q=2,d=7"}) CHECK(parse_ring(s).to_string() == s);
  CHECK(parse_ring("d=5,q=3") == parse_ring("q=3,d=5"));
  CHECK(parse_ring("q=9,d=4").p == 3);
  CHECK(parse_ring("q=9,d=4").r == 2);
  CHECK_THROWS_AS(parse_ring("q=6,d=5"), ConfigError);
  CHECK_THROWS_AS(parse_ring("q=3,d=1"), ConfigError);
  CHECK_THROWS_AS(parse_ring("q=3"), ConfigError);
  CHECK_THROWS_AS(parse_ring("Z"), ConfigError);
  CHECK_THROWS_AS(parse_ring("q=3,d=x"), ConfigError);
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decomposition(8) == std::pair<std::uint64_t, int>{2, 3});
  CHECK(prime_power_decomposition(7) == std::pair<std::uint64_t, int>{7, 1});
  CHECK_FALSE(prime_power_decomposition(12).has_value());
  CHECK_FALSE(prime_power_decomposition(1).has_value());
}

TEST_CASE("units") {
  const RingSpec z5 = parse_ring("q=3,d=5");
  CHECK(is_unit(BigInt(2), z5));
  CHECK_FALSE(is_unit(BigInt(10), z5));
  CHECK(is_unit(std::int64_t{-2}, z5));
  CHECK(is_unit(BigInt(7), parse_ring("Q")));
  CHECK_FALSE(is_unit(BigInt(0), parse_ring("Q")));
  CHECK(q_power_minus_one(z5, 4) == 80);
  CHECK(reduce(BigInt(-2), z5) == 3);
}

TEST_CASE("fundamental degrees agree with the height partition") {
  for (const char* t : {"A1", "A3", "A5", "B2", "B4", "C3", "D4", "D6", "G2", "F4", "E6", "E7", "E8"}) {
    CAPTURE(t);
    const RootSystem rs = parse_root_system(t);
    CHECK(weyl_degrees(rs.series(), rs.rank()) == degrees_from_heights(rs.cartan()));
  }
}

TEST_CASE("bon and banal_proxy against modular arithmetic") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "F4"}) {
    const RootSystem rs = parse_root_system(t);
    const auto nmax = rho_coefficients(rs).n_max;
    const auto degrees = weyl_degrees(rs.series(), rs.rank());
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u})
      for (std::uint64_t d : {2u, 3u, 5u, 7u, 12u, 13u, 23u, 29u}) {
        CAPTURE(t);
        CAPTURE(q);
        CAPTURE(d);
        const RingSpec spec = RingSpec::integers_mod(d, q);
        bool bon = true;
        for (std::int64_t r = 1; r <= nmax; ++r)
          if (std::gcd((1 + d - powmod(q, r, d)) % d, d) != 1) bon = false;
        bool banal = std::gcd(d, prime_power_decomposition(q)->first) == 1;
        for (int di : degrees)
          if (std::gcd((powmod(q, di, d) + d - 1) % d, d) != 1) banal = false;
        CHECK(bon_check(rs, spec).ok == bon);
        CHECK(banal_proxy_check(rs, spec).ok == banal);
      }
  }
}

TEST_CASE("ring condition examples") {
  const RootSystem a1 = parse_root_system("A1");
  const auto rep = check_ring(a1, parse_ring("q=3,d=2"));
  CHECK_FALSE(rep.bon.ok);
  REQUIRE(rep.bon.failing_r.has_value());
  CHECK(*rep.bon.failing_r == 1);
  CHECK(rep.bon.failing_factor == -2);
  CHECK(check_ring(a1, parse_ring("q=3,d=5")).hypotheses_hold());
  CHECK(check_ring(parse_root_system("A2"), parse_ring("q=3,d=5")).hypotheses_hold());
  // 3^4 = 81 ≡ 1 mod 5, and A3 has n_max = 4.
  CHECK_FALSE(check_ring(parse_root_system("A3"), parse_ring("q=3,d=5")).bon.ok);
  CHECK(check_ring(parse_root_system("G2"), parse_ring("Q")).hypotheses_hold());
  CHECK(check_ring(a1, parse_ring("Q"), true).assumption4_asserted);
}
