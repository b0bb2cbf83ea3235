#pragma once

// Coefficient rings Q and Z/d with residue order q = p^r, and the ring
// conditions the vanishing arguments rely on.

#include "steinext/rootdata.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steinext {

using BigInt = mpz_class;

struct RingSpec {
  enum class Kind { rational_field, integers_mod_d };

  Kind kind = Kind::rational_field;
  std::uint64_t d = 0;  // 0 for Q
  std::uint64_t q = 3;
  std::uint64_t p = 3;
  int r = 1;

  static RingSpec rational(std::uint64_t q = 3);
  static RingSpec integers_mod(std::uint64_t d, std::uint64_t q);

  bool is_rational() const { return kind == Kind::rational_field; }
  // "Q", "Q,q=5" or "q=3,d=5"; parse_ring(to_string()) round-trips.
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Accepts "Q", "Q,q=<pk>", "q=<pk>,d=<n>" (either order). d = 1 is rejected.
RingSpec parse_ring(std::string_view text);

// (p, r) with q = p^r, r >= 1; nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power_decomposition(std::uint64_t q);

bool is_unit(const BigInt& x, const RingSpec& spec);
inline bool is_unit(std::int64_t x, const RingSpec& spec) { return is_unit(BigInt(static_cast<long>(x)), spec); }

// q^e - 1 as an integer (e >= 0).
BigInt q_power_minus_one(const RingSpec& spec, std::uint64_t e);
// Representative in [0, d) for Z/d, the integer itself for Q.
BigInt reduce(const BigInt& x, const RingSpec& spec);

struct BonResult {
  bool ok = true;
  std::int64_t n_max = 0;
  std::optional<int> failing_r;  // first r with (1 - q^r) not a unit
  BigInt failing_factor;         // 1 - q^r
};

struct BanalResult {
  bool ok = true;
  std::vector<int> degrees;
  bool p_divides_d = false;
  std::optional<int> failing_degree;  // first d_i with q^{d_i} - 1 not a unit
  BigInt failing_divisor;             // p, or q^{d_i} - 1
};

struct ConditionReport {
  BonResult bon;
  BanalResult banal_proxy;
  bool assumption3 = true;
  bool assumption4_asserted = false;
  std::string notes;

  bool hypotheses_hold() const { return bon.ok && banal_proxy.ok; }
};

// d prime to Π_{r <= n_max} (1 - q^r).
BonResult bon_check(const RootSystem& rs, const RingSpec& spec);

// Fundamental degrees d_1 <= ... <= d_n; validated against |Φ^+| and,
// where |W| is enumerable, against |W|.
std::vector<int> weyl_degrees(Series series, int rank);

// gcd(d, p) = 1 and every q^{d_i} - 1 a unit.
BanalResult banal_proxy_check(const RootSystem& rs, const RingSpec& spec);

ConditionReport check_ring(const RootSystem& rs, const RingSpec& spec, bool assume_theta = false);

}  // namespace steinext
