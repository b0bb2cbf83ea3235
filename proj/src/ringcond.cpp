#include "steinext/ringcond.hpp"

#include "steinext/errors.hpp"
#include "steinext/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace steinext {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

std::optional<std::pair<std::uint64_t, int>> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return std::pair{q, 1};
  int r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, r};
}

RingSpec RingSpec::rational(std::uint64_t q) {
  auto pr = prime_power_decomposition(q);
  if (!pr) throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
  RingSpec s;
  s.kind = Kind::rational_field;
  s.d = 0;
  s.q = q;
  s.p = pr->first;
  s.r = pr->second;
  return s;
}

RingSpec RingSpec::integers_mod(std::uint64_t d, std::uint64_t q) {
  if (d == 1) throw ConfigError("degenerate ring Z/1");
  if (d < 2) throw ConfigError("modulus d must be >= 2");
  RingSpec s = rational(q);
  s.kind = Kind::integers_mod_d;
  s.d = d;
  return s;
}

std::string RingSpec::to_string() const {
  if (is_rational()) return q == 3 ? "Q" : "Q,q=" + std::to_string(q);
  return "q=" + std::to_string(q) + ",d=" + std::to_string(d);
}

RingSpec parse_ring(std::string_view text) {
  std::optional<std::uint64_t> q, d;
  bool rational = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (item == "Q" || item == "q") {
      rational = true;
    } else if (item.rfind("q=", 0) == 0) {
      q = parse_u64(std::string_view(item).substr(2), "q");
    } else if (item.rfind("d=", 0) == 0) {
      d = parse_u64(std::string_view(item).substr(2), "d");
    } else {
      throw ConfigError("invalid ring specification '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (rational) {
    if (d) throw ConfigError("ring 'Q' does not take a modulus");
    return RingSpec::rational(q.value_or(3));
  }
  if (!q || !d) throw ConfigError("ring must be 'Q' or 'q=<prime power>,d=<modulus>'");
  if (*d == 0) return RingSpec::rational(*q);
  return RingSpec::integers_mod(*d, *q);
}

BigInt reduce(const BigInt& x, const RingSpec& spec) {
  if (spec.is_rational()) return x;
  BigInt m(static_cast<unsigned long>(spec.d));
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

bool is_unit(const BigInt& x, const RingSpec& spec) {
  if (spec.is_rational()) return x != 0;
  BigInt g;
  BigInt m(static_cast<unsigned long>(spec.d));
  BigInt r = reduce(x, spec);
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return g == 1;
}

BigInt q_power_minus_one(const RingSpec& spec, std::uint64_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(spec.q), static_cast<unsigned long>(e));
  return out - 1;
}

BonResult bon_check(const RootSystem& rs, const RingSpec& spec) {
  BonResult out;
  out.n_max = rho_coefficients(rs).n_max;
  for (int r = 1; r <= out.n_max; ++r) {
    BigInt factor = -q_power_minus_one(spec, static_cast<std::uint64_t>(r));
    if (!is_unit(factor, spec)) {
      out.ok = false;
      out.failing_r = r;
      out.failing_factor = factor;
      break;
    }
  }
  return out;
}

namespace {

std::vector<int> degree_table(Series series, int n) {
  std::vector<int> d;
  switch (series) {
    case Series::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Series::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Series::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F: d = {2, 6, 8, 12}; break;
    case Series::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<int> weyl_degrees(Series series, int rank) {
  require_valid_type(series, rank);
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::vector<int>> validated;
  const auto key = std::pair{static_cast<char>(series), rank};
  {
    std::lock_guard lock(mu);
    if (auto it = validated.find(key); it != validated.end()) return it->second;
  }

  auto degrees = degree_table(series, rank);
  const RootSystem rs = build_root_system(series, rank);
  long long exponent_sum = 0;
  BigInt product = 1;
  for (int d : degrees) {
    exponent_sum += d - 1;
    product *= d;
  }
  if (exponent_sum != rs.num_positive_roots())
    throw ContractError("degree table of " + rs.name() + " fails sum(d_i - 1) = |Phi+|");
  if (product <= BigInt(static_cast<unsigned long>(kDefaultWeylCap))) {
    const auto order = generate_weyl(rs).size();
    if (product != BigInt(static_cast<unsigned long>(order)))
      throw ContractError("degree table of " + rs.name() + " fails prod(d_i) = |W|");
  }

  std::lock_guard lock(mu);
  validated.emplace(key, degrees);
  return degrees;
}

BanalResult banal_proxy_check(const RootSystem& rs, const RingSpec& spec) {
  BanalResult out;
  out.degrees = weyl_degrees(rs.series(), rs.rank());
  if (spec.is_rational()) return out;
  if (spec.d % spec.p == 0) {
    out.ok = false;
    out.p_divides_d = true;
    out.failing_divisor = BigInt(static_cast<unsigned long>(spec.p));
    return out;
  }
  for (int d : out.degrees) {
    BigInt factor = q_power_minus_one(spec, static_cast<std::uint64_t>(d));
    if (!is_unit(factor, spec)) {
      out.ok = false;
      out.failing_degree = d;
      out.failing_divisor = factor;
      break;
    }
  }
  return out;
}

ConditionReport check_ring(const RootSystem& rs, const RingSpec& spec, bool assume_theta) {
  ConditionReport report;
  report.bon = bon_check(rs, spec);
  report.banal_proxy = banal_proxy_check(rs, spec);
  report.assumption3 = true;
  report.assumption4_asserted = assume_theta;
  report.notes =
      "banal_proxy uses gcd(d, p * prod(q^d_i - 1)) = 1 for the split finite reductive quotient; "
      "assumption3 holds for split data";
  if (!assume_theta) report.notes += "; assumption4 not asserted (pass --assume-theta)";
  return report;
}

}  // namespace steinext
