#include "steinext/errors.hpp"
#include "steinext/homology.hpp"

#include <algorithm>
#include <map>

namespace steinext {

void ChainComplex::validate() const {
  if (ranks.empty()) {
    if (!differentials.empty()) throw ContractError("complex without terms has differentials");
    return;
  }
  if (differentials.size() + 1 != ranks.size())
    throw ContractError("complex with " + std::to_string(ranks.size()) + " terms needs " +
                        std::to_string(ranks.size() - 1) + " differentials");
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& d = differentials[k];
    if (d.rows() != ranks[k + 1] || d.cols() != ranks[k])
      throw ContractError("differential " + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    if (ranks[k] == 0 || ranks[k + 2] == 0) continue;
    if (!(differentials[k + 1] * differentials[k]).is_zero())
      throw ContractError("d^2 != 0 at degree " + std::to_string(k));
  }
}

ChainComplex ChainComplex::dual() const {
  ChainComplex out;
  const std::size_t m = ranks.size();
  out.ranks.assign(ranks.rbegin(), ranks.rend());
  for (std::size_t k = 0; k + 1 < m; ++k) {
    // New differential k: degree k (old m-1-k) -> degree k+1 (old m-2-k).
    out.differentials.push_back(differentials[m - 2 - k].transpose());
  }
  if (!labels.empty()) out.labels.assign(labels.rbegin(), labels.rend());
  return out;
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(ranks[k]);
  return chi;
}

bool HomologyResult::is_zero() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

bool HomologyResult::torsion_free() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const HomologyGroup& g) { return g.torsion.empty(); });
}

HomologyResult homology_over_Z(const ChainComplex& c) {
  c.validate();
  const std::size_t m = c.ranks.size();
  std::vector<std::vector<BigInt>> divisors(c.differentials.size());
  for (std::size_t k = 0; k < c.differentials.size(); ++k) divisors[k] = elementary_divisors(c.differentials[k]);

  HomologyResult out;
  out.degrees.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t out_rank = k < c.differentials.size() ? divisors[k].size() : 0;
    const std::size_t in_rank = k > 0 ? divisors[k - 1].size() : 0;
    out.degrees[k].free_rank = c.ranks[k] - out_rank - in_rank;
    if (k > 0)
      for (const auto& e : divisors[k - 1])
        if (e > 1) out.degrees[k].torsion.push_back(e);
  }
  return out;
}

HomologyResult homology_with_coefficients(const ChainComplex& c, const RingSpec& spec) {
  if (spec.is_rational()) {
    c.validate();
    std::vector<std::size_t> rk(c.differentials.size());
    for (std::size_t k = 0; k < rk.size(); ++k) rk[k] = rational_rank(c.differentials[k]);
    HomologyResult out;
    out.degrees.resize(c.ranks.size());
    for (std::size_t k = 0; k < c.ranks.size(); ++k) {
      const std::size_t out_rank = k < rk.size() ? rk[k] : 0;
      const std::size_t in_rank = k > 0 ? rk[k - 1] : 0;
      out.degrees[k].free_rank = c.ranks[k] - out_rank - in_rank;
    }
    return out;
  }
  if (spec.d < 2) throw ConfigError("degenerate ring Z/" + std::to_string(spec.d));

  const HomologyResult integral = homology_over_Z(c);
  const BigInt d(static_cast<unsigned long>(spec.d));
  HomologyResult out;
  out.degrees.resize(integral.degrees.size());
  auto add_cyclic = [&](HomologyGroup& g, const BigInt& e) {
    BigInt gcd;
    mpz_gcd(gcd.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
    if (gcd == d)
      ++g.free_rank;
    else if (gcd > 1)
      g.torsion.push_back(gcd);
  };
  for (std::size_t k = 0; k < integral.degrees.size(); ++k) {
    HomologyGroup& g = out.degrees[k];
    g.free_rank = integral.degrees[k].free_rank;
    for (const auto& e : integral.degrees[k].torsion) add_cyclic(g, e);
    if (k + 1 < integral.degrees.size())
      for (const auto& e : integral.degrees[k + 1].torsion) add_cyclic(g, e);
    std::sort(g.torsion.begin(), g.torsion.end());
  }
  return out;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<SubsetMask> subsets_of_size(SubsetMask of, int t) {
  std::vector<SubsetMask> out;
  if (t < 0) return out;
  // Enumerate submasks of `of` in increasing bitmask order.
  const std::uint32_t full = of.bits();
  std::uint32_t sub = 0;
  while (true) {
    SubsetMask s(sub);
    if (s.size() == t) out.push_back(s);
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  return out;
}

ChainComplex subset_lattice_complex(int rank, SubsetMask bottom, const CoefficientRank& coefficient_rank,
                                    const MapRule& map_rule, const BasisLabels& labels) {
  if (rank < 0 || rank > kMaxRank) throw ConfigError("lattice rank out of range");
  const SubsetMask delta = SubsetMask::full(rank);
  if (!bottom.subset_of(delta)) throw ConfigError("bottom " + bottom.to_string() + " exceeds rank");

  const int top_degree = rank - bottom.size();
  std::vector<std::vector<SubsetMask>> by_degree(top_degree + 1);
  for (int s = 0; s <= top_degree; ++s) {
    // L = bottom ∪ (removed complement): |Δ∖L| = s.
    for (SubsetMask gone : subsets_of_size(delta - bottom, s)) by_degree[s].push_back(delta - gone);
    std::sort(by_degree[s].begin(), by_degree[s].end());
  }

  std::map<std::uint32_t, std::size_t> offset, size;
  ChainComplex c;
  c.ranks.assign(top_degree + 1, 0);
  c.labels.assign(top_degree + 1, {});
  for (int s = 0; s <= top_degree; ++s) {
    for (SubsetMask L : by_degree[s]) {
      const std::size_t r = coefficient_rank(L);
      offset[L.bits()] = c.ranks[s];
      size[L.bits()] = r;
      c.ranks[s] += r;
      if (labels) {
        auto names = labels(L);
        if (names.size() != r) throw ContractError("basis label count does not match coefficient rank");
        for (auto& n : names) c.labels[s].push_back("L=" + L.to_string() + ":" + n);
      } else {
        for (std::size_t b = 0; b < r; ++b) c.labels[s].push_back("L=" + L.to_string() + "#" + std::to_string(b));
      }
    }
  }

  for (int s = 0; s < top_degree; ++s) {
    IntegerMatrix d(c.ranks[s + 1], c.ranks[s]);
    for (SubsetMask L : by_degree[s]) {
      const auto members = L.indices();
      for (std::size_t pos = 0; pos < members.size(); ++pos) {
        const int beta = members[pos];
        if (bottom.contains(beta)) continue;
        const SubsetMask Lp = L.without(beta);
        const std::size_t rows = size[Lp.bits()], cols = size[L.bits()];
        if (rows == 0 || cols == 0) continue;
        IntegerMatrix block = map_rule(L, Lp, beta);
        if (block.rows() != rows || block.cols() != cols)
          throw ContractError("map_rule block for " + L.to_string() + " -> " + Lp.to_string() + " has wrong shape");
        const bool negative = (pos + 1) % 2 == 1;
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j) {
            const BigInt& x = block(i, j);
            if (x == 0) continue;
            d(offset[Lp.bits()] + i, offset[L.bits()] + j) = negative ? BigInt(-x) : x;
          }
      }
    }
    c.differentials.push_back(std::move(d));
  }
  try {
    c.validate();
  } catch (const ContractError& e) {
    throw ContractError(std::string("sign-rule contract violated (wrong map_rule?): ") + e.what());
  }
  return c;
}

ChainComplex constant_lattice_complex(int rank, SubsetMask bottom) {
  return subset_lattice_complex(
      rank, bottom, [](SubsetMask) { return std::size_t{1}; },
      [](SubsetMask, SubsetMask, int) { return IntegerMatrix::identity(1); },
      [](SubsetMask) { return std::vector<std::string>{"1"}; });
}

ChainComplex exterior_row_complex(int rank, SubsetMask bottom, int t) {
  const SubsetMask delta = SubsetMask::full(rank);
  auto basis = [delta, t](SubsetMask L) { return subsets_of_size(delta - L, t); };
  return subset_lattice_complex(
      rank, bottom, [delta, t](SubsetMask L) { return binomial((delta - L).size(), t); },
      [basis](SubsetMask L, SubsetMask Lp, int) {
        const auto src = basis(L);
        const auto dst = basis(Lp);
        IntegerMatrix m(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
          auto it = std::lower_bound(dst.begin(), dst.end(), src[j]);
          if (it == dst.end() || *it != src[j]) throw ContractError("exterior basis not preserved by inclusion");
          m(static_cast<std::size_t>(it - dst.begin()), j) = 1;
        }
        return m;
      },
      [basis](SubsetMask L) {
        std::vector<std::string> names;
        for (SubsetMask S : basis(L)) names.push_back("w" + S.to_string());
        return names;
      });
}

}  // namespace steinext
