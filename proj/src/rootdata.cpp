#include "steinext/rootdata.hpp"

#include "steinext/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace steinext {

SubsetMask SubsetMask::from_indices(std::span<const int> indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxRank) throw ConfigError("subset index out of range: " + std::to_string(i));
    bits |= 1u << i;
  }
  return SubsetMask(bits);
}

int SubsetMask::size() const { return std::popcount(bits_); }

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::vector<SubsetMask> all_subsets(int rank) {
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << rank);
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.emplace_back(b);
  return out;
}

bool CharacterVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t CharacterVector::height() const {
  return std::accumulate(coords.begin(), coords.end(), std::int64_t{0});
}

std::string CharacterVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
  if (o.coords.size() != coords.size()) throw ContractError("character rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

CharacterVector& CharacterVector::operator-=(const CharacterVector& o) {
  if (o.coords.size() != coords.size()) throw ContractError("character rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

CharacterVector CharacterVector::operator-() const {
  CharacterVector out = *this;
  for (auto& c : out.coords) c = -c;
  return out;
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

int RootSystem::find_positive_root(const CharacterVector& beta) const {
  auto it = std::find(positive_roots_.begin(), positive_roots_.end(), beta);
  return it == positive_roots_.end() ? -1 : static_cast<int>(it - positive_roots_.begin());
}

std::int64_t RootSystem::coroot_pairing(const CharacterVector& beta, int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta.coords[j];
  return s;
}

CharacterVector RootSystem::reflect(int i, const CharacterVector& beta) const {
  CharacterVector out = beta;
  out.coords[i] -= coroot_pairing(beta, i);
  return out;
}

bool is_valid_type(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1 && rank <= kMaxRank;
    case Series::B:
    case Series::C: return rank >= 2 && rank <= kMaxRank;
    case Series::D: return rank >= 4 && rank <= kMaxRank;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

void require_valid_type(Series series, int rank) {
  if (!is_valid_type(series, rank))
    throw ConfigError("invalid root system type (" + std::string(1, static_cast<char>(series)) + ", " +
                      std::to_string(rank) + ")");
}

namespace {

using Matrix = std::vector<std::vector<int>>;

void link(Matrix& m, int i, int j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

Matrix cartan_matrix(Series series, int n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  switch (series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      // α_{n-1} short.
      m[n - 1][n - 2] = -2;
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      // α_{n-1} long.
      m[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case Series::E:
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Series::F:
      link(m, 0, 1);
      link(m, 2, 3);
      m[1][2] = -1;
      m[2][1] = -2;
      break;
    case Series::G:
      // α_0 short, α_1 long.
      m[0][1] = -3;
      m[1][0] = -1;
      break;
  }
  return m;
}

// Positive roots by root strings: for a root β and simple α_i, let p be the
// largest k with β - kα_i a root; then β + α_i is a root iff p - <β,α_i^∨> > 0.
// Every non-simple positive root is β + α_i for a root β of height one less.
std::vector<CharacterVector> positive_roots_by_strings(const Matrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<CharacterVector> roots;
  std::map<std::vector<std::int64_t>, bool> known;
  auto is_root = [&](const CharacterVector& v) { return known.count(v.coords) > 0; };

  std::vector<CharacterVector> layer;
  for (int i = 0; i < n; ++i) {
    CharacterVector e(n);
    e.coords[i] = 1;
    layer.push_back(e);
    known[e.coords] = true;
  }
  while (!layer.empty()) {
    roots.insert(roots.end(), layer.begin(), layer.end());
    std::vector<CharacterVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        std::int64_t p = 0;
        CharacterVector down = beta;
        while (true) {
          down.coords[i] -= 1;
          if (down.coords[i] < 0 || !is_root(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan[i][j] * beta.coords[j];
        if (p - pairing > 0) {
          CharacterVector up = beta;
          up.coords[i] += 1;
          if (!is_root(up)) {
            known[up.coords] = true;
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }
  // Height ascending; within a height, lexicographically descending so the
  // simple roots land at indices 0..n-1 in order.
  std::stable_sort(roots.begin(), roots.end(), [](const CharacterVector& a, const CharacterVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  return roots;
}

}  // namespace

RootSystem build_root_system(Series series, int rank) {
  require_valid_type(series, rank);
  RootSystem rs;
  rs.series_ = series;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(series, rank);
  rs.positive_roots_ = positive_roots_by_strings(rs.cartan_);

  for (const auto& beta : rs.positive_roots_) {
    std::uint32_t bits = 0;
    for (int j = 0; j < rank; ++j)
      if (beta.coords[j] != 0) bits |= 1u << j;
    rs.supports_.emplace_back(bits);
  }

  const int np = rs.num_positive_roots();
  rs.reflection_table_.assign(rank, std::vector<SignedRoot>(np));
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < np; ++k) {
      CharacterVector image = rs.reflect(i, rs.positive_roots_[k]);
      bool positive = image.coords[i] >= 0 && std::all_of(image.coords.begin(), image.coords.end(),
                                                          [](std::int64_t c) { return c >= 0; });
      int idx = rs.find_positive_root(positive ? image : -image);
      if (idx < 0) throw ContractError("reflection does not permute the roots of " + rs.name());
      rs.reflection_table_[i][k] = SignedRoot{idx, positive};
    }
  }
  return rs;
}

std::pair<Series, int> parse_type_name(std::string_view type_name) {
  if (type_name.size() < 2) throw ConfigError("invalid root system type '" + std::string(type_name) + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(type_name[0])));
  if (std::string_view("ABCDEFG").find(c) == std::string_view::npos)
    throw ConfigError("invalid root system series '" + std::string(type_name) + "'");
  int rank = 0;
  auto digits = type_name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ConfigError("invalid root system rank in '" + std::string(type_name) + "'");
  auto series = static_cast<Series>(c);
  require_valid_type(series, rank);
  return {series, rank};
}

RootSystem parse_root_system(std::string_view type_name) {
  auto [series, rank] = parse_type_name(type_name);
  return build_root_system(series, rank);
}

std::vector<int> levi_positive_root_indices(const RootSystem& rs, SubsetMask subset) {
  if (!subset.fits_rank(rs.rank())) throw ConfigError("subset " + subset.to_string() + " exceeds rank");
  std::vector<int> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.support(k).subset_of(subset)) out.push_back(k);
  return out;
}

std::vector<CharacterVector> levi_positive_roots(const RootSystem& rs, SubsetMask subset) {
  std::vector<CharacterVector> out;
  for (int k : levi_positive_root_indices(rs, subset)) out.push_back(rs.positive_roots()[k]);
  return out;
}

RhoCoefficients rho_coefficients(const RootSystem& rs) {
  RhoCoefficients out;
  out.rho = CharacterVector(static_cast<std::size_t>(rs.rank()));
  for (const auto& beta : rs.positive_roots()) out.rho += beta;
  out.n_max = *std::max_element(out.rho.coords.begin(), out.rho.coords.end());
  return out;
}

std::int64_t cofundamental_pairing(const CharacterVector& chi, int beta_index) {
  if (beta_index < 0 || static_cast<std::size_t>(beta_index) >= chi.rank())
    throw ContractError("co-fundamental index out of range");
  return chi.coords[beta_index];
}

}  // namespace steinext
