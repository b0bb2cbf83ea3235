#include "steinext/weyl.hpp"

#include "steinext/errors.hpp"

#include <array>
#include <cstring>
#include <fstream>

namespace steinext {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'X', 'W', 'C'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xffu);
  os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
bool get(std::istream& is, T& value) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T))) return false;
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  value = static_cast<T>(v);
  return true;
}

}  // namespace

std::filesystem::path weyl_cache_path(const std::filesystem::path& dir, const RootSystem& rs) {
  return dir / ("weyl_" + rs.name() + ".bin");
}

void save_weyl_cache(const std::filesystem::path& dir, const WeylGroup& group) {
  const RootSystem& rs = group.root_system();
  std::filesystem::create_directories(dir);
  const auto path = weyl_cache_path(dir, rs);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot write Weyl cache " + tmp);
    os.write(kMagic.data(), kMagic.size());
    put<std::uint32_t>(os, kVersion);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(rs.series()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(rs.rank()));
    put<std::uint64_t>(os, group.size());
    put<std::uint32_t>(os, static_cast<std::uint32_t>(rs.num_positive_roots()));
    for (const auto& w : group.elements())
      for (std::int32_t v : w.action()) put<std::uint32_t>(os, static_cast<std::uint32_t>(v));
    for (const auto& w : group.elements()) put<std::uint32_t>(os, static_cast<std::uint32_t>(w.length()));
    if (!os) throw ConfigError("failed writing Weyl cache " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<WeylGroup> load_weyl_cache(const std::filesystem::path& dir, const RootSystem& rs) {
  std::ifstream is(weyl_cache_path(dir, rs), std::ios::binary);
  if (!is) return std::nullopt;
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) return std::nullopt;
  std::uint32_t version = 0, rank = 0, np = 0;
  std::uint8_t series = 0;
  std::uint64_t order = 0;
  if (!get(is, version) || version != kVersion) return std::nullopt;
  if (!get(is, series) || series != static_cast<std::uint8_t>(rs.series())) return std::nullopt;
  if (!get(is, rank) || rank != static_cast<std::uint32_t>(rs.rank())) return std::nullopt;
  if (!get(is, order) || order == 0 || order > kDefaultWeylCap * 64) return std::nullopt;
  if (!get(is, np) || np != static_cast<std::uint32_t>(rs.num_positive_roots())) return std::nullopt;

  std::vector<WeylElement> elems;
  elems.reserve(order);
  for (std::uint64_t e = 0; e < order; ++e) {
    std::vector<std::int32_t> action(np);
    for (auto& v : action) {
      std::uint32_t raw = 0;
      if (!get(is, raw)) return std::nullopt;
      v = static_cast<std::int32_t>(raw);
      if (v == 0 || v > static_cast<std::int32_t>(np) || v < -static_cast<std::int32_t>(np)) return std::nullopt;
    }
    elems.emplace_back(std::move(action));
  }
  for (const auto& w : elems) {
    std::uint32_t len = 0;
    if (!get(is, len) || len != static_cast<std::uint32_t>(w.length())) return std::nullopt;
  }
  if (is.peek() != std::char_traits<char>::eof()) return std::nullopt;
  if (elems.empty() || !elems.front().is_identity()) return std::nullopt;
  return WeylGroup(rs, std::move(elems));
}

WeylGroup cached_weyl_group(const std::filesystem::path& dir, const RootSystem& rs, std::size_t cap) {
  if (auto cached = load_weyl_cache(dir, rs)) {
    if (cached->size() <= cap) return std::move(*cached);
  }
  WeylGroup group = generate_weyl(rs, cap);
  save_weyl_cache(dir, group);
  return group;
}

}  // namespace steinext
