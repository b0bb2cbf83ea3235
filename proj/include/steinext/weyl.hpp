#pragma once

// Weyl groups as signed permutations of the positive roots, parabolic
// double cosets with their minimal-length representatives, and the
// modulus-character exponents attached to each double coset.

#include "steinext/rootdata.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace steinext {

inline constexpr std::size_t kDefaultWeylCap = std::size_t{1} << 20;

class WeylElement {
 public:
  WeylElement() = default;
  // action[k] = ±(m+1) encodes w(β_k) = ±β_m.
  explicit WeylElement(std::vector<std::int32_t> action);

  static WeylElement identity(const RootSystem& rs);

  int length() const { return length_; }
  bool is_identity() const;
  std::span<const std::int32_t> action() const { return action_; }
  SignedRoot image(int root_index) const;
  SignedRoot image(SignedRoot r) const;

  // (this ∘ other)(β) = this(other(β)).
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;
  // s_i ∘ this and this ∘ s_i.
  WeylElement left_simple(const RootSystem& rs, int i) const;
  WeylElement right_simple(const RootSystem& rs, int i) const;

  // Integer matrix on simple-root coordinates (column j = w(α_j)).
  std::vector<std::vector<std::int64_t>> linear_map(const RootSystem& rs) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.action_ < b.action_;
  }

 private:
  std::vector<std::int32_t> action_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

// The full group, identity first, sorted by (length, action).
class WeylGroup {
 public:
  WeylGroup(RootSystem rs, std::vector<WeylElement> elements);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // Position in elements(), or -1.
  std::ptrdiff_t index_of(const WeylElement& w) const;

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;
};

// Closure of {1} under left multiplication by simple reflections.
// Throws ResourceError once more than `cap` elements are found.
WeylGroup generate_weyl(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

// W_I, identity first, sorted by (length, action).
std::vector<WeylElement> parabolic_subgroup(const RootSystem& rs, SubsetMask subset);

struct DoubleCosetRep {
  WeylElement w;
  SubsetMask I;
  SubsetMask J;
  int length = 0;
  CharacterVector gamma_exp;
  CharacterVector delta_exp;
  SubsetMask levi;  // J ∩ w^{-1} I
  std::size_t coset_size = 0;
};

// Σ α over α ∈ Φ^+∖Φ^+_J with wα ∈ Φ^-∖Φ^-_I.
CharacterVector gamma_exponents(const RootSystem& rs, const WeylElement& w, SubsetMask I, SubsetMask J);
// Σ α over α ∈ Φ^+_J with wα ∈ Φ^+∖Φ^+_I.
CharacterVector delta_exponents(const RootSystem& rs, const WeylElement& w, SubsetMask I, SubsetMask J);
// {β ∈ J : w(β) is a simple root in I}; requires w minimal in W_I w W_J.
SubsetMask intersect_levi(const RootSystem& rs, const WeylElement& w, SubsetMask I, SubsetMask J);

// One representative per double coset W_I w W_J, each of minimal length,
// sorted by (length, action). Verifies that the cosets partition W and that
// the minimal element of each coset is unique.
std::vector<DoubleCosetRep> kostant_reps(const WeylGroup& group, SubsetMask I, SubsetMask J);
std::vector<DoubleCosetRep> kostant_reps(const RootSystem& rs, SubsetMask I, SubsetMask J);

// Binary element/length cache, one file per (series, rank). Layout, all
// little-endian: magic "SXWC", u32 version, u8 series, u32 rank, u64 |W|,
// u32 |Φ^+|, then |W| rows of |Φ^+| i32 signed indices, then |W| u32 lengths.
std::filesystem::path weyl_cache_path(const std::filesystem::path& dir, const RootSystem& rs);
void save_weyl_cache(const std::filesystem::path& dir, const WeylGroup& group);
// nullopt on missing file or any header/size mismatch.
std::optional<WeylGroup> load_weyl_cache(const std::filesystem::path& dir, const RootSystem& rs);
// Load, or enumerate and (re)write the cache.
WeylGroup cached_weyl_group(const std::filesystem::path& dir, const RootSystem& rs,
                            std::size_t cap = kDefaultWeylCap);

}  // namespace steinext
