#pragma once

// Split reduced root systems in simple-root coordinates.
//
// Simple roots are numbered 0..rank-1 following Bourbaki's Dynkin labels
// shifted down by one (so B_n has its short root last, G_2 has its short
// root at index 0, E_n has the branch node at index 1).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steinext {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline constexpr int kMaxRank = 31;

// A subset of the simple roots, as a bitmask over indices.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static constexpr SubsetMask full(int rank) {
    return SubsetMask(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }
  static SubsetMask from_indices(std::span<const int> indices);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool fits_rank(int rank) const { return (bits_ & ~full(rank).bits_) == 0; }

  constexpr SubsetMask with(int i) const { return SubsetMask(bits_ | (1u << i)); }
  constexpr SubsetMask without(int i) const { return SubsetMask(bits_ & ~(1u << i)); }
  // Complement inside Δ of the given rank.
  constexpr SubsetMask complement(int rank) const { return SubsetMask(full(rank).bits_ & ~bits_); }

  std::vector<int> indices() const;
  // "{0,2}" style, used in labels and diagnostics.
  std::string to_string() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Every subset of Δ for the given rank, ordered by bitmask value.
std::vector<SubsetMask> all_subsets(int rank);

// Element of X*(S) written in simple-root coordinates.
struct CharacterVector {
  std::vector<std::int64_t> coords;

  CharacterVector() = default;
  explicit CharacterVector(std::size_t rank) : coords(rank, 0) {}
  explicit CharacterVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  std::int64_t height() const;
  std::string to_string() const;

  CharacterVector& operator+=(const CharacterVector& o);
  CharacterVector& operator-=(const CharacterVector& o);
  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) { return a += b; }
  friend CharacterVector operator-(CharacterVector a, const CharacterVector& b) { return a -= b; }
  CharacterVector operator-() const;
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
  friend auto operator<=>(const CharacterVector&, const CharacterVector&) = default;
};

// Signed reference to a root: index into the positive-root list plus sign.
struct SignedRoot {
  int index = 0;
  bool positive = true;

  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

class RootSystem {
 public:
  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;

  // cartan()[i][j] = <α_j, α_i^∨>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // Ordered by height, simple root i at index i.
  const std::vector<CharacterVector>& positive_roots() const { return positive_roots_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }

  // Index of a positive root, or -1.
  int find_positive_root(const CharacterVector& beta) const;
  SubsetMask support(int root_index) const { return supports_[root_index]; }
  bool is_simple(int root_index) const { return root_index < rank_; }

  // <β, α_i^∨>.
  std::int64_t coroot_pairing(const CharacterVector& beta, int i) const;
  // s_i on coordinates.
  CharacterVector reflect(int i, const CharacterVector& beta) const;
  // s_i(β_k) as a signed positive-root reference (table lookup).
  SignedRoot reflect_root(int i, int root_index) const { return reflection_table_[i][root_index]; }

  SubsetMask full_mask() const { return SubsetMask::full(rank_); }

 private:
  friend RootSystem build_root_system(Series series, int rank);

  Series series_ = Series::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<CharacterVector> positive_roots_;
  std::vector<SubsetMask> supports_;
  std::vector<std::vector<SignedRoot>> reflection_table_;
};

// Valid pairs: A_n (n>=1), B_n/C_n (n>=2), D_n (n>=4), E_6..E_8, F_4, G_2.
bool is_valid_type(Series series, int rank);
void require_valid_type(Series series, int rank);

// Cartan matrix by type; positive roots by root strings.
RootSystem build_root_system(Series series, int rank);

// Parses "A2", "e6", "G2".
RootSystem parse_root_system(std::string_view type_name);
std::pair<Series, int> parse_type_name(std::string_view type_name);

// Φ_I^+ = {β ∈ Φ^+ : supp(β) ⊆ I}, as indices into positive_roots().
std::vector<int> levi_positive_root_indices(const RootSystem& rs, SubsetMask subset);
std::vector<CharacterVector> levi_positive_roots(const RootSystem& rs, SubsetMask subset);

struct RhoCoefficients {
  CharacterVector rho;  // n_α per simple root
  std::int64_t n_max = 0;
};

// ρ = Σ_{β∈Φ^+} β (multiplicities are 1 in the split case).
RhoCoefficients rho_coefficients(const RootSystem& rs);

// <chi, ω_β> for the co-fundamental coweight dual to α_β.
std::int64_t cofundamental_pairing(const CharacterVector& chi, int beta_index);

}  // namespace steinext
