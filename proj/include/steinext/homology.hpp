#pragma once

// Exact homological linear algebra over Z: Smith normal form, cohomology
// of cochain complexes of free modules with Z, Q or Z/d coefficients, and
// builders for complexes indexed by the subset lattice of Δ.

#include "steinext/ringcond.hpp"
#include "steinext/rootdata.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace steinext {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data);
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<BigInt>& data() const { return data_; }

  bool is_zero() const;
  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // In-place elementary operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);  // row dst += factor*row src
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithResult {
  std::vector<BigInt> divisors;  // positive, divisors[i] | divisors[i+1]
  IntegerMatrix U;               // rows x rows, unimodular
  IntegerMatrix V;               // cols x cols, unimodular
};

// U * m * V = diag(divisors, 0, ...).
SmithResult smith_normal_form(const IntegerMatrix& m);
// Same divisors, without tracking U and V.
std::vector<BigInt> elementary_divisors(const IntegerMatrix& m);
// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntegerMatrix& m);
// Exact determinant by Bareiss; square matrices only.
BigInt determinant(const IntegerMatrix& m);

// Cochain complex C^0 -> C^1 -> ... -> C^m; differentials[k]: C^k -> C^{k+1}
// has shape ranks[k+1] x ranks[k].
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntegerMatrix> differentials;
  std::vector<std::vector<std::string>> labels;

  std::size_t length() const { return ranks.size(); }
  // Shapes and d∘d = 0; throws ContractError.
  void validate() const;
  // Hom(-, Z): degree k becomes degree m-k, differentials transposed.
  ChainComplex dual() const;
  long euler_characteristic() const;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // elementary divisors > 1, or cyclic moduli for Z/d

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  std::vector<HomologyGroup> degrees;

  bool is_zero() const;
  bool torsion_free() const;
};

HomologyResult homology_over_Z(const ChainComplex& c);
// Q: Bareiss ranks. Z/d: universal coefficients applied to homology_over_Z,
// H^k(C ⊗ Z/d) = H^k(C) ⊗ Z/d ⊕ Tor(H^{k+1}(C), Z/d); a cyclic summand
// Z/gcd(e, d) counts as free when gcd(e, d) = d and vanishes when it is 1.
HomologyResult homology_with_coefficients(const ChainComplex& c, const RingSpec& spec);

using CoefficientRank = std::function<std::size_t(SubsetMask)>;
// Component L -> L' = L∖{β}; shape rank(L') x rank(L), unsigned.
using MapRule = std::function<IntegerMatrix(SubsetMask L, SubsetMask L_prime, int removed)>;
using BasisLabels = std::function<std::vector<std::string>(SubsetMask)>;

// Degree s carries ⊕ over bottom ⊆ L ⊆ Δ with |Δ∖L| = s; the component
// L -> L∖{β} is (-1)^i map_rule, i the 1-based position of β in L sorted
// ascending. Within a degree the summands are ordered by bitmask.
ChainComplex subset_lattice_complex(int rank, SubsetMask bottom, const CoefficientRank& coefficient_rank,
                                    const MapRule& map_rule, const BasisLabels& labels = {});

// Constant coefficient system R with identity maps.
ChainComplex constant_lattice_complex(int rank, SubsetMask bottom);

// Row t of H^*(G, -) applied to the resolution of v_{P_I}: the L-summand is
// Λ^t of the free module on Δ∖L, with basis the t-subsets of Δ∖L, and
// the maps are the subset-inclusion matrices.
ChainComplex exterior_row_complex(int rank, SubsetMask bottom, int t);

// All t-element subsets of `of`, ordered by bitmask.
std::vector<SubsetMask> subsets_of_size(SubsetMask of, int t);
// C(n, k) as size_t; 0 when k > n or k < 0.
std::size_t binomial(int n, int k);

}  // namespace steinext
