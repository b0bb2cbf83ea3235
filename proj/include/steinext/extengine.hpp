#pragma once

// Ext groups between generalized Steinberg and parabolically induced
// representations, computed two ways: from the closed forms, and by
// building the lattice complexes the vanishing arguments reduce to and
// taking their cohomology exactly.

#include "steinext/homology.hpp"
#include "steinext/ringcond.hpp"
#include "steinext/rootdata.hpp"
#include "steinext/weyl.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace steinext {

enum class Method { closed_form, complex_built };

std::string to_string(Method m);

// Degree -> module. Absent degrees are zero; zero modules are never stored.
struct ExtTable {
  std::map<int, HomologyGroup> entries;
  Method provenance = Method::closed_form;
  bool within_hypotheses = true;

  void add(int degree, const HomologyGroup& g);
  void add_free(int degree, std::size_t rank);
  std::size_t rank_at(int degree) const;
  bool torsion_free() const;
  bool empty() const { return entries.empty(); }
  // Module-level equality; provenance and labels are ignored.
  bool same_modules(const ExtTable& other) const;
  std::string to_string() const;  // "{1:1, 2:1}"
};

// Complexes built along the way, kept for --dump-complex.
struct ExtTrace {
  struct Item {
    std::string name;
    ChainComplex complex;
    HomologyResult homology;
  };
  std::vector<Item> items;
};

// Centralized degree bookkeeping. For a row complex with lattice degree s
// and row index t, the contribution lands in total degree s + t + offset.
enum class ShiftKind { cohomology_v, ext_v_to_induced, ext_steinberg };

struct DegreeShift {
  SubsetMask K;         // the bottom of the lattice that survives
  int offset = 0;       // total = s + t + offset
  int expected = 0;     // the single degree predicted by the closed form
};

// Checks the closed-form degree identities as integers on every call and
// throws ContractError if they disagree.
DegreeShift degree_shift(ShiftKind kind, int rank, SubsetMask I, SubsetMask J);

// Künneth with the exterior algebra on a rank-c free module.
ExtTable tensor_center(const ExtTable& table, int center_rank);

// H^*(G, 1) for a group with center of rank c: C(c, j) in degree j.
ExtTable trivial_cohomology(const RootSystem& rs, const RingSpec& spec, int center_rank);
// H^*(G, i_{P_I}) = Λ^* X(M_I), X(M_I) free of rank |Δ∖I|.
ExtTable induced_cohomology(const RootSystem& rs, SubsetMask I, const RingSpec& spec);
// Ext^*(i_{P_I}, i_{P_J}) = Λ^* X(M_J) if J ⊆ I, else 0.
ExtTable ext_induced_closed(const RootSystem& rs, SubsetMask I, SubsetMask J, const RingSpec& spec);

struct VanishingCertificate {
  DoubleCosetRep rep;
  std::optional<int> beta_index;
  std::int64_t exponent = 0;  // |<δ - γ, ω_β>|
  BigInt unit_value;          // q^exponent - 1, reduced for Z/d
  bool from_delta = false;    // the w = 1, J ⊄ I branch
};

// A central element ω_β(ϖ^{-1}) of the relevant Levi on which the twisting
// character minus one is a unit. nullopt exactly on the surviving stratum
// (w = 1 and J ⊆ I). Throws ContractError if w ≠ 1 yet no candidate β
// exists, RingAssumptionError if candidates exist but none gives a unit.
std::optional<VanishingCertificate> vanishing_certificate(const RootSystem& rs, const DoubleCosetRep& rep,
                                                          const RingSpec& spec);

// Bruhat-filtration evaluation: certified strata contribute 0, the surviving
// stratum contributes Λ^* X(M_J). Compared against the closed form.
ExtTable ext_induced_via_strata(const WeylGroup& group, SubsetMask I, SubsetMask J, const RingSpec& spec,
                                std::vector<VanishingCertificate>* certificates = nullptr);

// Ext^*(v_{P_I}, i_{P_J}).
ExtTable ext_v_to_induced(const RootSystem& rs, SubsetMask I, SubsetMask J, const RingSpec& spec, Method method,
                          ExtTrace* trace = nullptr);
// H^*(G, v_{P_I}).
ExtTable cohomology_v(const RootSystem& rs, SubsetMask I, const RingSpec& spec, Method method,
                      ExtTrace* trace = nullptr);
// Ext^*(v_{P_I}, v_{P_J}) for a group whose center has rank center_rank.
ExtTable ext_steinberg(const RootSystem& rs, SubsetMask I, SubsetMask J, const RingSpec& spec, Method method,
                       int center_rank = 0, ExtTrace* trace = nullptr);

// Orientations of the segment graph σ - σ(1) - ... - σ(k-1).
struct Orientation {
  std::vector<bool> forward;  // edge i points σ(i) -> σ(i+1)

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;
  std::string to_string() const;  // "FB" style
};

// Edge i forward iff α_i ∈ I, for I ⊆ Δ_k = {α_0..α_{k-2}}.
Orientation orientation_from_subset(int k, SubsetMask I);
SubsetMask subset_from_orientation(const Orientation& o);
// Edge i forward iff w(i) < w(i+1); w is a permutation of {0..k-1}.
Orientation orientation_from_permutation(int k, std::span<const int> w);

// R[-i] ⊕ R[-i-1] with i = |I ∪ J| - |I ∩ J|, cross-checked against
// ext_steinberg on A_{k-1} with a rank-one center.
ExtTable ext_cuspidal_line(int k, SubsetMask I, SubsetMask J, const RingSpec& spec);

}  // namespace steinext
