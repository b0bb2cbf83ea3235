#include "steinext/extengine.hpp"

#include "steinext/errors.hpp"

#include <algorithm>
#include <sstream>

namespace steinext {

std::string to_string(Method m) { return m == Method::closed_form ? "closed_form" : "complex_built"; }

void ExtTable::add(int degree, const HomologyGroup& g) {
  if (degree < 0) throw ContractError("negative Ext degree " + std::to_string(degree));
  if (g.is_zero()) return;
  HomologyGroup& slot = entries[degree];
  slot.free_rank += g.free_rank;
  slot.torsion.insert(slot.torsion.end(), g.torsion.begin(), g.torsion.end());
  std::sort(slot.torsion.begin(), slot.torsion.end());
}

void ExtTable::add_free(int degree, std::size_t rank) {
  HomologyGroup g;
  g.free_rank = rank;
  add(degree, g);
}

std::size_t ExtTable::rank_at(int degree) const {
  auto it = entries.find(degree);
  return it == entries.end() ? 0 : it->second.free_rank;
}

bool ExtTable::torsion_free() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.torsion.empty(); });
}

bool ExtTable::same_modules(const ExtTable& other) const { return entries == other.entries; }

std::string ExtTable::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, g] : entries) {
    os << (first ? "" : ", ") << deg << ':' << g.free_rank;
    for (const auto& t : g.torsion) os << "+Z/" << t.get_str();
    first = false;
  }
  os << '}';
  return os.str();
}

DegreeShift degree_shift(ShiftKind kind, int rank, SubsetMask I, SubsetMask J) {
  const SubsetMask delta = SubsetMask::full(rank);
  if (!I.subset_of(delta) || !J.subset_of(delta)) throw ConfigError("subset exceeds rank");
  const int nI = (delta - I).size();
  const int nJ = (delta - J).size();
  DegreeShift out;
  switch (kind) {
    case ShiftKind::cohomology_v: {
      out.K = I;
      out.offset = -nI;
      out.expected = nI;
      // The only nonzero spot is row t = |Δ∖I| at lattice degree |Δ∖I|.
      if (2 * nI + out.offset != out.expected) throw ContractError("cohomology_v degree identity failed");
      break;
    }
    case ShiftKind::ext_v_to_induced: {
      out.K = I | J;
      out.offset = 0;
      out.expected = out.K == delta ? nI : -1;
      // Dual lattice degree p = |L∖I| is |Δ∖I| at L = Δ, row q = 0.
      if (out.K == delta && nI + 0 + out.offset != out.expected)
        throw ContractError("ext_v_to_induced degree identity failed");
      break;
    }
    case ShiftKind::ext_steinberg: {
      const SubsetMask notI = delta - I;
      out.K = notI | J;
      out.offset = nI - nJ;
      out.expected = (I | J).size() - (I & J).size();
      // K = (Δ∖I) ⊔ (I ∩ J).
      if ((notI & (I & J)).size() != 0 || out.K != (notI | (I & J)))
        throw ContractError("K is not the disjoint union (Δ∖I) ⊔ (I∩J)");
      const int nK = (delta - out.K).size();
      // d = |Δ∖K| + |Δ∖I| + |J| - |K|, stepping down to |I∪J| - |I∩J|.
      const int chain[] = {
          nK + nI + J.size() - out.K.size(),
          (I - (I & J)).size() + J.size() - (I & J).size(),
          I.size() - (I & J).size() + J.size() - (I & J).size(),
          (I | J).size() - (I & J).size(),
      };
      for (int v : chain)
        if (v != out.expected) throw ContractError("Ext degree chain broke for I=" + I.to_string() + ", J=" + J.to_string());
      // Surviving spot: lattice degree |Δ∖K|, exterior row |Δ∖K|.
      if (2 * nK + out.offset != out.expected) throw ContractError("Ext shift disagrees with the degree chain");
      break;
    }
  }
  return out;
}

ExtTable tensor_center(const ExtTable& table, int center_rank) {
  if (center_rank < 0) throw ConfigError("center rank must be non-negative");
  ExtTable out;
  out.provenance = table.provenance;
  out.within_hypotheses = table.within_hypotheses;
  for (const auto& [deg, g] : table.entries)
    for (int j = 0; j <= center_rank; ++j) {
      const std::size_t mult = binomial(center_rank, j);
      HomologyGroup scaled;
      scaled.free_rank = g.free_rank * mult;
      for (std::size_t m = 0; m < mult; ++m) scaled.torsion.insert(scaled.torsion.end(), g.torsion.begin(), g.torsion.end());
      out.add(deg + j, scaled);
    }
  return out;
}

namespace {

bool hypotheses(const RootSystem& rs, const RingSpec& spec) { return check_ring(rs, spec).hypotheses_hold(); }

void require_subset(const RootSystem& rs, SubsetMask s, const char* what) {
  if (!s.fits_rank(rs.rank())) throw ConfigError(std::string(what) + " = " + s.to_string() + " exceeds rank of " + rs.name());
}

// Λ^* of a free module of rank n, shifted.
ExtTable exterior_table(int n, int shift) {
  ExtTable t;
  for (int j = 0; j <= n; ++j) t.add_free(shift + j, binomial(n, j));
  return t;
}

// Rank of Ext^q(i_{P_L}, i_{P_J}).
std::size_t induced_ext_rank(int rank, SubsetMask L, SubsetMask J, int q) {
  if (!J.subset_of(L)) return 0;
  return binomial((SubsetMask::full(rank) - J).size(), q);
}

// Rank of Ext^q(v_{P_I}, i_{P_L}).
std::size_t v_to_induced_rank(int rank, SubsetMask I, SubsetMask L, int q) {
  const SubsetMask delta = SubsetMask::full(rank);
  if ((I | L) != delta) return 0;
  return binomial((delta - L).size(), q - (delta - I).size());
}

struct Spot {
  int s = 0;
  int t = 0;
  HomologyGroup g;
};

// E2 = E∞ holds when no d_r (r >= 2), (s,t) -> (s+r, t-r+1), joins two
// nonzero spots; otherwise the row data alone does not determine the answer.
ExtTable assemble(const std::vector<Spot>& spots, int offset, Method provenance) {
  std::vector<const Spot*> live;
  for (const auto& sp : spots)
    if (!sp.g.is_zero()) live.push_back(&sp);
  for (const Spot* a : live)
    for (const Spot* b : live) {
      const int r = b->s - a->s;
      if (r >= 2 && b->t == a->t - r + 1)
        throw VerificationFailure("spectral sequence may not degenerate: spots (" + std::to_string(a->s) + "," +
                                  std::to_string(a->t) + ") and (" + std::to_string(b->s) + "," +
                                  std::to_string(b->t) + ")");
    }
  ExtTable out;
  out.provenance = provenance;
  for (const Spot* sp : live) out.add(sp->s + sp->t + offset, sp->g);
  return out;
}

void record(ExtTrace* trace, std::string name, const ChainComplex& c, const HomologyResult& h) {
  if (trace) trace->items.push_back({std::move(name), c, h});
}

ChainComplex exterior_inclusion_lattice(int rank, SubsetMask bottom, int t, const CoefficientRank& coeff) {
  const SubsetMask delta = SubsetMask::full(rank);
  auto basis = [delta, t](SubsetMask L) { return subsets_of_size(delta - L, t); };
  return subset_lattice_complex(
      rank, bottom, coeff,
      [basis](SubsetMask L, SubsetMask Lp, int) {
        const auto src = basis(L);
        const auto dst = basis(Lp);
        IntegerMatrix m(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
          auto it = std::lower_bound(dst.begin(), dst.end(), src[j]);
          m(static_cast<std::size_t>(it - dst.begin()), j) = 1;
        }
        return m;
      },
      [basis, coeff](SubsetMask L) {
        std::vector<std::string> names;
        if (coeff(L) == 0) return names;
        for (SubsetMask S : basis(L)) names.push_back("w" + S.to_string());
        return names;
      });
}

}  // namespace

ExtTable trivial_cohomology(const RootSystem& rs, const RingSpec& spec, int center_rank) {
  if (center_rank < 0) throw ConfigError("center rank must be non-negative");
  ExtTable t = exterior_table(center_rank, 0);
  t.within_hypotheses = hypotheses(rs, spec);
  return t;
}

ExtTable induced_cohomology(const RootSystem& rs, SubsetMask I, const RingSpec& spec) {
  require_subset(rs, I, "I");
  ExtTable t = exterior_table((rs.full_mask() - I).size(), 0);
  t.within_hypotheses = hypotheses(rs, spec);
  return t;
}

ExtTable ext_induced_closed(const RootSystem& rs, SubsetMask I, SubsetMask J, const RingSpec& spec) {
  require_subset(rs, I, "I");
  require_subset(rs, J, "J");
  ExtTable t;
  if (J.subset_of(I)) t = exterior_table((rs.full_mask() - J).size(), 0);
  t.within_hypotheses = hypotheses(rs, spec);
  return t;
}

std::optional<VanishingCertificate> vanishing_certificate(const RootSystem& rs, const DoubleCosetRep& rep,
                                                          const RingSpec& spec) {
  const WeylElement& w = rep.w;
  const SubsetMask I = rep.I, J = rep.J;
  const SubsetMask delta = rs.full_mask();
  if (w.is_identity() && J.subset_of(I)) return std::nullopt;

  std::vector<int> candidates;
  bool from_delta = false;
  if (!w.is_identity()) {
    // β ∈ Δ∖J with wβ ∈ Φ^-∖Φ^-_I.
    for (int beta : (delta - J).indices()) {
      SignedRoot img = w.image(beta);
      if (!img.positive && !rs.support(img.index).subset_of(I)) candidates.push_back(beta);
    }
    if (candidates.empty())
      throw ContractError("no vanishing direction for nontrivial double coset of length " + std::to_string(rep.length) +
                          " (I=" + I.to_string() + ", J=" + J.to_string() + ")");
  } else {
    if (!rep.gamma_exp.is_zero()) throw ContractError("identity coset with nonzero gamma exponent");
    from_delta = true;
    for (int beta : (delta - (J & I)).indices())
      if (cofundamental_pairing(rep.delta_exp, beta) != 0) candidates.push_back(beta);
    if (candidates.empty())
      throw ContractError("delta exponent trivial on Z(M_{J∩I}) although J ⊄ I (I=" + I.to_string() +
                          ", J=" + J.to_string() + ")");
  }

  std::string tried;
  for (int beta : candidates) {
    const std::int64_t g = cofundamental_pairing(rep.gamma_exp, beta);
    const std::int64_t d = cofundamental_pairing(rep.delta_exp, beta);
    if (!from_delta && d != 0) throw ContractError("delta exponent nonzero outside J");
    const std::int64_t signed_exp = d - g;
    const std::int64_t e = signed_exp < 0 ? -signed_exp : signed_exp;
    BigInt value = q_power_minus_one(spec, static_cast<std::uint64_t>(e));
    if (e != 0 && is_unit(value, spec)) {
      VanishingCertificate c;
      c.rep = rep;
      c.beta_index = beta;
      c.exponent = e;
      c.unit_value = reduce(value, spec);
      c.from_delta = from_delta;
      return c;
    }
    tried += (tried.empty() ? "" : ", ") + std::string("beta=") + std::to_string(beta) + " e=" + std::to_string(e);
  }
  throw RingAssumptionError("no q-power unit for stratum of length " + std::to_string(rep.length) + " (I=" +
                            I.to_string() + ", J=" + J.to_string() + ") over " + spec.to_string() + ": tried " +
                            tried + "; see the bon/banal_proxy report");
}

ExtTable ext_induced_via_strata(const WeylGroup& group, SubsetMask I, SubsetMask J, const RingSpec& spec,
                                std::vector<VanishingCertificate>* certificates) {
  const RootSystem& rs = group.root_system();
  require_subset(rs, I, "I");
  require_subset(rs, J, "J");
  ExtTable out;
  out.provenance = Method::complex_built;
  out.within_hypotheses = hypotheses(rs, spec);
  for (const DoubleCosetRep& rep : kostant_reps(group, I, J)) {
    auto cert = vanishing_certificate(rs, rep, spec);
    if (cert) {
      if (certificates) certificates->push_back(std::move(*cert));
      continue;
    }
    // Surviving stratum: Ext^*_{M_J}(1, 1) = Λ^* X(M_J).
    const int n = (rs.full_mask() - J).size();
    for (int j = 0; j <= n; ++j) out.add_free(j, binomial(n, j));
  }
  return out;
}

ExtTable ext_v_to_induced(const RootSystem& rs, SubsetMask I, SubsetMask J, const RingSpec& spec, Method method,
                          ExtTrace* trace) {
  require_subset(rs, I, "I");
  require_subset(rs, J, "J");
  const int rank = rs.rank();
  const SubsetMask delta = rs.full_mask();
  const DegreeShift shift = degree_shift(ShiftKind::ext_v_to_induced, rank, I, J);
  const int nJ = (delta - J).size();

  ExtTable out;
  if (method == Method::closed_form) {
    if (shift.K == delta) out = exterior_table(nJ, shift.expected);
  } else {
    // Hom(-, i_{P_J}) applied to the resolution of v_{P_I}: row q is the dual
    // of the lattice complex over L ⊇ I with coefficients Ext^q(i_{P_L}, i_{P_J}).
    std::vector<Spot> spots;
    for (int q = 0; q <= nJ; ++q) {
      ChainComplex row = subset_lattice_complex(
          rank, I, [&](SubsetMask L) { return induced_ext_rank(rank, L, J, q); },
          [&](SubsetMask L, SubsetMask, int) {
            return IntegerMatrix::identity(induced_ext_rank(rank, L, J, q));
          });
      ChainComplex ext_row = row.dual();
      HomologyResult h = homology_with_coefficients(ext_row, spec);
      record(trace, "ext_v_to_induced row q=" + std::to_string(q), ext_row, h);
      for (std::size_t p = 0; p < h.degrees.size(); ++p)
        spots.push_back({static_cast<int>(p), q, h.degrees[p]});
    }
    out = assemble(spots, shift.offset, Method::complex_built);
  }
  out.provenance = method;
  out.within_hypotheses = hypotheses(rs, spec);
  return out;
}

ExtTable cohomology_v(const RootSystem& rs, SubsetMask I, const RingSpec& spec, Method method, ExtTrace* trace) {
  require_subset(rs, I, "I");
  const int rank = rs.rank();
  const DegreeShift shift = degree_shift(ShiftKind::cohomology_v, rank, I, I);
  const int nI = (rs.full_mask() - I).size();

  ExtTable out;
  if (method == Method::closed_form) {
    out.add_free(shift.expected, 1);
  } else {
    std::vector<Spot> spots;
    for (int t = 0; t <= nI; ++t) {
      ChainComplex row = exterior_row_complex(rank, I, t);
      HomologyResult h = homology_with_coefficients(row, spec);
      record(trace, "cohomology_v row t=" + std::to_string(t), row, h);
      for (std::size_t s = 0; s < h.degrees.size(); ++s) spots.push_back({static_cast<int>(s), t, h.degrees[s]});
    }
    out = assemble(spots, shift.offset, Method::complex_built);
  }
  out.provenance = method;
  out.within_hypotheses = hypotheses(rs, spec);
  return out;
}

ExtTable ext_steinberg(const RootSystem& rs, SubsetMask I, SubsetMask J, const RingSpec& spec, Method method,
                       int center_rank, ExtTrace* trace) {
  require_subset(rs, I, "I");
  require_subset(rs, J, "J");
  if (center_rank < 0) throw ConfigError("center rank must be non-negative");
  const int rank = rs.rank();
  const SubsetMask delta = rs.full_mask();
  const DegreeShift shift = degree_shift(ShiftKind::ext_steinberg, rank, I, J);
  const int nI = (delta - I).size();
  const int nJ = (delta - J).size();

  ExtTable semisimple;
  if (method == Method::closed_form) {
    semisimple.add_free(shift.expected, 1);
  } else {
    // Ext(v_{P_I}, -) applied to the resolution of v_{P_J}: row q is the
    // lattice complex over L ⊇ J with coefficients Ext^q(v_{P_I}, i_{P_L}),
    // which vanish unless L ⊇ K = (Δ∖I) ∪ J.
    std::vector<Spot> spots;
    for (int t = 0; t <= nJ; ++t) {
      const int q = t + nI;
      CoefficientRank coeff = [&, q](SubsetMask L) { return v_to_induced_rank(rank, I, L, q); };
      ChainComplex row = exterior_inclusion_lattice(rank, J, t, coeff);
      HomologyResult h = homology_with_coefficients(row, spec);
      record(trace, "ext_steinberg row q=" + std::to_string(q), row, h);
      for (std::size_t s = 0; s < h.degrees.size(); ++s) spots.push_back({static_cast<int>(s), t, h.degrees[s]});
    }
    semisimple = assemble(spots, shift.offset, Method::complex_built);
  }
  semisimple.provenance = method;
  ExtTable out = tensor_center(semisimple, center_rank);
  out.provenance = method;
  out.within_hypotheses = hypotheses(rs, spec);
  return out;
}

std::string Orientation::to_string() const {
  std::string s;
  for (bool f : forward) s += f ? 'F' : 'B';
  return s;
}

Orientation orientation_from_subset(int k, SubsetMask I) {
  if (k < 1 || k - 1 > kMaxRank) throw ConfigError("segment length k out of range");
  if (!I.fits_rank(k - 1)) throw ConfigError("subset " + I.to_string() + " not inside Δ_k");
  Orientation o;
  o.forward.resize(static_cast<std::size_t>(k - 1));
  for (int i = 0; i < k - 1; ++i) o.forward[i] = I.contains(i);
  return o;
}

SubsetMask subset_from_orientation(const Orientation& o) {
  SubsetMask s;
  for (std::size_t i = 0; i < o.forward.size(); ++i)
    if (o.forward[i]) s = s.with(static_cast<int>(i));
  return s;
}

Orientation orientation_from_permutation(int k, std::span<const int> w) {
  if (k < 1 || static_cast<int>(w.size()) != k) throw ConfigError("permutation length must equal k");
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int v : w) {
    if (v < 0 || v >= k || seen[v]) throw ConfigError("not a permutation of {0..k-1}");
    seen[v] = 1;
  }
  Orientation o;
  o.forward.resize(static_cast<std::size_t>(k - 1));
  for (int i = 0; i + 1 < k; ++i) o.forward[i] = w[i] < w[i + 1];
  return o;
}

ExtTable ext_cuspidal_line(int k, SubsetMask I, SubsetMask J, const RingSpec& spec) {
  if (k < 2) throw ConfigError("segment length k must be at least 2");
  if (!I.fits_rank(k - 1) || !J.fits_rank(k - 1)) throw ConfigError("subset not inside Δ_k");
  const int i = (I | J).size() - (I & J).size();
  ExtTable out;
  out.add_free(i, 1);
  out.add_free(i + 1, 1);

  const RootSystem rs = build_root_system(Series::A, k - 1);
  const ExtTable reference = ext_steinberg(rs, I, J, spec, Method::closed_form, 1);
  if (!out.same_modules(reference))
    throw VerificationFailure("cuspidal-line Ext " + out.to_string() + " differs from rank-one-center Steinberg Ext " +
                              reference.to_string());
  out.within_hypotheses = reference.within_hypotheses;
  return out;
}

}  // namespace steinext
