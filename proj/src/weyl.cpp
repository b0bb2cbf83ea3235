#include "steinext/weyl.hpp"

#include "steinext/errors.hpp"

#include <algorithm>
#include <deque>

namespace steinext {

namespace {

std::int32_t encode(SignedRoot r) { return r.positive ? r.index + 1 : -(r.index + 1); }

SignedRoot decode(std::int32_t v) { return v > 0 ? SignedRoot{v - 1, true} : SignedRoot{-v - 1, false}; }

SignedRoot negate(SignedRoot r) { return SignedRoot{r.index, !r.positive}; }

}  // namespace

WeylElement::WeylElement(std::vector<std::int32_t> action) : action_(std::move(action)) {
  length_ = static_cast<int>(std::count_if(action_.begin(), action_.end(), [](std::int32_t v) { return v < 0; }));
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<std::int32_t> action(rs.num_positive_roots());
  for (std::size_t k = 0; k < action.size(); ++k) action[k] = static_cast<std::int32_t>(k + 1);
  return WeylElement(std::move(action));
}

bool WeylElement::is_identity() const {
  for (std::size_t k = 0; k < action_.size(); ++k)
    if (action_[k] != static_cast<std::int32_t>(k + 1)) return false;
  return true;
}

SignedRoot WeylElement::image(int root_index) const { return decode(action_[root_index]); }

SignedRoot WeylElement::image(SignedRoot r) const {
  SignedRoot img = image(r.index);
  return r.positive ? img : negate(img);
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  std::vector<std::int32_t> out(action_.size());
  for (std::size_t k = 0; k < action_.size(); ++k) out[k] = encode(image(other.image(static_cast<int>(k))));
  return WeylElement(std::move(out));
}

WeylElement WeylElement::inverse() const {
  std::vector<std::int32_t> out(action_.size());
  for (std::size_t k = 0; k < action_.size(); ++k) {
    SignedRoot img = image(static_cast<int>(k));
    // w(β_k) = ±β_m  =>  w^{-1}(β_m) = ±β_k.
    out[img.index] = encode(SignedRoot{static_cast<int>(k), img.positive});
  }
  return WeylElement(std::move(out));
}

WeylElement WeylElement::left_simple(const RootSystem& rs, int i) const {
  std::vector<std::int32_t> out(action_.size());
  for (std::size_t k = 0; k < action_.size(); ++k) {
    SignedRoot img = image(static_cast<int>(k));
    SignedRoot r = rs.reflect_root(i, img.index);
    out[k] = encode(img.positive ? r : negate(r));
  }
  return WeylElement(std::move(out));
}

WeylElement WeylElement::right_simple(const RootSystem& rs, int i) const {
  std::vector<std::int32_t> out(action_.size());
  for (std::size_t k = 0; k < action_.size(); ++k) out[k] = encode(image(rs.reflect_root(i, static_cast<int>(k))));
  return WeylElement(std::move(out));
}

std::vector<std::vector<std::int64_t>> WeylElement::linear_map(const RootSystem& rs) const {
  const int n = rs.rank();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    SignedRoot img = image(j);
    const auto& c = rs.positive_roots()[img.index].coords;
    for (int i = 0; i < n; ++i) m[i][j] = img.positive ? c[i] : -c[i];
  }
  return m;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t v : w.action()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

WeylGroup::WeylGroup(RootSystem rs, std::vector<WeylElement> elements)
    : rs_(std::move(rs)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::ptrdiff_t WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

namespace {

std::vector<WeylElement> closure(const RootSystem& rs, SubsetMask generators, std::size_t cap) {
  std::unordered_map<WeylElement, bool, WeylElementHash> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue;
  auto id = WeylElement::identity(rs);
  seen.emplace(id, true);
  queue.push_back(id);
  const auto gens = generators.indices();
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (int i : gens) {
      WeylElement v = w.left_simple(rs, i);
      if (seen.emplace(v, true).second) {
        if (seen.size() > cap)
          throw ResourceError("Weyl group of " + rs.name() + " exceeds enumeration cap " + std::to_string(cap) +
                              " (at least " + std::to_string(seen.size()) + " elements)");
        queue.push_back(v);
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WeylGroup generate_weyl(const RootSystem& rs, std::size_t cap) {
  return WeylGroup(rs, closure(rs, rs.full_mask(), cap));
}

std::vector<WeylElement> parabolic_subgroup(const RootSystem& rs, SubsetMask subset) {
  if (!subset.fits_rank(rs.rank())) throw ConfigError("subset " + subset.to_string() + " exceeds rank");
  return closure(rs, subset, kDefaultWeylCap);
}

CharacterVector gamma_exponents(const RootSystem& rs, const WeylElement& w, SubsetMask I, SubsetMask J) {
  CharacterVector out(static_cast<std::size_t>(rs.rank()));
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (rs.support(k).subset_of(J)) continue;
    SignedRoot img = w.image(k);
    if (!img.positive && !rs.support(img.index).subset_of(I)) out += rs.positive_roots()[k];
  }
  return out;
}

CharacterVector delta_exponents(const RootSystem& rs, const WeylElement& w, SubsetMask I, SubsetMask J) {
  CharacterVector out(static_cast<std::size_t>(rs.rank()));
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (!rs.support(k).subset_of(J)) continue;
    SignedRoot img = w.image(k);
    if (img.positive && !rs.support(img.index).subset_of(I)) out += rs.positive_roots()[k];
  }
  return out;
}

SubsetMask intersect_levi(const RootSystem& rs, const WeylElement& w, SubsetMask I, SubsetMask J) {
  SubsetMask out;
  for (int beta : J.indices()) {
    SignedRoot img = w.image(beta);
    if (!rs.support(img.index).subset_of(I)) continue;
    if (!img.positive || !rs.is_simple(img.index))
      throw ContractError("intersect_levi: w is not a Kostant representative for I=" + I.to_string() +
                          ", J=" + J.to_string());
    out = out.with(beta);
  }
  return out;
}

std::vector<DoubleCosetRep> kostant_reps(const WeylGroup& group, SubsetMask I, SubsetMask J) {
  const RootSystem& rs = group.root_system();
  if (!I.fits_rank(rs.rank()) || !J.fits_rank(rs.rank())) throw ConfigError("subset exceeds rank");
  const auto& elems = group.elements();
  std::vector<char> visited(elems.size(), 0);
  std::vector<DoubleCosetRep> reps;
  std::size_t covered = 0;
  const auto left = I.indices();
  const auto right = J.indices();

  // elements() is sorted by length, so the first unvisited element of each
  // coset is of minimal length within it.
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> coset{start};
    visited[start] = 1;
    for (std::size_t head = 0; head < coset.size(); ++head) {
      const WeylElement& w = elems[coset[head]];
      auto visit = [&](const WeylElement& v) {
        auto idx = group.index_of(v);
        if (idx < 0) throw ContractError("double coset left the group");
        if (!visited[idx]) {
          visited[idx] = 1;
          coset.push_back(static_cast<std::size_t>(idx));
        }
      };
      for (int i : left) visit(w.left_simple(rs, i));
      for (int j : right) visit(w.right_simple(rs, j));
    }
    const WeylElement& rep = elems[start];
    const auto minimal = std::count_if(coset.begin(), coset.end(),
                                       [&](std::size_t c) { return elems[c].length() == rep.length(); });
    if (minimal != 1)
      throw ContractError("double coset in " + rs.name() + " has " + std::to_string(minimal) +
                          " minimal-length elements");
    covered += coset.size();

    DoubleCosetRep r;
    r.w = rep;
    r.I = I;
    r.J = J;
    r.length = rep.length();
    r.gamma_exp = gamma_exponents(rs, rep, I, J);
    r.delta_exp = delta_exponents(rs, rep, I, J);
    r.levi = intersect_levi(rs, rep, I, J);
    r.coset_size = coset.size();
    reps.push_back(std::move(r));
  }
  if (covered != elems.size()) throw ContractError("double cosets do not partition W");
  std::sort(reps.begin(), reps.end(), [](const DoubleCosetRep& a, const DoubleCosetRep& b) { return a.w < b.w; });
  return reps;
}

std::vector<DoubleCosetRep> kostant_reps(const RootSystem& rs, SubsetMask I, SubsetMask J) {
  return kostant_reps(generate_weyl(rs), I, J);
}

}  // namespace steinext
