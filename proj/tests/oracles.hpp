#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library routines they are compared against.

#include "steinext/homology.hpp"
#include "steinext/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // square, acting on simple-root coordinates

inline Vec reflect(const std::vector<std::vector<int>>& cartan, int i, Vec x) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < x.size(); ++j) pairing += cartan[i][j] * x[j];
  x[i] -= pairing;
  return x;
}

// Φ as the orbit of the simple roots under the simple reflections.
inline std::set<Vec> all_roots(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<Vec> seen;
  std::vector<Vec> todo;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Vec x = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      Vec y = reflect(cartan, i, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

inline std::set<Vec> positive_roots(const std::vector<std::vector<int>>& cartan) {
  std::set<Vec> out;
  for (const auto& r : all_roots(cartan))
    if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c >= 0; })) out.insert(r);
  return out;
}

inline Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec apply(const Mat& m, const Vec& x) {
  Vec y(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat simple_reflection(const std::vector<std::vector<int>>& cartan, int i) {
  const int n = static_cast<int>(cartan.size());
  Mat m = identity(n);
  for (int j = 0; j < n; ++j) m[i][j] -= cartan[i][j];
  return m;
}

// The subgroup generated by the simple reflections in `gens`, as matrices.
inline std::set<Mat> generated_group(const std::vector<std::vector<int>>& cartan, const std::vector<int>& gens) {
  const int n = static_cast<int>(cartan.size());
  std::set<Mat> seen{identity(n)};
  std::vector<Mat> todo{identity(n)};
  while (!todo.empty()) {
    Mat g = todo.back();
    todo.pop_back();
    for (int i : gens) {
      Mat h = multiply(simple_reflection(cartan, i), g);
      if (seen.insert(h).second) todo.push_back(h);
    }
  }
  return seen;
}

inline int length(const Mat& w, const std::set<Vec>& positive) {
  int l = 0;
  for (const auto& b : positive) {
    Vec y = apply(w, b);
    if (std::any_of(y.begin(), y.end(), [](std::int64_t c) { return c < 0; })) ++l;
  }
  return l;
}

struct BruteCoset {
  int min_length = 0;
  int minimal_count = 0;  // elements attaining the minimum
  std::size_t size = 0;
};

// W_I \ W / W_J by explicit set products, sorted by (min_length, size).
inline std::vector<BruteCoset> double_cosets(const std::vector<std::vector<int>>& cartan, const std::vector<int>& I,
                                             const std::vector<int>& J) {
  const int n = static_cast<int>(cartan.size());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const auto W = generated_group(cartan, all);
  const auto WI = generated_group(cartan, I);
  const auto WJ = generated_group(cartan, J);
  const auto pos = positive_roots(cartan);
  std::set<Mat> used;
  std::vector<BruteCoset> out;
  for (const Mat& w : W) {
    if (used.count(w)) continue;
    std::set<Mat> coset;
    for (const Mat& a : WI)
      for (const Mat& b : WJ) coset.insert(multiply(multiply(a, w), b));
    BruteCoset c;
    c.size = coset.size();
    c.min_length = 1 << 30;
    for (const Mat& x : coset) {
      used.insert(x);
      const int l = length(x, pos);
      if (l < c.min_length) {
        c.min_length = l;
        c.minimal_count = 0;
      }
      if (l == c.min_length) ++c.minimal_count;
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const BruteCoset& a, const BruteCoset& b) {
    return std::pair(a.min_length, a.size) < std::pair(b.min_length, b.size);
  });
  return out;
}

// ---- integer linear algebra ----

using steinext::BigInt;
using steinext::IntegerMatrix;

// Laplace expansion; fine for the small minors used here.
inline BigInt det_laplace(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    BigInt term = m[0][c] * det_laplace(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Elementary divisors from determinantal divisors D_k = gcd of k x k minors.
inline std::vector<BigInt> determinantal_divisors(const IntegerMatrix& a) {
  std::vector<BigInt> D{1};
  const std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= lim; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(a.rows(), k, 0, cur, rows);
    choose(a.cols(), k, 0, cur, cols);
    BigInt g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rs[i], cs[j]);
        BigInt det = det_laplace(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    if (g == 0) break;
    D.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < D.size(); ++k) out.push_back(D[k] / D[k - 1]);
  return out;
}

// ---- Z/d cohomology by enumeration ----

// For finite abelian H, the numbers |{x : e x = 0}| over e | d determine
// H up to isomorphism among groups of exponent dividing d.
using TorsionProfile = std::map<std::uint64_t, std::uint64_t>;

inline std::vector<std::uint64_t> divisors_of(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 1; e <= d; ++e)
    if (d % e == 0) out.push_back(e);
  return out;
}

inline TorsionProfile profile_of(std::size_t free_copies, const std::vector<BigInt>& moduli, std::uint64_t d) {
  TorsionProfile p;
  for (std::uint64_t e : divisors_of(d)) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free_copies; ++i) count *= std::gcd(e, d);
    for (const auto& m : moduli) count *= std::gcd(e, m.get_ui());
    p[e] = count;
  }
  return p;
}

inline std::vector<std::uint64_t> mat_vec_mod(const IntegerMatrix& m, const std::vector<std::uint64_t>& x,
                                              std::uint64_t d) {
  std::vector<std::uint64_t> y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * static_cast<unsigned long>(x[j]);
    BigInt r = acc % static_cast<unsigned long>(d);
    if (r < 0) r += static_cast<unsigned long>(d);
    y[i] = r.get_ui();
  }
  return y;
}

inline bool next_vector(std::vector<std::uint64_t>& x, std::uint64_t d) {
  for (auto& c : x) {
    if (++c < d) return true;
    c = 0;
  }
  return false;
}

// H^k(C ⊗ Z/d) as a torsion profile, by listing kernels and images.
inline TorsionProfile brute_profile(const steinext::ChainComplex& c, std::size_t k, std::uint64_t d) {
  const std::size_t n = c.ranks[k];
  std::set<std::vector<std::uint64_t>> kernel, image;
  std::vector<std::uint64_t> x(n, 0);
  do {
    bool in_kernel = true;
    if (k < c.differentials.size()) {
      auto y = mat_vec_mod(c.differentials[k], x, d);
      in_kernel = std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; });
    }
    if (in_kernel) kernel.insert(x);
  } while (n > 0 && next_vector(x, d));
  if (k > 0) {
    std::vector<std::uint64_t> z(c.ranks[k - 1], 0);
    do {
      image.insert(mat_vec_mod(c.differentials[k - 1], z, d));
    } while (!z.empty() && next_vector(z, d));
  } else {
    image.insert(std::vector<std::uint64_t>(n, 0));
  }
  // Elements of H killed by e: cosets x + im with e x ∈ im.
  TorsionProfile p;
  for (std::uint64_t e : divisors_of(d)) {
    std::uint64_t killed = 0;
    for (const auto& v : kernel) {
      std::vector<std::uint64_t> ev(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) ev[i] = (e * v[i]) % d;
      if (image.count(ev)) ++killed;
    }
    p[e] = killed / image.size();
  }
  return p;
}

// Multiset of prime-power cyclic factors; two finite abelian groups are
// isomorphic iff these agree.
inline std::vector<std::uint64_t> primary_parts(const std::vector<BigInt>& moduli) {
  std::vector<std::uint64_t> out;
  for (const auto& m : moduli) {
    std::uint64_t v = m.get_ui();
    for (std::uint64_t p = 2; v > 1; ++p) {
      std::uint64_t pk = 1;
      while (v % p == 0) {
        v /= p;
        pk *= p;
      }
      if (pk > 1) out.push_back(pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- random complexes with known cohomology ----

struct KnownComplex {
  steinext::ChainComplex complex;
  std::vector<std::size_t> free;                 // free rank of H^k over Z
  std::vector<std::vector<BigInt>> torsion;      // torsion of H^k over Z
};

// Random unimodular P with its inverse, from elementary operations.
inline std::pair<IntegerMatrix, IntegerMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntegerMatrix P = IntegerMatrix::identity(n), Pinv = IntegerMatrix::identity(n);
  if (n < 2) return {P, Pinv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const int f = coef(rng);
    // P <- E P with E = I + f e_{ab}; P^{-1} <- P^{-1} E^{-1}.
    P.add_row_multiple(a, b, f);
    Pinv.add_col_multiple(b, a, -f);
  }
  return {P, Pinv};
}

// A standard complex (each C^k = targets ⊕ survivors ⊕ sources, sources
// hitting the next targets with chosen divisors), conjugated by random
// unimodular changes of basis.
inline KnownComplex random_known_complex(std::mt19937_64& rng, std::size_t degrees, std::size_t max_block) {
  std::uniform_int_distribution<std::size_t> block(0, max_block);
  std::uniform_int_distribution<int> divisor_pick(0, 5);
  const long choices[] = {1, 1, 2, 3, 4, 6};
  std::vector<std::size_t> survivors(degrees), sources(degrees);
  std::vector<std::vector<long>> divs(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    survivors[k] = block(rng);
    sources[k] = k + 1 < degrees ? block(rng) : 0;
    for (std::size_t i = 0; i < sources[k]; ++i) divs[k].push_back(choices[divisor_pick(rng)]);
  }
  KnownComplex out;
  auto& c = out.complex;
  std::vector<std::size_t> targets(degrees, 0);
  for (std::size_t k = 1; k < degrees; ++k) targets[k] = sources[k - 1];
  for (std::size_t k = 0; k < degrees; ++k) c.ranks.push_back(targets[k] + survivors[k] + sources[k]);

  std::vector<std::pair<IntegerMatrix, IntegerMatrix>> bases;
  for (std::size_t k = 0; k < degrees; ++k) bases.push_back(random_unimodular(c.ranks[k], rng));
  for (std::size_t k = 0; k + 1 < degrees; ++k) {
    IntegerMatrix D(c.ranks[k + 1], c.ranks[k]);
    const std::size_t src0 = targets[k] + survivors[k];
    for (std::size_t i = 0; i < sources[k]; ++i) D(i, src0 + i) = divs[k][i];
    c.differentials.push_back(bases[k + 1].first * D * bases[k].second);
  }
  out.free.resize(degrees);
  out.torsion.resize(degrees);
  for (std::size_t k = 0; k < degrees; ++k) {
    out.free[k] = survivors[k];
    if (k > 0)
      for (long e : divs[k - 1])
        if (e > 1) out.torsion[k].push_back(e);
    std::sort(out.torsion[k].begin(), out.torsion[k].end());
  }
  return out;
}

}  // namespace oracle
