#include "steinext/errors.hpp"
#include "steinext/homology.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace steinext {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw ContractError("matrix entry count does not match shape");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ContractError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ContractError("matrix product shape mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

namespace {

// Row operations are mirrored on U (left), column operations on V (right),
// so that U * m * V equals the working matrix at every step.
struct SmithState {
  IntegerMatrix a;
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (v) v->swap_cols(x, y);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_row_multiple(dst, src, f);
    if (u) u->add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_col_multiple(dst, src, f);
    if (v) v->add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    a.negate_row(r);
    if (u) u->negate_row(r);
  }
};

// Smallest nonzero |entry| in the block a[t.., t..].
std::optional<std::pair<std::size_t, std::size_t>> min_entry(const IntegerMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const BigInt& x = a(i, j);
      if (x == 0) continue;
      BigInt ax = abs(x);
      if (!best || ax < best_abs) {
        best = {i, j};
        best_abs = ax;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

std::vector<BigInt> reduce(SmithState& s) {
  std::vector<BigInt> divisors;
  const std::size_t n = std::min(s.a.rows(), s.a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = min_entry(s.a, t);
    if (!pivot) break;
    s.swap_rows(t, pivot->first);
    s.swap_cols(t, pivot->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.a.rows(); ++i) {
        if (s.a(i, t) == 0) continue;
        BigInt q = s.a(i, t) / s.a(t, t);
        s.add_row(i, t, -q);
        if (s.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.a.cols(); ++j) {
        if (s.a(t, j) == 0) continue;
        BigInt q = s.a(t, j) / s.a(t, t);
        s.add_col(j, t, -q);
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi = t, bj = t;
        BigInt best = abs(s.a(t, t));
        for (std::size_t i = t + 1; i < s.a.rows(); ++i)
          if (s.a(i, t) != 0 && abs(s.a(i, t)) < best) {
            best = abs(s.a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < s.a.cols(); ++j)
          if (s.a(t, j) != 0 && abs(s.a(t, j)) < best) {
            best = abs(s.a(t, j));
            bi = t;
            bj = j;
          }
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < s.a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < s.a.cols(); ++j)
          if (s.a(i, j) % s.a(t, t) != 0) {
            s.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s.a(t, t) < 0) s.negate_row(t);
    divisors.push_back(s.a(t, t));
  }
  return divisors;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  SmithState s{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  auto divisors = reduce(s);
  return SmithResult{std::move(divisors), std::move(*s.u), std::move(*s.v)};
}

std::vector<BigInt> elementary_divisors(const IntegerMatrix& m) {
  SmithState s{m, std::nullopt, std::nullopt};
  return reduce(s);
}

namespace {

// Fraction-free elimination; returns rank and leaves the last pivot (the
// determinant up to sign for full-rank square input) in `last`.
std::size_t bareiss(IntegerMatrix a, BigInt* det) {
  const std::size_t rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, col) == 0) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != rank) {
      a.swap_rows(piv, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt x = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = x;
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  if (det) *det = (rank == rows && rows == cols) ? BigInt(sign * prev) : BigInt(0);
  return rank;
}

}  // namespace

std::size_t rational_rank(const IntegerMatrix& m) { return bareiss(m, nullptr); }

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw ContractError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  BigInt det;
  bareiss(m, &det);
  return det;
}

}  // namespace steinext
