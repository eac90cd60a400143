#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyclass/errors.hpp"
#include "polyclass/matrix.hpp"

namespace polyclass {

namespace detail {

inline BigInt abs_int(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt floor_div(const BigInt &a, const BigInt &b) {
  BigInt q = a / b; // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// In-place reduced row echelon form over Q. Returns pivot columns.
inline std::vector<std::size_t> rref_in_place(RatMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(r, p);
    const BigRat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      const BigRat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace detail

inline std::size_t rank(const RatMatrix &m) {
  RatMatrix work = m;
  return detail::rref_in_place(work).size();
}

/// Rank over the rationals.
inline std::size_t rank(const IntMatrix &m) { return rank(to_rational(m)); }

/// Basis of the right null space {x : m x = 0}; empty when m is injective.
/// One vector per free column, with a 1 in that column.
inline std::vector<RatVector> kernel_basis(const RatMatrix &m) {
  RatMatrix work = m;
  const auto pivots = detail::rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RatVector v(m.cols(), BigRat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -work(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<RatVector> kernel_basis(const IntMatrix &m) {
  return kernel_basis(to_rational(m));
}

/// Row-style Hermite normal form. Only the nonzero rows are returned; they
/// form a basis of the integer row span of m. Pivots are positive, pivot
/// columns strictly increase, and entries above a pivot lie in [0, pivot).
inline IntMatrix hnf_row_lattice(const IntMatrix &m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Euclid on column c over rows r.. until a single nonzero remains.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0)
          continue;
        if (!best || detail::abs_int(a(i, c)) < detail::abs_int(a(*best, c)))
          best = i;
      }
      if (!best)
        break;
      a.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0)
          continue;
        const BigInt q = a(i, c) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j)
          a(i, j) -= q * a(r, j);
        if (a(i, c) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (a(r, c) == 0)
      continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < a.cols(); ++j)
        a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt q = detail::floor_div(a(i, c), a(r, c));
      if (q != 0)
        for (std::size_t j = c; j < a.cols(); ++j)
          a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
  return out;
}

/// Membership of x in the row lattice whose Hermite basis is `hnf` (as
/// returned by hnf_row_lattice).
inline bool lattice_contains(const IntMatrix &hnf, std::span<const BigInt> x) {
  if (x.size() != hnf.cols())
    throw ArgumentError("lattice_contains: dimension mismatch");
  IntVector rest(x.begin(), x.end());
  std::size_t col = 0;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    std::size_t pivot = col;
    while (hnf(i, pivot) == 0)
      ++pivot;
    for (; col < pivot; ++col)
      if (rest[col] != 0)
        return false;
    if (rest[pivot] % hnf(i, pivot) != 0)
      return false;
    const BigInt q = rest[pivot] / hnf(i, pivot);
    for (std::size_t j = pivot; j < rest.size(); ++j)
      rest[j] -= q * hnf(i, j);
    col = pivot + 1;
  }
  return std::all_of(rest.begin(), rest.end(),
                     [](const BigInt &v) { return v == 0; });
}

struct SnfResult {
  std::size_t rank = 0;
  /// s_1 | s_2 | ... | s_rank, all positive.
  std::vector<BigInt> invariant_factors;

  friend bool operator==(const SnfResult &, const SnfResult &) = default;
};

/// Smith normal form diagonal. Pivot is the entry of minimal nonzero absolute
/// value in the active block, ties broken by smallest (row, col).
inline SnfResult snf(const IntMatrix &m) {
  IntMatrix a = m;
  SnfResult out;
  const std::size_t n_rows = a.rows(), n_cols = a.cols();
  for (std::size_t t = 0; t < std::min(n_rows, n_cols); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < n_rows; ++i)
        for (std::size_t j = t; j < n_cols; ++j) {
          if (a(i, j) == 0)
            continue;
          if (!pivot || detail::abs_int(a(i, j)) <
                            detail::abs_int(a(pivot->first, pivot->second)))
            pivot = {i, j};
        }
      if (!pivot)
        return out;
      a.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      const BigInt p = a(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n_rows; ++i) {
        if (a(i, t) == 0)
          continue;
        const BigInt q = a(i, t) / p;
        for (std::size_t j = t; j < n_cols; ++j)
          a(i, j) -= q * a(t, j);
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n_cols; ++j) {
        if (a(t, j) == 0)
          continue;
        const BigInt q = a(t, j) / p;
        for (std::size_t i = t; i < n_rows; ++i)
          a(i, j) -= q * a(i, t);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Row and column are clear; the pivot must divide the rest of the block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < n_rows && !offending; ++i)
        for (std::size_t j = t + 1; j < n_cols; ++j)
          if (a(i, j) % p != 0) {
            offending = i;
            break;
          }
      if (!offending)
        break;
      for (std::size_t j = t; j < n_cols; ++j)
        a(t, j) += a(*offending, j);
    }
    out.invariant_factors.push_back(detail::abs_int(a(t, t)));
    ++out.rank;
  }
  return out;
}

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw ArgumentError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace detail {

// Visits every k-subset of {0..n-1} in lexicographic order. The visitor
// returns false to stop early.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit &&visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  if (k > n)
    return true;
  for (;;) {
    if (!visit(std::span<const std::size_t>(idx)))
      return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

inline void check_minor_order(const IntMatrix &m, std::size_t i) {
  if (i > std::min(m.rows(), m.cols()))
    throw ArgumentError("gcd_minors: order exceeds min(rows, cols)");
}

} // namespace detail

/// g_i(m) by enumerating every i x i minor. Stops as soon as the gcd reaches 1.
inline BigInt gcd_minors_direct(const IntMatrix &m, std::size_t i) {
  detail::check_minor_order(m, i);
  if (i == 0)
    return 1;
  BigInt g = 0;
  detail::for_each_combination(m.rows(), i, [&](auto rs) {
    return detail::for_each_combination(m.cols(), i, [&](auto cs) {
      g = gcd(g, determinant(m.select(rs, cs)));
      return g != 1;
    });
  });
  return g;
}

/// gcd of all i x i minors; g_0 = 1 and 0 when every i x i minor vanishes.
/// Enumerates minors for i <= 4, otherwise multiplies Smith invariants.
inline BigInt gcd_minors(const IntMatrix &m, std::size_t i) {
  detail::check_minor_order(m, i);
  if (i <= 4)
    return gcd_minors_direct(m, i);
  const SnfResult s = snf(m);
  if (i > s.rank)
    return 0;
  BigInt g = 1;
  for (std::size_t k = 0; k < i; ++k)
    g *= s.invariant_factors[k];
  return g;
}

} // namespace polyclass
