#pragma once

#include "liecell/numeric.hpp"

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace liecell {

// Integer lattice algorithms on small dense matrices. All arithmetic is exact
// (cpp_int), so no pivot growth can overflow.

struct HnfCols {
  ZMat h;                       // m x n, column staircase form
  ZMat u;                       // n x n unimodular with  input * u = h
  std::vector<std::size_t> pivot_row;  // pivot row of column j, for j < rank
};

namespace detail {

inline void col_axpy(ZMat& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (auto& row : m) row[dst] -= q * row[src];
}

inline void col_swap(ZMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

inline void col_negate(ZMat& m, std::size_t c) {
  for (auto& row : m) row[c] = -row[c];
}

}  // namespace detail

// Column-style Hermite form: unimodular column operations only. Pivot rows
// strictly increase across pivot columns; entries right of a pivot vanish in
// its row; earlier pivot columns are reduced into [0, pivot) at later pivot
// rows, which makes the result canonical for a fixed input.
inline HnfCols hnf_cols(const ZMat& input) {
  const std::size_t m = input.size();
  const std::size_t n = m ? input[0].size() : 0;
  HnfCols r;
  r.h = input;
  r.u.assign(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) r.u[i][i] = 1;

  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j) {
        if (r.h[row][j] == 0) continue;
        if (best == n || boost::multiprecision::abs(r.h[row][j]) <
                             boost::multiprecision::abs(r.h[row][best]))
          best = j;
      }
      if (best == n) break;  // no pivot in this row
      detail::col_swap(r.h, col, best);
      detail::col_swap(r.u, col, best);
      bool clean = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (r.h[row][j] == 0) continue;
        Int q = r.h[row][j] / r.h[row][col];
        detail::col_axpy(r.h, j, col, q);
        detail::col_axpy(r.u, j, col, q);
        if (r.h[row][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r.h[row][col] == 0) continue;  // row skipped, no pivot placed
    if (r.h[row][col] < 0) {
      detail::col_negate(r.h, col);
      detail::col_negate(r.u, col);
    }
    for (std::size_t j = 0; j < col; ++j) {
      Int q = floor_div(r.h[row][j], r.h[row][col]);
      detail::col_axpy(r.h, j, col, q);
      detail::col_axpy(r.u, j, col, q);
    }
    r.pivot_row.push_back(row);
    ++col;
  }
  return r;
}

// Basis of { y in Z^n : M y = 0 }, returned as rows.
inline ZMat z_kernel(const ZMat& m, std::size_t n_cols) {
  if (m.empty()) {  // kernel of the empty map is everything
    ZMat basis(n_cols, ZVec(n_cols, 0));
    for (std::size_t i = 0; i < n_cols; ++i) basis[i][i] = 1;
    return basis;
  }
  HnfCols r = hnf_cols(m);
  const std::size_t rank = r.pivot_row.size();
  ZMat basis;
  for (std::size_t j = rank; j < n_cols; ++j) {
    ZVec v(n_cols);
    for (std::size_t i = 0; i < n_cols; ++i) v[i] = r.u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Integer solution x of M x = b (columns of M span the lattice), if any.
inline std::optional<ZVec> solve_integral(const ZMat& m, const ZVec& b) {
  const std::size_t rows = m.size();
  const std::size_t n = rows ? m[0].size() : 0;
  HnfCols r = hnf_cols(m);
  ZVec residual = b;
  ZVec y(n, 0);
  for (std::size_t j = 0; j < r.pivot_row.size(); ++j) {
    std::size_t pr = r.pivot_row[j];
    if (residual[pr] % r.h[pr][j] != 0) return std::nullopt;
    Int q = residual[pr] / r.h[pr][j];
    y[j] = q;
    if (q != 0)
      for (std::size_t i = 0; i < rows; ++i) residual[i] -= q * r.h[i][j];
  }
  for (const Int& v : residual)
    if (v != 0) return std::nullopt;
  ZVec x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) x[i] += r.u[i][j] * y[j];
  return x;
}

// Smith normal form diagonal of an integer matrix (d_1 | d_2 | ...). Trailing
// zeros indicate rank deficiency.
inline std::vector<Int> smith_diagonal(ZMat a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  const std::size_t k = std::min(m, n);
  std::vector<Int> diag(k, 0);
  std::size_t t = 0;
  while (t < k) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == m || boost::multiprecision::abs(a[i][j]) <
                           boost::multiprecision::abs(a[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // all remaining entries zero
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

    bool again = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      Int q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) again = true;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      Int q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) again = true;
    }
    if (again) continue;

    // divisibility fix-up: fold a bad entry into the pivot's row
    bool bad = false;
    for (std::size_t i = t + 1; i < m && !bad; ++i)
      for (std::size_t j = t + 1; j < n && !bad; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
          bad = true;
        }
    if (bad) continue;

    diag[t] = boost::multiprecision::abs(a[t][t]);
    ++t;
  }
  // enforce the divisibility chain
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (diag[j] == 0) continue;
      if (diag[i] == 0) {
        std::swap(diag[i], diag[j]);
        continue;
      }
      Int g = igcd(diag[i], diag[j]);
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// Z^n intersected with the rational span of the given rows.
inline ZMat lattice_in_subspace(const QMat& span_rows, std::size_t n) {
  if (span_rows.empty()) return {};
  ZMat scaled;
  for (const QVec& r : span_rows) {
    Int d = denom_lcm(r);
    ZVec z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = num(r[i] * Rat(d));
    scaled.push_back(std::move(z));
  }
  ZMat normals = z_kernel(scaled, n);
  return z_kernel(normals, n);
}

// Decide x in span(L) + Z^n and return a canonical witness g in span(L) with
// x - g integral. L holds lattice basis rows of Z^n ∩ span; the test clears
// denominators and runs one integral solve on the stacked generator matrix.
inline std::optional<QVec> witness_mod_lattice(const QVec& x, const ZMat& l) {
  const std::size_t n = x.size();
  const std::size_t d = l.size();
  Int big_d = denom_lcm(x);
  ZMat cols(n, ZVec(d + n, 0));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[i][j] = l[j][i];
  for (std::size_t i = 0; i < n; ++i) cols[i][d + i] = big_d;
  ZVec b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = num(x[i] * Rat(big_d));
  auto y = solve_integral(cols, b);
  if (!y) return std::nullopt;
  QVec g = qvec_zero(n);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) g[i] += Rat((*y)[j] * l[j][i], big_d);
  if (d == 0) return g;
  // canonicalize: coefficients over the basis rows reduced into [0, 1)
  QMat sys(n, qvec_zero(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) sys[i][j] = Rat(l[j][i]);
  auto coeff = q_solve(sys, g);
  assert(coeff);
  QVec canon = qvec_zero(n);
  for (std::size_t j = 0; j < d; ++j) {
    Rat c = frac_part((*coeff)[j]);
    for (std::size_t i = 0; i < n; ++i) canon[i] += c * Rat(l[j][i]);
  }
  return canon;
}

// Invariant factors (> 1) of Z^n / row-span, or nullopt when the quotient is
// infinite (row rank < n).
inline std::optional<std::vector<Int>> quotient_invariants(const ZMat& rows,
                                                           std::size_t n) {
  ZMat m = rows;
  if (m.size() < n) return std::nullopt;
  auto diag = smith_diagonal(std::move(m));
  std::vector<Int> out;
  std::size_t nonzero = 0;
  for (const Int& d : diag)
    if (d != 0) {
      ++nonzero;
      if (d > 1) out.push_back(d);
    }
  if (nonzero < n) return std::nullopt;
  return out;
}

// Invariant factors (> 1) of L2 / L1 for nested full-rank lattices, where
// L2 = span(upper ∪ lower) and L1 = span(lower), both given as rows.
inline std::vector<Int> lattice_quotient_invariants(const ZMat& upper,
                                                    const ZMat& lower,
                                                    std::size_t n) {
  auto column_basis = [&](const ZMat& rows_a, const ZMat& rows_b) {
    ZMat cols(n, ZVec(rows_a.size() + rows_b.size(), 0));
    for (std::size_t j = 0; j < rows_a.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) cols[i][j] = rows_a[j][i];
    for (std::size_t j = 0; j < rows_b.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) cols[i][rows_a.size() + j] = rows_b[j][i];
    HnfCols h = hnf_cols(cols);
    assert(h.pivot_row.size() == n);
    ZMat basis(n, ZVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis[i][j] = h.h[i][j];
    return basis;
  };
  ZMat b2 = column_basis(upper, lower);   // columns form a basis of L2
  ZMat b1 = column_basis(lower, {});      // columns form a basis of L1
  ZMat x(n, ZVec(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    ZVec b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = b1[i][c];
    auto sol = solve_integral(b2, b);
    assert(sol);
    for (std::size_t i = 0; i < n; ++i) x[i][c] = (*sol)[i];
  }
  auto diag = smith_diagonal(std::move(x));
  std::vector<Int> out;
  for (const Int& d : diag)
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace liecell
