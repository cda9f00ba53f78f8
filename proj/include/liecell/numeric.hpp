#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<int>;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

// floor division for cpp_int (operator/ truncates toward zero)
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Rat frac_part(const Rat& q) { return q - Rat(floor_div(num(q), den(q))); }

inline Int denom_lcm(const QVec& v) {
  Int d = 1;
  for (const Rat& q : v) d = ilcm(d, den(q));
  return d;
}

// canonical "p/q" in lowest terms, "p" when q == 1
inline std::string rat_str(const Rat& q) {
  std::string s = num(q).str();
  if (den(q) != 1) s += "/" + den(q).str();
  return s;
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + s + "'");
  }
}

inline QVec qvec_zero(std::size_t n) { return QVec(n, Rat(0)); }

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline QVec qvec_scale(const Rat& c, const QVec& a) {
  QVec r(a);
  for (Rat& x : r) x *= c;
  return r;
}

inline bool qvec_is_integral(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& q) { return den(q) == 1; });
}

inline QVec to_qvec(const IVec& v) {
  QVec r;
  r.reserve(v.size());
  for (int x : v) r.emplace_back(x);
  return r;
}

inline QVec to_qvec(const ZVec& v) {
  QVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

// Exact inverse by Gauss-Jordan. Throws on a singular input.
inline QMat q_inverse(QMat a) {
  const std::size_t n = a.size();
  QMat inv(n, qvec_zero(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("q_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Any exact solution of A x = b (A is m x k, free variables set to 0).
inline std::optional<QVec> q_solve(QMat a, QVec b) {
  const std::size_t m = a.size();
  const std::size_t k = m ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    Rat p = a[row][col];
    for (std::size_t j = col; j < k; ++j) a[row][j] /= p;
    b[row] /= p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = col; j < k; ++j) a[r][j] -= f * a[row][j];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (b[r] != 0) return std::nullopt;
  QVec x = qvec_zero(k);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
  const std::size_t m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
  QMat c(m, qvec_zero(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline bool is_identity(const QMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != Rat(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace liecell
