#pragma once

#include "liecell/errors.hpp"
#include "liecell/lattice.hpp"
#include "liecell/lietype.hpp"
#include "liecell/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

namespace liecell {

// Exact combinatorial data of one simple root-system type. Everything is
// immutable after construction and safe to share across threads.
//
// Vertex numbering follows the Dynkin diagrams of [Hu, p.58]; squared root
// lengths are normalized per type so that the (gamma, beta, delta) length
// table for G2/F4/B_n/C_n comes out as (6,2,2), (2,1,1), (2,1,1), (4,2,2),
// with simply-laced types at squared length 2.
class RootSystem {
 public:
  LieType type;
  int n;
  std::vector<std::vector<int>> A;      // Cartan matrix
  QMat A_inv;                           // row i = omega_i over simple roots
  std::vector<int> dlen;                // squared length of alpha_i
  std::vector<IVec> pos_roots;          // coefficients over simple roots
  IVec beta;                            // highest short root (marks m_i)
  IVec gamma;                           // highest long root
  std::vector<std::vector<int>> A_ext;  // over {alpha_1..alpha_n, -beta}
  int affine_attach = 0;                // 1-based vertex adjacent to -beta
  std::vector<Int> center;              // invariant factors > 1 of Z(G)
  std::vector<int> minimal;             // Pi_G, sorted 1-based weight indices

  static const RootSystem& get(LieType t) {
    static std::map<LieType, std::unique_ptr<RootSystem>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end())
      it = cache.emplace(t, std::make_unique<RootSystem>(t)).first;
    return *it->second;
  }

  explicit RootSystem(LieType t) : type(t), n(t.rank) {
    build_cartan();
    build_roots();
    build_highest();
    build_extended();
    A_inv = q_inverse(int_to_qmat(A));
    ensure(is_identity(q_mul(int_to_qmat(A), A_inv)), "A * A_inv = I");
    build_center_and_classes();
    build_minimal_weights();
  }

  // 2(x, y) over the coefficient vectors; integral by the length convention
  long long inner2(const IVec& x, const IVec& y) const {
    long long s = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (y[j] != 0) s += static_cast<long long>(x[i]) * y[j] * A[i][j] * dlen[j];
    }
    return s;  // A_ij d_j = 2(alpha_i, alpha_j)
  }

  // Cartan integer 2(x, y)/(y, y) for y a root (or -beta)
  int cartan_int(const IVec& x, const IVec& y) const {
    long long nrm = inner2(y, y);
    long long v = 2 * inner2(x, y);
    assert(nrm != 0 && v % nrm == 0);
    return static_cast<int>(v / nrm);
  }

  // <x, alpha_i> = sum_j x_j A[j][i]
  int pairing_simple(const IVec& x, int i /*0-based*/) const {
    int s = 0;
    for (int j = 0; j < n; ++j) s += x[j] * A[j][i];
    return s;
  }

  Rat sq_len(const IVec& x) const { return Rat(inner2(x, x), 2); }

  bool is_short(const IVec& r) const { return inner2(r, r) == 2 * min_len_; }

  QVec weight_in_roots(int i /*1-based*/) const { return A_inv[i - 1]; }

  QVec weights_to_roots(const QVec& lambda) const {
    QVec c = qvec_zero(n);
    for (int i = 0; i < n; ++i) {
      if (lambda[i] == 0) continue;
      for (int j = 0; j < n; ++j) c[j] += lambda[i] * A_inv[i][j];
    }
    return c;
  }

  QVec roots_to_weights(const QVec& c) const {
    QVec lambda = qvec_zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c[j] != 0) lambda[i] += c[j] * Rat(A[j][i]);
    return lambda;
  }

  // lcm of the denominators of omega_i over the simple roots
  Int weight_deficiency(int i /*1-based*/) const {
    return denom_lcm(A_inv[i - 1]);
  }

  // ---- center classes (weight coordinates modulo the root lattice) ----

  ZVec class_of(const ZVec& x) const {
    ZVec r = x;
    for (int i = 0; i < n; ++i) {
      Int q = floor_div(r[i], rootlat_hnf_[i][i]);
      if (q != 0)
        for (int j = i; j < n; ++j) r[j] -= q * rootlat_hnf_[i][j];
    }
    return r;
  }

  ZVec class_of_weight(int i /*1-based*/) const {
    ZVec e(n, 0);
    e[i - 1] = 1;
    return class_of(e);
  }

  ZVec class_add(const ZVec& a, const ZVec& b) const {
    ZVec s(n);
    for (int i = 0; i < n; ++i) s[i] = a[i] + b[i];
    return class_of(s);
  }

  // canonical representative of a residue inside Pi ∪ {0}: 0 or weight index
  int rep_of_class(const ZVec& residue) const {
    auto it = class_reps_.find(residue);
    ensure(it != class_reps_.end(), "residue names a central class");
    return it->second;
  }

  Int center_order() const {
    Int o = 1;
    for (const Int& d : center) o *= d;
    return o;
  }

 private:
  long long min_len_ = 0;
  ZMat rootlat_hnf_;                // row HNF of A (upper triangular)
  std::map<ZVec, int> class_reps_;  // residue -> 0 or minimal weight index

  static QMat int_to_qmat(const std::vector<std::vector<int>>& m) {
    QMat q(m.size(), qvec_zero(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) q[i][j] = m[i][j];
    return q;
  }

  void link(int i, int j) {  // single edge, 1-based
    A[i - 1][j - 1] = A[j - 1][i - 1] = -1;
  }

  void build_cartan() {
    A.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    dlen.assign(n, 2);
    switch (type.family) {
      case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
      case Family::B:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        A[n - 2][n - 1] = -2;
        dlen.assign(n, 2);
        dlen[n - 1] = 1;
        break;
      case Family::C:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        A[n - 1][n - 2] = -2;
        dlen.assign(n, 2);
        dlen[n - 1] = 4;
        break;
      case Family::D:
        for (int i = 1; i <= n - 2; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
      case Family::E:
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < n; ++i) link(i, i + 1);
        break;
      case Family::F:
        link(1, 2);
        link(2, 3);
        link(3, 4);
        A[1][2] = -2;
        dlen = {2, 2, 1, 1};
        break;
      case Family::G:
        link(1, 2);
        A[1][0] = -3;
        dlen = {2, 6};
        break;
    }
    // Gram symmetry: A_ij d_j = A_ji d_i
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ensure(A[i][j] * dlen[j] == A[j][i] * dlen[i], "Gram symmetry");
  }

  void build_roots() {
    std::set<IVec> seen;
    std::vector<IVec> layer;
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      seen.insert(e);
      layer.push_back(e);
    }
    pos_roots.clear();
    while (!layer.empty()) {
      std::vector<IVec> next;
      for (const IVec& r : layer) {
        pos_roots.push_back(r);
        for (int i = 0; i < n; ++i) {
          bool is_simple_i = true;
          for (int j = 0; j < n; ++j)
            if (r[j] != (j == i ? 1 : 0)) {
              is_simple_i = false;
              break;
            }
          if (is_simple_i) continue;
          // root string through r in the alpha_i direction
          int p = 0;
          IVec down = r;
          for (;;) {
            down[i] -= 1;
            if (down[i] < 0 || !seen.count(down)) break;
            ++p;
          }
          int q = p - pairing_simple(r, i);
          if (q > 0) {
            IVec up = r;
            up[i] += 1;
            if (seen.insert(up).second) next.push_back(up);
          }
        }
      }
      layer = std::move(next);
    }
    std::sort(pos_roots.begin(), pos_roots.end());
  }

  void build_highest() {
    long long max_len = 0;
    min_len_ = 0;
    for (const IVec& r : pos_roots) {
      long long l = inner2(r, r);
      if (min_len_ == 0 || l < min_len_) min_len_ = l;
      max_len = std::max(max_len, l);
    }
    auto highest_of_len = [&](long long len2) {
      const IVec* best = nullptr;
      int best_h = -1;
      for (const IVec& r : pos_roots) {
        if (inner2(r, r) != len2) continue;
        int h = 0;
        for (int c : r) h += c;
        if (h > best_h) {
          best_h = h;
          best = &r;
        }
      }
      ensure(best != nullptr, "length class is nonempty");
      // the chosen root must dominate its whole length class
      for (const IVec& r : pos_roots) {
        if (inner2(r, r) != len2) continue;
        for (int i = 0; i < n; ++i)
          ensure((*best)[i] >= r[i], "highest root dominates its class");
      }
      return *best;
    };
    beta = highest_of_len(min_len_);
    gamma = highest_of_len(max_len);
    if (type.simply_laced()) ensure(beta == gamma, "beta = gamma when simply laced");
  }

  void build_extended() {
    std::vector<IVec> ext;
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      ext.push_back(e);
    }
    IVec neg_beta(n);
    for (int i = 0; i < n; ++i) neg_beta[i] = -beta[i];
    ext.push_back(neg_beta);
    A_ext.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) A_ext[i][j] = cartan_int(ext[i], ext[j]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ensure(A_ext[i][j] == A[i][j], "extended matrix restricts to A");
    for (int i = 1; i <= n; ++i)
      if (A_ext[n][i - 1] != 0) {
        affine_attach = i;
        break;
      }
    // left null vector (m_1..m_n, 1): sum_i v_i A_ext[i][j] = x_j*(0) = 0
    for (int j = 0; j <= n; ++j) {
      long long s = A_ext[n][j];
      for (int i = 0; i < n; ++i) s += static_cast<long long>(A_ext[i][j]) * beta[i];
      ensure(s == 0, "extended Cartan matrix null vector");
    }
  }

  void build_center_and_classes() {
    ZMat rows(n, ZVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = A[i][j];
    auto inv = quotient_invariants(rows, n);
    ensure(inv.has_value(), "Cartan matrix has full rank");
    center = *inv;
    // row HNF of A via column HNF of the transpose
    ZMat at(n, ZVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at[i][j] = A[j][i];
    HnfCols h = hnf_cols(at);
    ensure(h.pivot_row.size() == static_cast<std::size_t>(n), "root lattice has full rank");
    rootlat_hnf_.assign(n, ZVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rootlat_hnf_[i][j] = h.h[j][i];
    for (int i = 0; i < n; ++i) {
      ensure(rootlat_hnf_[i][i] > 0, "HNF pivot positive");
      for (int j = 0; j < i; ++j) ensure(rootlat_hnf_[i][j] == 0, "HNF upper triangular");
    }
  }

  void build_minimal_weights() {
    std::map<ZVec, std::vector<int>> by_class;
    for (int i = 1; i <= n; ++i) by_class[class_of_weight(i)].push_back(i);
    ZVec zero_class = class_of(ZVec(n, 0));
    minimal.clear();
    class_reps_.clear();
    class_reps_[zero_class] = 0;
    auto preceded_by = [&](int i, int j) {  // omega_j < omega_i in the order
      QVec diff = qvec_sub(weight_in_roots(i), weight_in_roots(j));
      if (!qvec_is_integral(diff)) return false;
      for (const Rat& c : diff)
        if (c < 0) return false;
      return true;
    };
    for (auto& [cls, members] : by_class) {
      if (cls == zero_class) continue;
      int best = 0;
      for (int i : members) {
        bool minimal_in_class = true;
        for (int j : members)
          if (j != i && preceded_by(i, j)) {
            minimal_in_class = false;
            break;
          }
        if (minimal_in_class) {
          ensure(best == 0, "minimal class representative is unique");
          best = i;
        }
      }
      ensure(best != 0, "every nonzero class has a minimal weight");
      minimal.push_back(best);
      class_reps_[cls] = best;
    }
    std::sort(minimal.begin(), minimal.end());
    // exp(Pi ∪ {0}) = Z(G): the classes exhaust the center
    ensure(Int(minimal.size()) + 1 == center_order(), "|Pi| + 1 = |Z(G)|");
  }
};

// closed-form positive root counts, used as an independent cross-check
inline std::size_t positive_root_count(LieType t) {
  int r = t.rank;
  switch (t.family) {
    case Family::A: return static_cast<std::size_t>(r) * (r + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(r) * r;
    case Family::D: return static_cast<std::size_t>(r) * (r - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
  }
  return 0;
}

}  // namespace liecell
