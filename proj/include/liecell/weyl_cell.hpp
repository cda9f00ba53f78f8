#pragma once

#include "liecell/errors.hpp"
#include "liecell/numeric.hpp"
#include "liecell/root_system.hpp"

#include <algorithm>
#include <vector>

namespace liecell {

// alpha*(u) = 2(u, alpha)/(alpha, alpha) for u given over fundamental
// weights: sum_i lambda_i k_i (alpha_i, alpha_i) / (alpha, alpha).
inline Rat coroot_value(const RootSystem& rs, const QVec& lambda, const IVec& root) {
  bool zero = std::all_of(root.begin(), root.end(), [](int c) { return c == 0; });
  if (zero) throw zero_root();
  Rat acc(0);
  for (int i = 0; i < rs.n; ++i) {
    if (root[i] == 0 || lambda[i] == 0) continue;
    acc += lambda[i] * Rat(root[i]) * Rat(rs.dlen[i]);
  }
  return acc / rs.sq_len(root);
}

// A rational point of the fundamental Weyl cell, in fundamental-weight
// coordinates, together with its support and beta*(u).
struct CellPoint {
  LieType type;
  QVec lambda;
  std::vector<int> support;     // I_u, 1-based, sorted
  std::vector<int> cosupport;   // complement of I_u
  Rat beta_value;               // beta*(u)
  bool wall = false;            // beta*(u) == 1
  bool central = false;         // alpha*(u) integral for every positive root
};

inline CellPoint cell_membership(const RootSystem& rs, const QVec& lambda) {
  if (static_cast<int>(lambda.size()) != rs.n)
    throw not_in_cell("lambda has length " + std::to_string(lambda.size()) +
                      ", expected " + std::to_string(rs.n));
  CellPoint p;
  p.type = rs.type;
  p.lambda = lambda;
  for (int i = 0; i < rs.n; ++i) {
    if (lambda[i] < 0)
      throw not_in_cell("lambda[" + std::to_string(i + 1) +
                        "] = " + rat_str(lambda[i]) + " < 0");
    (lambda[i] > 0 ? p.support : p.cosupport).push_back(i + 1);
  }
  p.beta_value = coroot_value(rs, lambda, rs.beta);
  if (p.beta_value > 1)
    throw not_in_cell("beta*(u) = " + rat_str(p.beta_value) + " > 1");
  p.wall = (p.beta_value == 1);
  p.central = true;
  for (const IVec& r : rs.pos_roots)
    if (den(coroot_value(rs, lambda, r)) != 1) {
      p.central = false;
      break;
    }
  return p;
}

inline QVec convert_to_root_basis(const RootSystem& rs, const QVec& lambda) {
  return rs.weights_to_roots(lambda);
}

inline QVec convert_to_weight_basis(const RootSystem& rs, const QVec& roots) {
  return rs.roots_to_weights(roots);
}

}  // namespace liecell
