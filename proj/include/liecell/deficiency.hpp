#pragma once

#include "liecell/local_type.hpp"

#include <algorithm>
#include <vector>

namespace liecell {

// Element of the reduced weight system of a semisimple part: one entry per
// component, either 0 or a fundamental-weight index from that component's
// minimal-weight set (canonical component numbering).
struct WeightTuple {
  std::vector<int> entry;

  bool is_zero() const {
    return std::all_of(entry.begin(), entry.end(), [](int e) { return e == 0; });
  }
  auto operator<=>(const WeightTuple&) const = default;
};

// Least positive multiple carrying the weight into the unit lattice of the
// 1-connected group: the lcm of the denominators of omega_i over the simple
// roots. Only minimal weights (and zero) are legal arguments.
inline Int deficiency_simple(LieType t, int i) {
  if (i == 0) return 1;
  const RootSystem& rs = RootSystem::get(t);
  if (!std::binary_search(rs.minimal.begin(), rs.minimal.end(), i))
    throw not_minimal_weight("omega_" + std::to_string(i) +
                             " is not a minimal weight of " + t.str());
  return rs.weight_deficiency(i);
}

inline Int deficiency_tuple(const LocalType& lt, const WeightTuple& theta) {
  if (theta.entry.size() != lt.components.size())
    throw usage_error("weight tuple shaped for " +
                      std::to_string(theta.entry.size()) + " factors, local type has " +
                      std::to_string(lt.components.size()));
  Int l = 1;
  for (std::size_t c = 0; c < lt.components.size(); ++c)
    l = ilcm(l, deficiency_simple(lt.components[c].type, theta.entry[c]));
  return l;
}

// Full cartesian product over the components of (Pi ∪ {0}); its size is the
// order of the center of the covering group.
inline std::vector<WeightTuple> reduced_weight_system(const LocalType& lt) {
  std::vector<WeightTuple> out{WeightTuple{std::vector<int>{}}};
  for (const auto& comp : lt.components) {
    const RootSystem& rs = RootSystem::get(comp.type);
    std::vector<WeightTuple> next;
    for (const WeightTuple& partial : out) {
      WeightTuple w = partial;
      w.entry.push_back(0);
      next.push_back(w);
      for (int i : rs.minimal) {
        w.entry.back() = i;
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

// Group law on reduced-weight elements: add per component and re-identify the
// class representative inside Pi ∪ {0} by reduction modulo the root lattice.
inline WeightTuple tuple_add(const LocalType& lt, const WeightTuple& a,
                             const WeightTuple& b) {
  WeightTuple s;
  for (std::size_t c = 0; c < lt.components.size(); ++c) {
    const RootSystem& rs = RootSystem::get(lt.components[c].type);
    ZVec za(rs.n, 0), zb(rs.n, 0);
    if (a.entry[c] > 0) za[a.entry[c] - 1] = 1;
    if (b.entry[c] > 0) zb[b.entry[c] - 1] = 1;
    s.entry.push_back(rs.rep_of_class(rs.class_add(za, zb)));
  }
  return s;
}

// Least m with m * gamma inside the given radical unit lattice (rows of a
// basis); gamma is handed over in the ambient simple-root coordinates.
inline Int radical_deficiency(const QVec& gamma, const ZMat& rad_lattice) {
  bool zero = std::all_of(gamma.begin(), gamma.end(),
                          [](const Rat& q) { return q == 0; });
  if (zero) return 1;
  const std::size_t n = gamma.size();
  if (rad_lattice.empty()) throw error("gamma outside the radical subspace");
  QMat sys(n, qvec_zero(rad_lattice.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rad_lattice.size(); ++j)
      sys[i][j] = Rat(rad_lattice[j][i]);
  auto coeff = q_solve(sys, gamma);
  if (!coeff) throw error("gamma outside the radical subspace");
  return denom_lcm(*coeff);
}

// Order of exp(theta - gamma) in the covering group: lcm of the semisimple
// deficiency and the radical one.
inline Int order_in_kernel(const LocalType& lt, const WeightTuple& theta,
                           const QVec& gamma, const ZMat& rad_lattice) {
  return ilcm(deficiency_tuple(lt, theta), radical_deficiency(gamma, rad_lattice));
}

}  // namespace liecell
