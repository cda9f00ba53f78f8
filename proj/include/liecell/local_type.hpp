#pragma once

#include "liecell/diagram.hpp"
#include "liecell/errors.hpp"
#include "liecell/weyl_cell.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace liecell {

enum class Branch { Interior, Wall, Central };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Interior: return "interior";
    case Branch::Wall: return "wall";
    case Branch::Central: return "central";
  }
  return "";
}

// The covering group G_1 x ... x G_k x T^r of the centralizer.
struct LocalType {
  Branch branch;
  std::vector<DiagramComponent> components;
  std::vector<GroupId> names;
  int radical_rank = 0;
  std::vector<int> base_vertices;  // retained vertices; 0 is the affine one

  int semisimple_rank() const {
    int s = 0;
    for (const auto& c : components) s += c.type.rank;
    return s;
  }
};

// Psi_u: positive roots with integral inverse-root value at u. Serves as the
// brute-force oracle for the diagram-deletion computation.
inline std::vector<IVec> psi_u(const RootSystem& rs, const CellPoint& u) {
  std::vector<IVec> out;
  for (const IVec& r : rs.pos_roots)
    if (den(coroot_value(rs, u.lambda, r)) == 1) out.push_back(r);
  return out;
}

inline LocalType local_type(const RootSystem& rs, const CellPoint& u) {
  LocalType lt;
  if (u.central) {
    lt.branch = Branch::Central;
    lt.radical_rank = 0;
    for (int i = 1; i <= rs.n; ++i) lt.base_vertices.push_back(i);
    lt.components = classify_diagram(rs, lt.base_vertices);
    for (const auto& c : lt.components) lt.names.push_back(group_of_type(c.type));
    return lt;
  }
  lt.branch = u.wall ? Branch::Wall : Branch::Interior;
  lt.base_vertices = u.cosupport;
  if (u.wall) lt.base_vertices.push_back(0);
  lt.radical_rank = static_cast<int>(u.support.size()) - (u.wall ? 1 : 0);
  lt.components = classify_diagram(rs, lt.base_vertices);
  for (const auto& c : lt.components) lt.names.push_back(group_of_type(c.type));
  return lt;
}

// Coefficient vector of the base vertex v: alpha_v, or -beta for v == 0.
inline IVec base_vertex_vector(const RootSystem& rs, int v) {
  IVec r(rs.n, 0);
  if (v == 0) {
    for (int i = 0; i < rs.n; ++i) r[i] = -rs.beta[i];
  } else {
    r[v - 1] = 1;
  }
  return r;
}

// Root subsystem generated by the given base: the orbit of the base under
// the reflections it defines.
inline std::set<IVec> generated_subsystem(const RootSystem& rs,
                                          const std::vector<int>& base) {
  std::set<IVec> sys;
  std::vector<IVec> gens;
  for (int v : base) {
    IVec r = base_vertex_vector(rs, v);
    gens.push_back(r);
    sys.insert(r);
    IVec m(rs.n);
    for (int i = 0; i < rs.n; ++i) m[i] = -r[i];
    sys.insert(m);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IVec> snapshot(sys.begin(), sys.end());
    for (const IVec& x : snapshot)
      for (const IVec& b : gens) {
        int c = rs.cartan_int(x, b);
        if (c == 0) continue;
        IVec y = x;
        for (int i = 0; i < rs.n; ++i) y[i] -= c * b[i];
        if (sys.insert(y).second) grew = true;
      }
  }
  return sys;
}

// The n distinguished points u_i = omega_i / p_i spanning all maximal-rank
// centralizer types (one per cell edge).
struct FgPoint {
  int index;  // i
  Int p;      // denominator
  CellPoint point;
};

inline std::vector<FgPoint> fg_set(const RootSystem& rs) {
  std::vector<FgPoint> out;
  for (int i = 1; i <= rs.n; ++i) {
    // beta*(omega_i) = m_i (alpha_i, alpha_i) / (beta, beta)
    Rat bv = Rat(rs.beta[i - 1]) * Rat(rs.dlen[i - 1]) / rs.sq_len(rs.beta);
    ensure(den(bv) == 1, "beta*(omega_i) is an integer");
    Int p = num(bv);
    bool alpha_short = (2 * Int(rs.dlen[i - 1]) == Int(rs.inner2(rs.beta, rs.beta)));
    if (alpha_short && rs.beta[i - 1] == 1) p *= 2;
    QVec lambda = qvec_zero(rs.n);
    lambda[i - 1] = Rat(1, p);
    out.push_back(FgPoint{i, p, cell_membership(rs, lambda)});
  }
  return out;
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool is_maximal(const FgPoint& u) { return is_prime(u.p); }

// Base of the root system of the centralizer of the subgroup generated by
// exp(u_1), ..., exp(u_k): intersect the cosupports, and keep -beta exactly
// when every point lies on the wall.
inline std::vector<int> base_of_set(const RootSystem& rs,
                                    const std::vector<CellPoint>& us) {
  if (us.empty()) throw empty_input("base_of_set: empty list of cell points");
  std::set<int> inter(us[0].cosupport.begin(), us[0].cosupport.end());
  bool all_wall = true;
  for (const CellPoint& u : us) {
    std::set<int> here(u.cosupport.begin(), u.cosupport.end());
    std::set<int> keep;
    for (int v : inter)
      if (here.count(v)) keep.insert(v);
    inter = std::move(keep);
    if (!u.wall) all_wall = false;
  }
  std::vector<int> base(inter.begin(), inter.end());
  if (all_wall) base.push_back(0);
  return base;
}

}  // namespace liecell
