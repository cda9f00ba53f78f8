#pragma once

#include "liecell/deficiency.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace liecell {

// Images under the tangent map of the inclusion of the centralizer, all in
// the ambient simple-root coordinates (where the root lattice is Z^n).
struct EmbeddingData {
  std::vector<QMat> weight_images;  // [component][weight index - 1] -> vector
  QMat radical_span;                // rows spanning h(L^e_Rad ⊗ Q)
  ZMat radical_unit_lattice;        // rows: basis of Z^n ∩ radical span

  const QVec& image(std::size_t comp, int weight_index) const {
    return weight_images[comp][weight_index - 1];
  }
};

inline QVec tuple_image(const EmbeddingData& emb, const WeightTuple& theta,
                        std::size_t n) {
  QVec x = qvec_zero(n);
  for (std::size_t c = 0; c < theta.entry.size(); ++c)
    if (theta.entry[c] > 0) x = qvec_add(x, emb.image(c, theta.entry[c]));
  return x;
}

inline EmbeddingData embedding(const RootSystem& rs, const CellPoint& u,
                               const LocalType& lt) {
  if (lt.branch == Branch::Central)
    throw error("central element: the centralizer is the whole group");
  EmbeddingData emb;
  for (const DiagramComponent& comp : lt.components) {
    const QMat& inv = RootSystem::get(comp.type).A_inv;
    const int k = comp.type.rank;
    QMat images(k, qvec_zero(rs.n));
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        if (inv[p][q] == 0) continue;
        IVec root = base_vertex_vector(rs, comp.vertices[q]);
        for (int j = 0; j < rs.n; ++j)
          if (root[j] != 0) images[p][j] += inv[p][q] * Rat(root[j]);
      }
    emb.weight_images.push_back(std::move(images));
  }
  const auto& iu = u.support;
  if (lt.branch == Branch::Interior) {
    for (int k : iu) emb.radical_span.push_back(rs.weight_in_roots(k));
  } else {
    // wall: vectors sum a_i omega_{k_i} with sum a_i beta*(omega_{k_i}) = 0
    auto bval = [&](int k) {
      return Rat(rs.beta[k - 1]) * Rat(rs.dlen[k - 1]) / rs.sq_len(rs.beta);
    };
    for (std::size_t i = 1; i < iu.size(); ++i) {
      QVec v = qvec_sub(qvec_scale(bval(iu[0]), rs.weight_in_roots(iu[i])),
                        qvec_scale(bval(iu[i]), rs.weight_in_roots(iu[0])));
      emb.radical_span.push_back(std::move(v));
    }
  }
  emb.radical_unit_lattice = lattice_in_subspace(emb.radical_span, rs.n);
  ensure(emb.radical_unit_lattice.size() == static_cast<std::size_t>(lt.radical_rank),
         "radical lattice rank matches the radical torus rank");
  return emb;
}

struct KernelElement {
  WeightTuple theta;
  QVec gamma;  // witness in the radical span, ambient root coordinates
  Int order;
};

// H_u: reduced-weight elements with semisimple deficiency > 1 whose image
// lands in the radical span modulo the root lattice, each with a canonical
// witness gamma.
inline std::vector<KernelElement> compute_Hu(const RootSystem& rs,
                                             const LocalType& lt,
                                             const EmbeddingData& emb) {
  std::vector<KernelElement> hu;
  for (const WeightTuple& theta : reduced_weight_system(lt)) {
    Int ds = deficiency_tuple(lt, theta);
    if (ds <= 1) continue;
    QVec x = tuple_image(emb, theta, rs.n);
    auto gamma = witness_mod_lattice(x, emb.radical_unit_lattice);
    if (!gamma) continue;
    Int order = ilcm(ds, radical_deficiency(*gamma, emb.radical_unit_lattice));
    hu.push_back(KernelElement{theta, *gamma, order});
  }
  return hu;
}

struct KernelDescription {
  Int order = 1;
  std::vector<Int> invariant_factors;   // d_1 | d_2 | ... (all > 1)
  std::vector<KernelElement> generators;  // largest order first
  std::vector<KernelElement> elements;    // the nontrivial elements (H_u)
};

inline KernelDescription kernel_from_Hu(const LocalType& lt,
                                        const std::vector<KernelElement>& hu) {
  KernelDescription k;
  k.elements = hu;
  std::sort(k.elements.begin(), k.elements.end(),
            [](const KernelElement& a, const KernelElement& b) {
              return a.theta < b.theta;
            });
  k.order = Int(hu.size()) + 1;

  // closure of the nontrivial elements plus identity under the reduced
  // group law must reproduce exactly H_u ∪ {0}
  std::set<WeightTuple> members;
  WeightTuple zero;
  zero.entry.assign(lt.components.size(), 0);
  members.insert(zero);
  for (const auto& e : k.elements) members.insert(e.theta);
  if (members.size() != static_cast<std::size_t>(hu.size()) + 1)
    throw closure_mismatch("duplicate reduced-weight elements in H_u");
  for (const auto& a : members)
    for (const auto& b : members)
      if (!members.count(tuple_add(lt, a, b)))
        throw closure_mismatch("H_u ∪ {0} is not closed under the group law");

  if (hu.empty()) return k;

  // abelian structure via lattices: lift tuples to weight coordinates over
  // all components, modulo the product of the component root lattices
  std::size_t big_n = 0;
  for (const auto& c : lt.components) big_n += c.type.rank;
  auto lift = [&](const WeightTuple& t) {
    ZVec v(big_n, 0);
    std::size_t off = 0;
    for (std::size_t c = 0; c < lt.components.size(); ++c) {
      if (t.entry[c] > 0) v[off + t.entry[c] - 1] = 1;
      off += lt.components[c].type.rank;
    }
    return v;
  };
  ZMat gens;
  for (const auto& e : k.elements) gens.push_back(lift(e.theta));
  ZMat relations;
  std::size_t off = 0;
  for (const auto& c : lt.components) {
    const auto& a = RootSystem::get(c.type).A;
    for (int i = 0; i < c.type.rank; ++i) {
      ZVec row(big_n, 0);
      for (int j = 0; j < c.type.rank; ++j) row[off + j] = a[i][j];
      relations.push_back(std::move(row));
    }
    off += c.type.rank;
  }
  k.invariant_factors = lattice_quotient_invariants(gens, relations, big_n);
  Int order_check = 1;
  for (const Int& d : k.invariant_factors) order_check *= d;
  if (order_check != k.order)
    throw closure_mismatch("invariant factors disagree with |H_u| + 1");

  // deterministic generating set with orders matching the invariant factors
  std::vector<const KernelElement*> pool;
  for (const auto& e : k.elements) pool.push_back(&e);
  std::sort(pool.begin(), pool.end(), [](auto* a, auto* b) {
    if (a->order != b->order) return a->order > b->order;
    return a->theta < b->theta;
  });
  std::vector<Int> want(k.invariant_factors.rbegin(), k.invariant_factors.rend());
  std::vector<const KernelElement*> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t slot) -> bool {
    if (slot == want.size()) {
      std::set<WeightTuple> span{zero};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<WeightTuple> snap(span.begin(), span.end());
        for (const auto& s : snap)
          for (auto* g : chosen) {
            WeightTuple t = tuple_add(lt, s, g->theta);
            if (span.insert(t).second) grew = true;
          }
      }
      return span.size() == members.size();
    }
    for (auto* cand : pool) {
      if (cand->order != want[slot]) continue;
      if (std::find(chosen.begin(), chosen.end(), cand) != chosen.end()) continue;
      chosen.push_back(cand);
      if (pick(slot + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  bool found = pick(0);
  if (!found) throw closure_mismatch("no generating set matches the invariant factors");
  for (auto* g : chosen) k.generators.push_back(*g);
  return k;
}

// Independent check: ker pi is the quotient of the root lattice of G by the
// span of the retained base roots plus the radical unit lattice.
inline std::vector<Int> kernel_oracle_snf(const RootSystem& rs,
                                          const LocalType& lt,
                                          const EmbeddingData& emb) {
  ZMat rows;
  for (int v : lt.base_vertices) {
    IVec r = base_vertex_vector(rs, v);
    ZVec z(rs.n);
    for (int i = 0; i < rs.n; ++i) z[i] = r[i];
    rows.push_back(std::move(z));
  }
  for (const ZVec& r : emb.radical_unit_lattice) rows.push_back(r);
  auto inv = quotient_invariants(rows, rs.n);
  if (!inv) throw rank_deficient("sublattice of the root lattice is not of full rank");
  return *inv;
}

struct CentralizerResult {
  CellPoint u;
  LocalType local;
  std::optional<EmbeddingData> emb;  // absent on the central branch
  KernelDescription kernel;
};

inline CentralizerResult full_centralizer(const RootSystem& rs, const QVec& lambda) {
  CentralizerResult res;
  res.u = cell_membership(rs, lambda);
  res.local = local_type(rs, res.u);
  if (res.local.branch == Branch::Central) return res;
  res.emb = embedding(rs, res.u, res.local);
  auto hu = compute_Hu(rs, res.local, *res.emb);
  res.kernel = kernel_from_Hu(res.local, hu);
  auto oracle = kernel_oracle_snf(rs, res.local, *res.emb);
  if (oracle != res.kernel.invariant_factors) {
    std::ostringstream os;
    os << "kernel structure disagreement: enumerated [";
    for (const Int& d : res.kernel.invariant_factors) os << d << " ";
    os << "] vs lattice quotient [";
    for (const Int& d : oracle) os << d << " ";
    os << "]";
    throw cross_check_failure(os.str());
  }
  return res;
}

// Congruence test for an externally supplied kernel element: theta given by
// per-component fundamental-weight indices (not necessarily minimal
// representatives), gamma optionally pinned. Returns the element order if it
// belongs to ker pi.
inline std::optional<Int> verify_kernel_element(
    const RootSystem& rs, const LocalType& lt, const EmbeddingData& emb,
    const std::vector<int>& weight_indices, const std::optional<QVec>& gamma_roots) {
  WeightTuple theta;
  for (std::size_t c = 0; c < lt.components.size(); ++c) {
    const RootSystem& comp = RootSystem::get(lt.components[c].type);
    int idx = weight_indices[c];
    if (idx == 0) {
      theta.entry.push_back(0);
      continue;
    }
    if (idx < 1 || idx > comp.n) return std::nullopt;
    ZVec e(comp.n, 0);
    e[idx - 1] = 1;
    theta.entry.push_back(comp.rep_of_class(comp.class_of(e)));
  }
  if (theta.is_zero()) return std::nullopt;
  Int ds = deficiency_tuple(lt, theta);
  if (ds <= 1) return std::nullopt;
  QVec x = tuple_image(emb, theta, rs.n);
  if (gamma_roots) {
    QVec diff = qvec_sub(x, *gamma_roots);
    if (!qvec_is_integral(diff)) return std::nullopt;
    Int rad;
    try {
      rad = radical_deficiency(*gamma_roots, emb.radical_unit_lattice);
    } catch (const error&) {
      return std::nullopt;  // gamma outside the radical span
    }
    return ilcm(ds, rad);
  }
  auto gamma = witness_mod_lattice(x, emb.radical_unit_lattice);
  if (!gamma) return std::nullopt;
  return ilcm(ds, radical_deficiency(*gamma, emb.radical_unit_lattice));
}

}  // namespace liecell
