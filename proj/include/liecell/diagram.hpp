#pragma once

#include "liecell/errors.hpp"
#include "liecell/lietype.hpp"
#include "liecell/root_system.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace liecell {

// One connected piece of a (possibly extended) diagram. `vertices` lists the
// ambient vertex ids in an admissible order: the induced Cartan submatrix in
// this order equals the canonical Cartan matrix of `type`. Vertex 0 denotes
// the affine vertex (-beta).
struct DiagramComponent {
  LieType type;
  std::vector<int> vertices;
};

namespace detail {

inline std::vector<LieType> rank_candidates(int k) {
  std::vector<LieType> out;
  if (k >= 1) out.push_back(LieType{Family::A, k});
  if (k >= 2) out.push_back(LieType{Family::B, k});
  if (k >= 3) out.push_back(LieType{Family::C, k});
  if (k >= 4) out.push_back(LieType{Family::D, k});
  if (k >= 6 && k <= 8) out.push_back(LieType{Family::E, k});
  if (k == 4) out.push_back(LieType{Family::F, 4});
  if (k == 2) out.push_back(LieType{Family::G, 2});
  return out;
}

}  // namespace detail

// Classifies the principal submatrix of the (extended) Cartan matrix over the
// given ambient vertices. Components come back sorted by their smallest
// sort key, where the affine vertex sorts at the attachment point of -beta.
// Vertex order inside a component is the lexicographically smallest
// admissible one under the same keys.
inline std::vector<DiagramComponent> classify_diagram(
    const RootSystem& rs, const std::vector<int>& vertices) {
  const int n = rs.n;
  auto entry = [&](int v, int w) -> int {
    int i = (v == 0) ? n : v - 1;
    int j = (w == 0) ? n : w - 1;
    return rs.A_ext[i][j];
  };
  auto key = [&](int v) -> int { return v == 0 ? rs.affine_attach : v; };

  for (int v : vertices)
    if (v < 0 || v > n) throw unclassifiable_diagram("vertex out of range");

  // connected components
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<bool> used(verts.size(), false);
  std::vector<std::vector<int>> comps;
  for (std::size_t s = 0; s < verts.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{verts[s]};
    used[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (!used[j] && entry(comp[h], verts[j]) != 0) {
          used[j] = true;
          comp.push_back(verts[j]);
        }
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
    int ka = key(a[0]), kb = key(b[0]);
    for (int v : a) ka = std::min(ka, key(v));
    for (int v : b) kb = std::min(kb, key(v));
    return ka < kb;
  });

  std::vector<DiagramComponent> out;
  for (auto& comp : comps) {
    const int k = static_cast<int>(comp.size());
    // candidates ordered by key for the lex-smallest admissible ordering
    std::sort(comp.begin(), comp.end(), [&](int a, int b) {
      if (key(a) != key(b)) return key(a) < key(b);
      return (a == 0 ? n + 1 : a) < (b == 0 ? n + 1 : b);
    });
    bool done = false;
    for (LieType t : detail::rank_candidates(k)) {
      const auto& canon = RootSystem::get(t).A;
      std::vector<int> order;
      std::vector<bool> taken(comp.size(), false);
      std::function<bool()> dfs = [&]() -> bool {
        if (static_cast<int>(order.size()) == k) return true;
        int p = static_cast<int>(order.size());
        for (std::size_t c = 0; c < comp.size(); ++c) {
          if (taken[c]) continue;
          bool ok = true;
          for (int q = 0; q < p; ++q) {
            if (canon[p][q] != entry(comp[c], order[q]) ||
                canon[q][p] != entry(order[q], comp[c])) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          taken[c] = true;
          order.push_back(comp[c]);
          if (dfs()) return true;
          order.pop_back();
          taken[c] = false;
        }
        return false;
      };
      if (dfs()) {
        out.push_back(DiagramComponent{t, order});
        done = true;
        break;
      }
    }
    if (!done) {
      std::string what = "no finite type matches component {";
      for (int v : comp) what += std::to_string(v) + ",";
      what += "}";
      throw unclassifiable_diagram(what);
    }
  }
  return out;
}

}  // namespace liecell
