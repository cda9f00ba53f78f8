#include "liecell/local_type.hpp"

#include "corpus.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace liecell;

namespace {

QVec unit_lambda(const RootSystem& rs, int i, Rat scale) {
  QVec v = qvec_zero(rs.n);
  v[i - 1] = scale;
  return v;
}

std::vector<std::string> factor_names(const LocalType& lt) {
  std::vector<std::string> out;
  for (const GroupId& g : lt.names) out.push_back(g.str());
  return out;
}

std::set<IVec> plus_minus(const std::vector<IVec>& roots, int n) {
  std::set<IVec> s;
  for (const IVec& r : roots) {
    s.insert(r);
    IVec m(n);
    for (int i = 0; i < n; ++i) m[i] = -r[i];
    s.insert(m);
  }
  return s;
}

}  // namespace

TEST_CASE("psi at zero is everything") {
  const RootSystem& rs = RootSystem::get(LieType::make(Family::D, 4));
  CellPoint zero = cell_membership(rs, qvec_zero(rs.n));
  CHECK(psi_u(rs, zero).size() == rs.pos_roots.size());
}

TEST_CASE("psi fixtures") {
  const RootSystem& e7 = RootSystem::get(LieType::make(Family::E, 7));
  CellPoint u = cell_membership(e7, unit_lambda(e7, 7, Rat(1, 2)));
  auto psi = psi_u(e7, u);
  CHECK(psi.size() == 36);  // the E6 subsystem
  for (const IVec& r : psi) CHECK(r[6] == 0);

  const RootSystem& f4 = RootSystem::get(LieType::make(Family::F, 4));
  CellPoint w = cell_membership(f4, unit_lambda(f4, 4, Rat(1, 2)));
  auto psiw = psi_u(f4, w);
  // rank-3 plus rank-1 piece: 9 + 1 positive roots
  CHECK(psiw.size() == 10);
  for (const IVec& r : psiw) {
    Rat v = coroot_value(f4, w.lambda, r);
    CHECK((v == 0 || v == 1));
  }
}

TEST_CASE("local type fixtures") {
  const RootSystem& e8 = RootSystem::get(LieType::make(Family::E, 8));
  LocalType lt = local_type(e8, cell_membership(e8, unit_lambda(e8, 5, Rat(1, 5))));
  CHECK(lt.branch == Branch::Wall);
  CHECK(lt.radical_rank == 0);
  CHECK(factor_names(lt) == std::vector<std::string>{"SU(5)", "SU(5)"});

  const RootSystem& g2 = RootSystem::get(LieType::make(Family::G, 2));
  LocalType su3 = local_type(g2, cell_membership(g2, unit_lambda(g2, 2, Rat(1, 3))));
  CHECK(su3.branch == Branch::Wall);
  CHECK(su3.radical_rank == 0);
  CHECK(factor_names(su3) == std::vector<std::string>{"SU(3)"});

  const RootSystem& f4 = RootSystem::get(LieType::make(Family::F, 4));
  LocalType spin7 = local_type(f4, cell_membership(f4, unit_lambda(f4, 1, Rat(1, 4))));
  CHECK(spin7.branch == Branch::Interior);
  CHECK(spin7.radical_rank == 1);
  CHECK(factor_names(spin7) == std::vector<std::string>{"Spin(7)"});

  LocalType sp3 = local_type(f4, cell_membership(f4, unit_lambda(f4, 4, Rat(1, 2))));
  CHECK(sp3.branch == Branch::Wall);
  CHECK(factor_names(sp3) == std::vector<std::string>{"Sp(3)", "SU(2)"});

  // central branch
  const RootSystem& a1 = RootSystem::get(LieType::make(Family::A, 1));
  LocalType whole = local_type(a1, cell_membership(a1, {Rat(1)}));
  CHECK(whole.branch == Branch::Central);
  CHECK(whole.radical_rank == 0);
  CHECK(factor_names(whole) == std::vector<std::string>{"SU(2)"});
}

TEST_CASE("distinguished cell points") {
  const RootSystem& g2 = RootSystem::get(LieType::make(Family::G, 2));
  auto fg = fg_set(g2);
  REQUIRE(fg.size() == 2);
  CHECK(fg[0].p == 2);
  CHECK(fg[1].p == 3);
  CHECK(fg[0].point.lambda == QVec{Rat(1, 2), Rat(0)});
  CHECK(fg[1].point.lambda == QVec{Rat(0), Rat(1, 3)});

  const RootSystem& e8 = RootSystem::get(LieType::make(Family::E, 8));
  std::vector<Int> dens;
  for (const auto& f : fg_set(e8)) dens.push_back(f.p);
  CHECK(dens == std::vector<Int>{2, 3, 4, 6, 5, 4, 3, 2});

  const RootSystem& e7 = RootSystem::get(LieType::make(Family::E, 7));
  CHECK(fg_set(e7)[6].p == 2);  // omega_7 / 2, the halved short case

  const RootSystem& f4 = RootSystem::get(LieType::make(Family::F, 4));
  std::vector<Int> fdens;
  for (const auto& f : fg_set(f4)) fdens.push_back(f.p);
  CHECK(fdens == std::vector<Int>{2, 4, 3, 2});
}

TEST_CASE("maximality criterion") {
  const RootSystem& e8 = RootSystem::get(LieType::make(Family::E, 8));
  auto fg = fg_set(e8);
  CHECK_FALSE(is_maximal(fg[3]));  // omega_4/6
  CHECK(is_maximal(fg[4]));        // omega_5/5
  const RootSystem& g2 = RootSystem::get(LieType::make(Family::G, 2));
  CHECK(is_maximal(fg_set(g2)[0]));
  CHECK(is_maximal(fg_set(g2)[1]));
}

TEST_CASE("base of a set of cell points") {
  const RootSystem& a3 = RootSystem::get(LieType::make(Family::A, 3));
  CHECK_THROWS_AS(base_of_set(a3, {}), empty_input);

  // singleton agrees with the local type base
  CellPoint u = cell_membership(a3, {Rat(1, 4), Rat(0), Rat(0)});
  CHECK(base_of_set(a3, {u}) == local_type(a3, u).base_vertices);

  // two interior points with disjoint supports: complement of the union
  CellPoint v = cell_membership(a3, {Rat(0), Rat(0), Rat(1, 3)});
  auto base = base_of_set(a3, {u, v});
  CHECK(base == std::vector<int>{2});
  // cross-check against the direct enumeration {alpha : alpha*(u)=alpha*(v)=0}
  std::set<IVec> expect;
  for (const IVec& r : a3.pos_roots)
    if (coroot_value(a3, u.lambda, r) == 0 && coroot_value(a3, v.lambda, r) == 0) {
      expect.insert(r);
      IVec m(a3.n);
      for (int i = 0; i < a3.n; ++i) m[i] = -r[i];
      expect.insert(m);
    }
  CHECK(generated_subsystem(a3, base) == expect);

  // two wall points with equal support keep the affine vertex
  const RootSystem& f4 = RootSystem::get(LieType::make(Family::F, 4));
  CellPoint w1 = cell_membership(f4, {Rat(0), Rat(1, 4), Rat(0), Rat(0)});
  CellPoint w2 = cell_membership(f4, {Rat(0), Rat(1, 8), Rat(0), Rat(0)});
  // w2 is interior (beta* = 1/2): rescale to the wall instead
  CHECK_FALSE(w2.wall);
  CellPoint w3 = cell_membership(f4, {Rat(0), Rat(1, 4), Rat(0), Rat(0)});
  auto wall_base = base_of_set(f4, {w1, w3});
  CHECK(wall_base == local_type(f4, w1).base_vertices);
  CHECK(std::count(wall_base.begin(), wall_base.end(), 0) == 1);

  // two walls of G2 with supports {1} and {2}: only -beta survives
  const RootSystem& g2 = RootSystem::get(LieType::make(Family::G, 2));
  CellPoint g_w1 = cell_membership(g2, {Rat(1, 2), Rat(0)});
  CellPoint g_w2 = cell_membership(g2, {Rat(0), Rat(1, 3)});
  REQUIRE(g_w1.wall);
  REQUIRE(g_w2.wall);
  auto g_base = base_of_set(g2, {g_w1, g_w2});
  CHECK(g_base == std::vector<int>{0});
  auto comps = classify_diagram(g2, g_base);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == LieType::make(Family::A, 1));

  // mixed wall + interior: the dichotomy drops -beta
  auto mixed = base_of_set(g2, {g_w1, cell_membership(g2, {Rat(0), Rat(1, 6)})});
  CHECK(mixed.empty());
}

TEST_CASE("rank accounting and the deletion rule on a corpus") {
  for (LieType t : testutil::corpus_types()) {
    const RootSystem& rs = RootSystem::get(t);
    testutil::CellSampler gen(rs, 555 + 7 * t.rank);
    for (int trial = 0; trial < 40; ++trial) {
      CellPoint u = gen.sample(trial % 2 == 0);
      LocalType lt = local_type(rs, u);
      REQUIRE(lt.semisimple_rank() + lt.radical_rank == rs.n);
      if (lt.branch == Branch::Interior) {
        REQUIRE(lt.radical_rank == static_cast<int>(u.support.size()));
      } else {
        REQUIRE(lt.branch == Branch::Wall);
        REQUIRE(lt.radical_rank == static_cast<int>(u.support.size()) - 1);
      }
    }
  }
}

TEST_CASE("local type generates exactly psi (oracle equivalence, sampled)") {
  for (LieType t : testutil::corpus_types()) {
    const RootSystem& rs = RootSystem::get(t);
    testutil::CellSampler gen(rs, 31337 + t.rank);
    for (int trial = 0; trial < 30; ++trial) {
      CellPoint u = gen.sample(trial % 2 == 0);
      LocalType lt = local_type(rs, u);
      REQUIRE(generated_subsystem(rs, lt.base_vertices) ==
              plus_minus(psi_u(rs, u), rs.n));
    }
  }
}

TEST_CASE("monotonicity of psi under support growth") {
  for (LieType t : {LieType::make(Family::E, 6), LieType::make(Family::B, 5),
                    LieType::make(Family::A, 7)}) {
    const RootSystem& rs = RootSystem::get(t);
    testutil::CellSampler gen(rs, 99);
    for (int trial = 0; trial < 25; ++trial) {
      CellPoint big = gen.sample(false);
      if (big.support.size() < 2) continue;
      // zero out part of the support: I_small subset of I_big, still interior
      QVec small_lambda = big.lambda;
      small_lambda[big.support[0] - 1] = 0;
      bool all_zero = std::all_of(small_lambda.begin(), small_lambda.end(),
                                  [](const Rat& q) { return q == 0; });
      if (all_zero) continue;
      CellPoint small = cell_membership(rs, small_lambda);
      auto psi_big = psi_u(rs, big);
      auto psi_small = psi_u(rs, small);
      std::set<IVec> small_set(psi_small.begin(), psi_small.end());
      for (const IVec& r : psi_big) REQUIRE(small_set.count(r) == 1);
    }
  }
}
