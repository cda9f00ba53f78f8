// Acceptance suite: catalog reproduction for the exceptional groups, the
// deficiency table, and the exact property checks behind them. One printed
// pass/fail line per criterion.

#include "liecell/liecell.hpp"

#include "corpus.hpp"
#include "fixtures_tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace liecell;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void verdict(int criterion, const std::string& name, bool ok, double secs) {
  std::ostringstream os;
  os << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << name
     << "  (" << static_cast<int>(secs * 1000) / 1000.0 << " s)";
  std::cout << os.str() << std::endl;
}

// fundamental-weight relabelings induced by diagram automorphisms
std::vector<int> weight_variants(LieType t, int w) {
  std::vector<int> out{w};
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n + 1 - w != w) out.push_back(n + 1 - w);
      break;
    case Family::D:
      if (n == 4) {
        if (w == 1 || w == 3 || w == 4) out = {1, 3, 4};
      } else if (w == n - 1 || w == n) {
        out = {n - 1, n};
      }
      break;
    case Family::E:
      if (n == 6) {
        if (w == 1 || w == 6) out = {1, 6};
        if (w == 3 || w == 5) out = {3, 5};
      }
      break;
    default:
      break;
  }
  return out;
}

// check a printed generator against the computed kernel: try all
// type-preserving factor matchings and automorphism relabelings; the element
// must pass the congruence test with the stated order
bool printed_generator_ok(const RootSystem& rs, const CentralizerResult& res,
                          const fixtures::CatalogRow& row,
                          const fixtures::PrintedGenerator& gen) {
  const auto& comps = res.local.components;
  std::vector<int> perm(row.factors.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::optional<QVec> gamma;
  if (!gen.radical.terms.empty()) {
    QVec r = qvec_zero(rs.n);
    for (const auto& [i, c] : gen.radical.terms) r[i - 1] = c;
    gamma = rs.weights_to_roots(qvec_scale(Rat(-1), r));  // printed value is -gamma
  }
  std::sort(perm.begin(), perm.end());
  do {
    if (perm.size() != comps.size()) return false;
    bool types_ok = true;
    for (std::size_t printed = 0; printed < perm.size(); ++printed)
      if (group_of_type(comps[perm[printed]].type).str() != row.factors[printed])
        types_ok = false;
    if (!types_ok) continue;
    // enumerate automorphism relabelings factor by factor
    std::vector<std::vector<int>> options;
    for (std::size_t printed = 0; printed < perm.size(); ++printed) {
      int w = gen.weights[printed];
      options.push_back(w == 0 ? std::vector<int>{0}
                               : weight_variants(comps[perm[printed]].type, w));
    }
    std::vector<std::size_t> cursor(options.size(), 0);
    for (;;) {
      std::vector<int> indices(comps.size(), 0);
      for (std::size_t printed = 0; printed < perm.size(); ++printed)
        indices[perm[printed]] = options[printed][cursor[printed]];
      auto order = verify_kernel_element(rs, res.local, *res.emb, indices, gamma);
      if (order && *order == Int(row.kernel_order)) return true;
      std::size_t k = 0;
      while (k < cursor.size() && ++cursor[k] == options[k].size()) cursor[k++] = 0;
      if (k == cursor.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool catalog_row_matches(const RootSystem& rs, const CentralizerResult& res,
                         const fixtures::CatalogRow& row, std::string& why) {
  std::multiset<std::string> want(row.factors.begin(), row.factors.end());
  std::multiset<std::string> got;
  for (const GroupId& g : res.local.names) got.insert(g.str());
  if (want != got) {
    why = "factor multiset mismatch";
    return false;
  }
  if (res.local.radical_rank != row.radical_rank) {
    why = "radical rank mismatch";
    return false;
  }
  if (res.kernel.order != Int(row.kernel_order)) {
    why = "kernel order mismatch";
    return false;
  }
  std::vector<Int> expect_factors;
  if (row.kernel_order > 1) expect_factors.push_back(Int(row.kernel_order));
  if (res.kernel.invariant_factors != expect_factors) {
    why = "invariant factors mismatch";
    return false;
  }
  for (const auto& gen : row.generators)
    if (!printed_generator_ok(rs, res, row, gen)) {
      why = "printed generator fails the congruence test";
      return false;
    }
  return true;
}

}  // namespace

TEST_CASE("catalog of maximal-rank centralizers (exceptional groups)") {
  Timer timer;
  bool ok = true;
  int rows = 0;
  for (const auto& row : fixtures::maximal_rows()) {
    const RootSystem& rs = RootSystem::get(LieType::parse(row.type));
    QVec lambda = qvec_zero(rs.n);
    lambda[row.index - 1] = Rat(1, row.den);
    // the catalog point must coincide with the distinguished point
    auto fg = fg_set(rs);
    if (fg[row.index - 1].point.lambda != lambda) {
      ok = false;
      UNSCOPED_INFO(row.type << " omega_" << row.index << ": wrong denominator");
      continue;
    }
    CentralizerResult res = full_centralizer(rs, lambda);
    std::string why;
    if (!catalog_row_matches(rs, res, row, why)) {
      ok = false;
      UNSCOPED_INFO(row.type << " omega_" << row.index << "/" << row.den << ": " << why);
    }
    ++rows;
  }
  verdict(1, "maximal-rank catalog, " + std::to_string(rows) + " rows exact", ok,
          timer.secs());
  REQUIRE(ok);
}

TEST_CASE("catalog of singleton parabolics (exceptional groups)") {
  Timer timer;
  bool ok = true;
  int rows = 0;
  for (const auto& row : fixtures::parabolic_rows()) {
    const RootSystem& rs = RootSystem::get(LieType::parse(row.type));
    auto fg = fg_set(rs);
    QVec lambda = qvec_zero(rs.n);
    lambda[row.index - 1] = Rat(1, 2 * fg[row.index - 1].p);
    CentralizerResult res = full_centralizer(rs, lambda);
    std::string why;
    if (res.local.branch != Branch::Interior) {
      ok = false;
      UNSCOPED_INFO(row.type << " {" << row.index << "}: not interior");
    } else if (!catalog_row_matches(rs, res, row, why)) {
      ok = false;
      UNSCOPED_INFO(row.type << " {" << row.index << "}: " << why);
    }
    ++rows;
  }
  verdict(2, "singleton-parabolic catalog, " + std::to_string(rows) + " rows exact",
          ok, timer.secs());
  REQUIRE(ok);
}

TEST_CASE("deficiency values of the simple groups") {
  Timer timer;
  bool ok = true;
  auto expect = [&](LieType t, int i, long d) {
    if (deficiency_simple(t, i) != d) {
      ok = false;
      UNSCOPED_INFO(t.str() << " omega_" << i);
    }
  };
  for (int n = 1; n <= 11; ++n)
    for (int k = 1; k <= n; ++k) {
      Int g = igcd(Int(n + 1), Int(k));
      expect(LieType::make(Family::A, n), k,
             static_cast<long>(Int(Int(n + 1) / g)));
    }
  for (int n = 2; n <= 8; ++n) expect(LieType::make(Family::B, n), n, 2);
  for (int n = 3; n <= 8; ++n) expect(LieType::make(Family::C, n), 1, 2);
  for (int n = 4; n <= 8; ++n) {
    expect(LieType::make(Family::D, n), 1, 2);
    expect(LieType::make(Family::D, n), n - 1, n % 2 == 0 ? 2 : 4);
    expect(LieType::make(Family::D, n), n, n % 2 == 0 ? 2 : 4);
  }
  expect(LieType::make(Family::E, 6), 1, 3);
  expect(LieType::make(Family::E, 6), 6, 3);
  expect(LieType::make(Family::E, 7), 7, 2);
  for (Family f : {Family::G, Family::F, Family::E}) {
    LieType t = f == Family::G ? LieType::make(Family::G, 2)
                               : (f == Family::F ? LieType::make(Family::F, 4)
                                                 : LieType::make(Family::E, 8));
    if (!RootSystem::get(t).minimal.empty()) ok = false;
    expect(t, 0, 1);
  }
  verdict(3, "deficiency table reproduced exactly", ok, timer.secs());
  REQUIRE(ok);
}

namespace {

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

TEST_CASE("diagram deletion generates exactly the integral-value subsystem") {
  Timer timer;
  bool ok = true;
  long checked = 0;
  for (LieType t : testutil::corpus_types()) {
    const RootSystem& rs = RootSystem::get(t);
    testutil::CellSampler gen(rs, 1000003 + 17 * t.rank +
                                      static_cast<int>(t.family));
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      CellPoint u = gen.sample(trial % 2 == 0);
      LocalType lt = local_type(rs, u);
      if (generated_subsystem(rs, lt.base_vertices) != plus_minus(psi_u(rs, u), rs.n)) {
        ok = false;
        UNSCOPED_INFO(t.str() << " " << lambda_str(u.lambda));
      }
      ++checked;
    }
  }
  verdict(4, "local-type oracle equivalence on " + std::to_string(checked) +
                 " random cell points",
          ok, timer.secs());
  REQUIRE(ok);
}

TEST_CASE("kernel double computation agrees everywhere") {
  Timer timer;
  bool ok = true;
  long checked = 0;
  for (LieType t : testutil::corpus_types()) {
    const RootSystem& rs = RootSystem::get(t);
    testutil::CellSampler gen(rs, 1000003 + 17 * t.rank +
                                      static_cast<int>(t.family));
    for (int trial = 0; trial < 200 && ok; ++trial) {
      CellPoint u = gen.sample(trial % 2 == 0);
      try {
        CentralizerResult res = full_centralizer(rs, u.lambda);
        auto oracle = kernel_oracle_snf(rs, res.local, *res.emb);
        if (oracle != res.kernel.invariant_factors) ok = false;
        if (res.kernel.order != Int(res.kernel.elements.size()) + 1) ok = false;
      } catch (const error& e) {
        ok = false;
        UNSCOPED_INFO(t.str() << " " << lambda_str(u.lambda) << ": " << e.what());
      }
      ++checked;
    }
  }
  verdict(5, "kernel enumeration = lattice quotient on " + std::to_string(checked) +
                 " random cell points",
          ok, timer.secs());
  REQUIRE(ok);
}

TEST_CASE("cell inequalities") {
  Timer timer;
  bool ok = true;
  long checked = 0;
  for (LieType t : testutil::corpus_types()) {
    const RootSystem& rs = RootSystem::get(t);
    testutil::CellSampler gen(rs, 2000003 + 23 * t.rank +
                                      static_cast<int>(t.family));
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      CellPoint u = gen.sample(trial % 2 == 0);
      for (const IVec& r : rs.pos_roots) {
        Rat v = coroot_value(rs, u.lambda, r);
        if (v < 0 || v > 1) ok = false;
        if (v == 0)
          for (int i : u.support)
            if (r[i - 1] != 0) ok = false;
        if (v == 1 && u.beta_value != 1) ok = false;
      }
      ++checked;
    }
  }
  verdict(6, "0 <= alpha*(u) <= 1 with support/wall side conditions on " +
                 std::to_string(checked) + " points",
          ok, timer.secs());
  REQUIRE(ok);
}

TEST_CASE("structural identities") {
  Timer timer;
  bool ok = true;
  for (LieType t : testutil::corpus_types()) {
    const RootSystem& rs = RootSystem::get(t);
    if (rs.pos_roots.size() != positive_root_count(t)) ok = false;
    QMat a(rs.n, qvec_zero(rs.n));
    for (int i = 0; i < rs.n; ++i)
      for (int j = 0; j < rs.n; ++j) a[i][j] = Rat(rs.A[i][j]);
    if (!is_identity(q_mul(a, rs.A_inv))) ok = false;
    ZMat rows(rs.n, ZVec(rs.n));
    for (int i = 0; i < rs.n; ++i)
      for (int j = 0; j < rs.n; ++j) rows[i][j] = rs.A[i][j];
    auto inv = quotient_invariants(rows, rs.n);
    Int det_order = 1;
    if (inv)
      for (const Int& d : *inv) det_order *= d;
    if (!inv || det_order != rs.center_order()) ok = false;
    // |Pi0| = product of the centers over the semisimple factors
    testutil::CellSampler gen(rs, 3000017 + t.rank);
    for (int trial = 0; trial < 25; ++trial) {
      LocalType lt = local_type(rs, gen.sample(trial % 2 == 0));
      Int expect = 1;
      for (const auto& c : lt.components)
        expect *= RootSystem::get(c.type).center_order();
      if (Int(reduced_weight_system(lt).size()) != expect) ok = false;
    }
  }
  verdict(7, "det(A) = |Z|, root counts, exact inverses, |Pi0| products", ok,
          timer.secs());
  REQUIRE(ok);
}

TEST_CASE("embedding congruence audit") {
  Timer timer;
  bool ok = true;
  std::ifstream f(std::string(LIECELL_TEST_DATA_DIR) + "/hstar_displays.txt");
  REQUIRE(f.good());
  std::string line;
  const RootSystem* rs = nullptr;
  std::optional<EmbeddingData> emb;
  int audited = 0, cases = 0;
  auto parse_vec = [](const std::string& csv) {
    QVec v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(rat_parse(tok));
    return v;
  };
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "case") {
      std::string type;
      int i;
      long den;
      ss >> type >> i >> den;
      rs = &RootSystem::get(LieType::parse(type));
      QVec lambda = qvec_zero(rs->n);
      lambda[i - 1] = Rat(1, den);
      CellPoint u = cell_membership(*rs, lambda);
      emb = embedding(*rs, u, local_type(*rs, u));
      ++cases;
      continue;
    }
    REQUIRE(rs != nullptr);
    std::string csv, congkw, congcsv;
    ss >> csv;
    QVec target;
    std::optional<QVec> cong;
    if (kind == "img") {
      target = parse_vec(csv);
      if (ss >> congkw >> congcsv) cong = parse_vec(congcsv);
    } else {  // wimg: exact weight coordinates
      target = rs->weights_to_roots(parse_vec(csv));
    }
    bool found = false;
    for (const QMat& images : emb->weight_images)
      for (const QVec& img : images)
        if (img == target) found = true;
    if (!found) {
      ok = false;
      UNSCOPED_INFO("display not among the computed images: " << line);
    }
    if (cong) {
      QVec diff = qvec_sub(target, rs->weights_to_roots(*cong));
      if (!qvec_is_integral(diff)) {
        ok = false;
        UNSCOPED_INFO("congruence fails: " << line);
      }
    }
    ++audited;
  }
  verdict(8, "all " + std::to_string(audited) + " displayed images across " +
                 std::to_string(cases) + " cases hold exactly",
          ok, timer.secs());
  REQUIRE(audited > 200);
  REQUIRE(ok);
}
