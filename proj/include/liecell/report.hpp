#pragma once

#include "liecell/kernel.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace liecell {

using nlohmann::json;

struct QueryReport {
  std::string group;
  std::string type;
  QVec u;
  Branch branch = Branch::Interior;
  Rat beta_value;

  struct Factor {
    std::string type;
    std::string group;
    std::vector<int> vertices;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;
  int radical_rank = 0;

  struct Generator {
    std::vector<int> components;  // weight index per factor, 0 = identity
    QVec radical;                 // exp argument on the torus; empty if none
    Int order = 1;
    friend bool operator==(const Generator&, const Generator&) = default;
  };
  Int kernel_order = 1;
  std::vector<Int> invariant_factors;
  std::vector<Generator> generators;

  std::optional<bool> maximal;

  friend bool operator==(const QueryReport&, const QueryReport&) = default;
};

inline std::optional<Int> fg_denominator(const RootSystem& rs, const QVec& lambda) {
  for (const FgPoint& f : fg_set(rs))
    if (f.point.lambda == lambda) return f.p;
  return std::nullopt;
}

inline QueryReport build_report(const RootSystem& rs, const CentralizerResult& res) {
  QueryReport r;
  r.group = group_of_type(rs.type).str();
  r.type = rs.type.str();
  r.u = res.u.lambda;
  r.branch = res.local.branch;
  r.beta_value = res.u.beta_value;
  for (std::size_t c = 0; c < res.local.components.size(); ++c) {
    QueryReport::Factor f;
    f.type = res.local.components[c].type.str();
    f.group = res.local.names[c].str();
    f.vertices = res.local.components[c].vertices;
    r.factors.push_back(std::move(f));
  }
  r.radical_rank = res.local.radical_rank;
  r.kernel_order = res.kernel.order;
  r.invariant_factors = res.kernel.invariant_factors;
  for (const KernelElement& g : res.kernel.generators) {
    QueryReport::Generator gen;
    gen.components = g.theta.entry;
    bool gamma_zero = std::all_of(g.gamma.begin(), g.gamma.end(),
                                  [](const Rat& q) { return q == 0; });
    if (!gamma_zero) {
      QVec minus_gamma = qvec_scale(Rat(-1), g.gamma);
      gen.radical = rs.roots_to_weights(minus_gamma);
    }
    gen.order = g.order;
    r.generators.push_back(std::move(gen));
  }
  if (auto p = fg_denominator(rs, res.u.lambda)) r.maximal = is_prime(*p);
  return r;
}

// ---------------------------------------------------------------- JSON ----

inline json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(rat_str(q));
  return a;
}

inline QVec qvec_from_json(const json& a) {
  QVec v;
  for (const auto& s : a) v.push_back(rat_parse(s.get<std::string>()));
  return v;
}

inline json report_to_json(const QueryReport& r) {
  json j;
  j["group"] = r.group;
  j["type"] = r.type;
  j["u"] = qvec_to_json(r.u);
  j["branch"] = branch_name(r.branch);
  j["beta_value"] = rat_str(r.beta_value);
  j["factors"] = json::array();
  for (const auto& f : r.factors)
    j["factors"].push_back({{"type", f.type}, {"group", f.group}, {"vertices", f.vertices}});
  j["radical_rank"] = r.radical_rank;
  json k;
  k["order"] = r.kernel_order.str();
  k["invariant_factors"] = json::array();
  for (const Int& d : r.invariant_factors) k["invariant_factors"].push_back(d.str());
  k["generators"] = json::array();
  for (const auto& g : r.generators) {
    json gj;
    gj["components"] = g.components;
    gj["radical"] = g.radical.empty() ? json(nullptr) : qvec_to_json(g.radical);
    gj["order"] = g.order.str();
    k["generators"].push_back(gj);
  }
  j["kernel"] = k;
  j["maximal"] = r.maximal ? json(*r.maximal) : json(nullptr);
  return j;
}

inline QueryReport report_from_json(const json& j) {
  QueryReport r;
  r.group = j.at("group").get<std::string>();
  r.type = j.at("type").get<std::string>();
  r.u = qvec_from_json(j.at("u"));
  std::string b = j.at("branch").get<std::string>();
  r.branch = b == "interior" ? Branch::Interior
                             : (b == "wall" ? Branch::Wall : Branch::Central);
  r.beta_value = rat_parse(j.at("beta_value").get<std::string>());
  for (const auto& fj : j.at("factors")) {
    QueryReport::Factor f;
    f.type = fj.at("type").get<std::string>();
    f.group = fj.at("group").get<std::string>();
    f.vertices = fj.at("vertices").get<std::vector<int>>();
    r.factors.push_back(std::move(f));
  }
  r.radical_rank = j.at("radical_rank").get<int>();
  const json& k = j.at("kernel");
  r.kernel_order = Int(k.at("order").get<std::string>());
  for (const auto& d : k.at("invariant_factors"))
    r.invariant_factors.push_back(Int(d.get<std::string>()));
  for (const auto& gj : k.at("generators")) {
    QueryReport::Generator g;
    g.components = gj.at("components").get<std::vector<int>>();
    if (!gj.at("radical").is_null()) g.radical = qvec_from_json(gj.at("radical"));
    g.order = Int(gj.at("order").get<std::string>());
    r.generators.push_back(std::move(g));
  }
  if (!j.at("maximal").is_null()) r.maximal = j.at("maximal").get<bool>();
  return r;
}

// ---------------------------------------------------------------- text ----

inline std::string lambda_str(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

inline std::string vertex_list_str(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s;
}

// sparse "a w_i + b w_j" rendering of a weight-coordinate vector
inline std::string weight_combo_str(const QVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += v[i] > 0 ? " + " : " - ";
    else if (v[i] < 0) s += "-";
    Rat a = v[i] < 0 ? Rat(-v[i]) : v[i];
    if (a != 1) s += rat_str(a) + " ";
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

inline std::string local_type_str(const QueryReport& r) {
  std::string s;
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    if (i) s += " x ";
    s += r.factors[i].group;
  }
  if (r.radical_rank == 1) s += (s.empty() ? "" : " x ") + std::string("S1");
  if (r.radical_rank > 1)
    s += (s.empty() ? "" : " x ") + std::string("T^") + std::to_string(r.radical_rank);
  return s.empty() ? "trivial" : s;
}

inline std::string generator_str(const QueryReport::Generator& g) {
  std::string s;
  int slot = 0;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    if (g.components[c] == 0) {
      ++slot;
      continue;
    }
    if (!s.empty()) s += " x ";
    s += "exp_" + std::to_string(c + 1) + "(w" + std::to_string(g.components[c]) + ")";
    ++slot;
  }
  if (!g.radical.empty()) {
    if (!s.empty()) s += " x ";
    s += "exp_r(" + weight_combo_str(g.radical) + ")";
  }
  return s;
}

inline std::string kernel_str(const QueryReport& r) {
  if (r.invariant_factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
    if (i) s += " + ";
    s += "Z_" + r.invariant_factors[i].str();
  }
  return s;
}

inline std::string render_report(const QueryReport& r) {
  std::ostringstream os;
  os << "group: " << r.group << " (type " << r.type << ")\n";
  os << "u: " << lambda_str(r.u) << "\n";
  os << "branch: " << branch_name(r.branch)
     << " (beta*(u) = " << rat_str(r.beta_value) << ")\n";
  if (r.branch == Branch::Central) {
    os << "central element: centralizer is all of " << r.group << "\n";
    return os.str();
  }
  os << "local type: " << local_type_str(r) << "\n";
  for (const auto& f : r.factors)
    os << "  factor " << f.group << " on vertices [" << vertex_list_str(f.vertices)
       << "]\n";
  os << "radical rank: " << r.radical_rank << "\n";
  os << "kernel: " << kernel_str(r) << " (order " << r.kernel_order.str() << ")\n";
  for (const auto& g : r.generators)
    os << "  generator " << generator_str(g) << " of order " << g.order.str() << "\n";
  if (r.maximal)
    os << "maximal: " << (*r.maximal ? "yes" : "no") << "\n";
  return os.str();
}

// ---------------------------------------------------------------- DOT -----

inline std::string render_dot(const RootSystem& rs,
                              const std::optional<CellPoint>& u) {
  std::optional<LocalType> lt;
  if (u) lt = local_type(rs, *u);
  bool extended = lt && lt->branch == Branch::Wall;
  std::ostringstream os;
  os << "digraph dynkin {\n  node [shape=circle];\n  edge [dir=none];\n";
  auto deleted = [&](int v) {
    if (!u) return false;
    const auto& s = u->support;
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  for (int v = 1; v <= rs.n; ++v) {
    os << "  n" << v << " [label=\"" << v << "\"";
    if (deleted(v)) os << ", style=dashed, color=red";
    os << "];\n";
  }
  if (extended) os << "  n0 [label=\"0\", shape=doublecircle];\n";
  int top = extended ? rs.n + 1 : rs.n;
  auto id = [&](int i) { return i == rs.n ? 0 : i + 1; };
  for (int i = 0; i < top; ++i)
    for (int j = i + 1; j < top; ++j) {
      int aij = rs.A_ext[i][j], aji = rs.A_ext[j][i];
      if (aij == 0) continue;
      int mult = std::max(-aij, -aji);
      if (mult > 1) {
        // A_ij d_j = A_ji d_i: the bigger |entry| sits on the longer root's
        // row; the arrow points from the long root to the short one
        int from = (-aij > -aji) ? id(i) : id(j);
        int to = (-aij > -aji) ? id(j) : id(i);
        os << "  n" << from << " -> n" << to << " [label=\"" << mult
           << "\", dir=forward];\n";
      } else {
        os << "  n" << id(i) << " -> n" << id(j) << ";\n";
      }
    }
  os << "}\n";
  return os.str();
}

// --------------------------------------------------------------- tables ---

inline std::string table_minimal_weights(const std::vector<LieType>& types) {
  std::ostringstream os;
  for (LieType t : types) {
    const RootSystem& rs = RootSystem::get(t);
    os << t.str() << " (" << group_of_type(t).str() << "): {";
    for (std::size_t i = 0; i < rs.minimal.size(); ++i)
      os << (i ? "," : "") << "w" << rs.minimal[i];
    os << "}\n";
  }
  return os.str();
}

inline std::string table_centers(const std::vector<LieType>& types) {
  std::ostringstream os;
  for (LieType t : types) {
    const RootSystem& rs = RootSystem::get(t);
    os << t.str() << " (" << group_of_type(t).str() << "): ";
    if (rs.center.empty()) {
      os << "trivial\n";
      continue;
    }
    for (std::size_t i = 0; i < rs.center.size(); ++i)
      os << (i ? " + " : "") << "Z_" << rs.center[i].str();
    os << "\n";
  }
  return os.str();
}

inline std::string table_deficiency(const std::vector<LieType>& types) {
  std::ostringstream os;
  for (LieType t : types) {
    const RootSystem& rs = RootSystem::get(t);
    os << t.str() << " (" << group_of_type(t).str() << "): 0 -> 1";
    for (int i : rs.minimal)
      os << ", w" << i << " -> " << deficiency_simple(t, i).str();
    os << "\n";
  }
  return os.str();
}

// -------------------------------------------------------------- catalogs --

inline std::vector<QueryReport> catalog_maximal(const RootSystem& rs) {
  std::vector<QueryReport> out;
  for (const FgPoint& f : fg_set(rs))
    out.push_back(build_report(rs, full_centralizer(rs, f.point.lambda)));
  return out;
}

inline QueryReport catalog_parabolic(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.n) throw usage_error("vertex index out of range");
  FgPoint f = fg_set(rs)[i - 1];
  QVec lambda = qvec_zero(rs.n);
  lambda[i - 1] = Rat(1, 2 * f.p);  // representative u = u_i / 2
  return build_report(rs, full_centralizer(rs, lambda));
}

inline std::string render_catalog(const std::string& title,
                                  const std::vector<QueryReport>& rows) {
  std::ostringstream os;
  os << "# " << title << "\n";
  for (const auto& r : rows) {
    os << lambda_str(r.u) << " | " << branch_name(r.branch) << " | "
       << local_type_str(r) << " | " << kernel_str(r);
    for (const auto& g : r.generators) os << " | gen " << generator_str(g);
    if (r.maximal) os << " | maximal=" << (*r.maximal ? "yes" : "no");
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------- centralizer of a subgroup --

struct SetReport {
  std::vector<QVec> inputs;
  std::vector<int> base;  // vertex ids, 0 = affine
  bool all_wall = false;
  bool mixed = false;  // both wall and interior points present
  std::vector<std::string> factor_groups;
  int torus_rank = 0;
  std::optional<QueryReport> single;  // when the input collapses to one point
};

inline SetReport centralizer_set(const RootSystem& rs,
                                 const std::vector<QVec>& lambdas) {
  if (lambdas.empty()) throw empty_input("centralizer-set: no points given");
  SetReport rep;
  std::vector<CellPoint> pts;
  std::vector<QVec> distinct;
  bool any_wall = false, any_interior = false;
  for (const QVec& l : lambdas) {
    CellPoint p = cell_membership(rs, l);
    (p.wall ? any_wall : any_interior) = true;
    pts.push_back(p);
    if (std::find(distinct.begin(), distinct.end(), l) == distinct.end())
      distinct.push_back(l);
    rep.inputs.push_back(l);
  }
  rep.all_wall = any_wall && !any_interior;
  rep.mixed = any_wall && any_interior;
  rep.base = base_of_set(rs, pts);
  auto comps = classify_diagram(rs, rep.base);
  for (const auto& c : comps) rep.factor_groups.push_back(group_of_type(c.type).str());
  int ss_rank = 0;
  for (const auto& c : comps) ss_rank += c.type.rank;
  rep.torus_rank = rs.n - ss_rank;
  if (distinct.size() == 1)
    rep.single = build_report(rs, full_centralizer(rs, distinct[0]));
  return rep;
}

inline std::string render_set_report(const SetReport& r) {
  std::ostringstream os;
  os << "points: " << r.inputs.size() << "\n";
  os << "base: [" << vertex_list_str(r.base) << "]"
     << (r.all_wall ? " (all points on the wall; -beta retained)" : "") << "\n";
  if (r.mixed) os << "note: mixed wall/interior input\n";
  os << "identity component: ";
  for (std::size_t i = 0; i < r.factor_groups.size(); ++i)
    os << (i ? " x " : "") << r.factor_groups[i];
  if (r.torus_rank > 0)
    os << (r.factor_groups.empty() ? "" : " x ") << "T^" << r.torus_rank;
  if (r.factor_groups.empty() && r.torus_rank == 0) os << "trivial";
  os << "\n";
  if (r.single) {
    os << "single effective point; full result:\n";
    os << render_report(*r.single);
  }
  return os.str();
}

inline json set_report_to_json(const SetReport& r) {
  json j;
  j["points"] = json::array();
  for (const auto& u : r.inputs) j["points"].push_back(qvec_to_json(u));
  j["base"] = r.base;
  j["all_wall"] = r.all_wall;
  j["mixed"] = r.mixed;
  j["factors"] = r.factor_groups;
  j["torus_rank"] = r.torus_rank;
  j["single"] = r.single ? report_to_json(*r.single) : json(nullptr);
  return j;
}

}  // namespace liecell
