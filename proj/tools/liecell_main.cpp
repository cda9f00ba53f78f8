#include "liecell/liecell.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace liecell;

QVec parse_lambda(const RootSystem& rs, const std::string& csv) {
  QVec v;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(rat_parse(tok));
  if (static_cast<int>(v.size()) != rs.n)
    throw usage_error("expected " + std::to_string(rs.n) +
                      " comma-separated rationals, got " + std::to_string(v.size()));
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw usage_error("cannot open output file " + out_path);
  f << text;
}

std::vector<LieType> resolve_types(const std::string& sel) {
  std::vector<LieType> out;
  if (sel == "exceptional") {
    out = {LieType{Family::G, 2}, LieType{Family::F, 4}, LieType{Family::E, 6},
           LieType{Family::E, 7}, LieType{Family::E, 8}};
  } else if (sel.size() == 1 && sel[0] >= 'A' && sel[0] <= 'D') {
    Family f = static_cast<Family>(sel[0]);
    int lo = sel[0] == 'A' ? 1 : (sel[0] == 'B' ? 2 : (sel[0] == 'C' ? 3 : 4));
    for (int r = lo; r <= 8; ++r) out.push_back(LieType::make(f, r));
  } else if (sel == "all") {
    for (char fam : {'A', 'B', 'C', 'D'}) {
      auto sub = resolve_types(std::string(1, fam));
      out.insert(out.end(), sub.begin(), sub.end());
    }
    auto exc = resolve_types("exceptional");
    out.insert(out.end(), exc.begin(), exc.end());
  } else {
    out.push_back(type_of_group_name(sel));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centralizers of elements in 1-connected simple compact Lie groups"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write output to a file");

  std::string group, lambda_csv, u_csv, kind;
  int vertex = 0;
  std::vector<std::string> lambda_list;
  bool with_dot = false;

  auto* c_cent = app.add_subcommand("centralizer", "centralizer of exp(u)");
  c_cent->add_option("group", group)->required();
  c_cent->add_option("lambda", lambda_csv, "fundamental-weight coefficients, e.g. 0,1/2,0")
      ->required();
  c_cent->add_flag("--dot", with_dot, "append the marked Dynkin diagram as DOT");

  auto* c_max = app.add_subcommand("maximal", "catalog of maximal-rank centralizers");
  c_max->add_option("group", group)->required();

  auto* c_par = app.add_subcommand("parabolic", "singleton-support parabolic centralizer");
  c_par->add_option("group", group)->required();
  c_par->add_option("vertex", vertex)->required();

  auto* c_set = app.add_subcommand("centralizer-set", "centralizer of a generated subgroup");
  c_set->add_option("group", group)->required();
  c_set->add_option("lambdas", lambda_list, "one or more lambda vectors")->required();

  auto* c_tab = app.add_subcommand("tables", "regenerate classification tables");
  c_tab->add_option("kind", kind, "deficiency | minimal-weights | centers")->required();
  c_tab->add_option("group", group, "type, family letter, 'exceptional' or 'all'")
      ->required();

  auto* c_dot = app.add_subcommand("dot", "Dynkin diagram as Graphviz DOT");
  c_dot->add_option("group", group)->required();
  c_dot->add_option("--u", u_csv, "mark the deleted vertices of a cell point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const RootSystem& rs = RootSystem::get(type_of_group_name(group.empty() ? "A1" : group));

    if (c_cent->parsed()) {
      QVec lambda = parse_lambda(rs, lambda_csv);
      QueryReport r = build_report(rs, full_centralizer(rs, lambda));
      std::string text = as_json ? report_to_json(r).dump(2) + "\n" : render_report(r);
      if (with_dot) text += render_dot(rs, cell_membership(rs, lambda));
      emit(text, out_path);
    } else if (c_max->parsed()) {
      auto rows = catalog_maximal(rs);
      if (as_json) {
        json a = json::array();
        for (const auto& r : rows) a.push_back(report_to_json(r));
        emit(a.dump(2) + "\n", out_path);
      } else {
        emit(render_catalog("maximal-rank centralizers: " + rs.type.str(), rows),
             out_path);
      }
    } else if (c_par->parsed()) {
      QueryReport r = catalog_parabolic(rs, vertex);
      emit(as_json ? report_to_json(r).dump(2) + "\n" : render_report(r), out_path);
    } else if (c_set->parsed()) {
      std::vector<QVec> ls;
      for (const auto& s : lambda_list) ls.push_back(parse_lambda(rs, s));
      SetReport r = centralizer_set(rs, ls);
      emit(as_json ? set_report_to_json(r).dump(2) + "\n" : render_set_report(r),
           out_path);
    } else if (c_tab->parsed()) {
      auto types = resolve_types(group);
      std::string text;
      if (kind == "deficiency") text = table_deficiency(types);
      else if (kind == "minimal-weights") text = table_minimal_weights(types);
      else if (kind == "centers") text = table_centers(types);
      else throw usage_error("unknown table kind '" + kind + "'");
      emit(text, out_path);
    } else if (c_dot->parsed()) {
      std::optional<CellPoint> u;
      if (!u_csv.empty()) u = cell_membership(rs, parse_lambda(rs, u_csv));
      emit(render_dot(rs, u), out_path);
    }
  } catch (const not_in_cell& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cross_check_failure& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const closure_mismatch& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
