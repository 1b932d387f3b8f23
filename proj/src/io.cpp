#include "rulekit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rulekit/errors.hpp"

namespace rulekit {

using nlohmann::ordered_json;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

ordered_json number(double x) {
  // JSON has no NaN or infinity; undefined values become null.
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

void csv_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double x : values) {
    if (!first) out << ',';
    out << format_number(x);
    first = false;
  }
}

}  // namespace

void write_frenet_csv(std::ostream& out, const std::vector<FrameJet>& frames) {
  out << "s,speed,speed_star,kappa,kappa_star,tau,tau_star,"
         "T_x,T_y,T_z,T_star_x,T_star_y,T_star_z,"
         "N_x,N_y,N_z,N_star_x,N_star_y,N_star_z,"
         "B_x,B_y,B_z,B_star_x,B_star_y,B_star_z,"
         "frenet_residual,moment_residual,orthonormality_residual,near_inflection\n";
  for (const auto& fj : frames) {
    const DualFrenetFrame f = fj.frame();
    csv_row(out, {f.s, f.speed.real, f.speed.dual, f.kappa.real, f.kappa.dual, f.tau.real, f.tau.dual});
    for (const DualVec3* v : {&f.T, &f.N, &f.B}) {
      out << ',';
      csv_row(out, {v->real.x, v->real.y, v->real.z, v->dual.x, v->dual.y, v->dual.z});
    }
    out << ',';
    csv_row(out, {frenet_residuals(fj).max(), moment_identities(f).max(), orthonormality_residual(f)});
    out << ',' << (f.near_inflection ? 1 : 0) << '\n';
  }
}

void write_curvature_csv(std::ostream& out, const CurvatureGrid& grid) {
  out << "s,v,K_oracle,H_half,H_trace,K_paper,H_paper,Y2_norm,singular_flag\n";
  for (const auto& p : grid.samples) {
    csv_row(out, {p.s, p.v, p.K_oracle, p.H_half, p.H_trace, p.K_paper, p.H_paper, p.Y2_norm});
    out << ',' << (p.singular ? 1 : 0) << '\n';
  }
}

std::vector<std::pair<int, int>> write_obj(std::ostream& out, const CurvatureGrid& grid) {
  const int ns = static_cast<int>(grid.s_values.size());
  const int nv = static_cast<int>(grid.v_values.size());
  std::vector<int> index(grid.samples.size(), 0);  // 1-based OBJ index, 0 = dropped
  std::vector<std::pair<int, int>> dropped;

  out << "# ruled surface " << kind_name(grid.kind) << ", " << ns << " x " << nv << " grid\n";
  int next = 1;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nv; ++j) {
      const auto& p = grid.at(i, j);
      const bool finite = std::isfinite(p.position.x) && std::isfinite(p.position.y) && std::isfinite(p.position.z);
      if (p.singular || !finite) {
        dropped.emplace_back(i, j);
        continue;
      }
      index[static_cast<std::size_t>(i) * nv + j] = next++;
      out << "v " << format_number(p.position.x) << ' ' << format_number(p.position.y) << ' '
          << format_number(p.position.z) << '\n';
    }
  }
  auto id = [&](int i, int j) { return index[static_cast<std::size_t>(i) * nv + j]; };
  auto tri = [&](int a, int b, int c) {
    if (a && b && c) out << "f " << a << ' ' << b << ' ' << c << '\n';
  };
  for (int i = 0; i + 1 < ns; ++i) {
    for (int j = 0; j + 1 < nv; ++j) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      tri(a, b, c);
      tri(a, c, d);
    }
  }
  return dropped;
}

void write_singular_listing(std::ostream& out, const CurvatureGrid& grid,
                            const std::vector<std::pair<int, int>>& dropped) {
  out << "# i_s,i_v,s,v\n";
  for (auto [i, j] : dropped) {
    out << i << ',' << j << ',' << format_number(grid.s_values[i]) << ',' << format_number(grid.v_values[j]) << '\n';
  }
}

ordered_json to_json(const TheoremRecord& r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["kind"] = kind_name(r.kind);
  ordered_json branches = ordered_json::array();
  for (const auto& b : r.branches) {
    ordered_json jb;
    jb["hypothesis"] = b.description;
    auto ranges = [](const std::vector<QuantityRange>& qs) {
      ordered_json arr = ordered_json::array();
      for (const auto& q : qs) arr.push_back({{"name", q.name}, {"max_abs", number(q.max_abs)}, {"min_abs", number(q.min_abs)}});
      return arr;
    };
    jb["must_vanish"] = ranges(b.must_vanish);
    jb["must_not_vanish"] = ranges(b.must_not_vanish);
    jb["unsatisfiable_by_construction"] = b.unsatisfiable_by_construction;
    jb["satisfied"] = b.satisfied;
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  j["hypothesis_satisfied"] = r.hypothesis_satisfied;
  j["max_abs_K_paper"] = number(r.max_abs_K_paper);
  j["max_abs_H_paper"] = number(r.max_abs_H_paper);
  j["max_abs_K_oracle"] = number(r.max_abs_K_oracle);
  j["max_abs_H_trace"] = number(r.max_abs_H_trace);
  j["compared_points"] = r.compared_points;
  j["conclusion_satisfied"] = r.conclusion_satisfied;
  j["forward_holds"] = r.forward_holds;
  j["converse"] = r.converse_consistent ? "consistent" : "inconsistent";
  j["notes"] = r.notes;
  return j;
}

ordered_json to_json(const ClassificationReport& r) {
  ordered_json j;
  j["kind"] = kind_name(r.kind);
  j["developable"] = r.developable;
  j["minimal"] = r.minimal;
  j["weingarten"] = r.weingarten;
  j["max_abs_K"] = number(r.max_abs_K);
  j["max_abs_H_half"] = number(r.max_abs_H_half);
  j["max_norm_jacobian"] = number(r.max_norm_jacobian);
  j["jacobian_points"] = r.jacobian_points;
  j["theorem"] = to_json(r.theorem);
  j["selected_bracket_interpretation"] = interpretation_name(r.selected_interpretation);
  j["grid"] = {{"s_count", r.s_count}, {"v_count", r.v_count}};
  j["excluded_points"] = r.excluded_points;
  return j;
}

ordered_json to_json(const VerifyReport& r) {
  ordered_json j;
  j["passed"] = r.passed;
  j["k_degenerate"] = r.k_degenerate;
  ordered_json selected = ordered_json::array();
  for (const auto& s : r.selected) {
    selected.push_back({{"kind", kind_name(s.kind)},
                        {"interpretation", interpretation_name(s.interpretation)},
                        {"max_rel_K", number(s.max_rel_K)},
                        {"max_rel_H", number(s.max_rel_H)},
                        {"undefined", s.undefined},
                        {"passes", s.passes}});
  }
  j["selected"] = std::move(selected);
  ordered_json table = ordered_json::array();
  for (const auto& row : r.table) {
    table.push_back({{"member", row.member},
                     {"kind", kind_name(row.kind)},
                     {"interpretation", interpretation_name(row.interpretation)},
                     {"max_rel_K", number(row.max_rel_K)},
                     {"max_rel_H", number(row.max_rel_H)},
                     {"compared", row.compared},
                     {"excluded", row.excluded},
                     {"undefined", row.undefined}});
  }
  j["table"] = std::move(table);
  ordered_json diag = ordered_json::array();
  for (const auto& d : r.h_diagnostics) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : d.terms) terms.push_back({{"term", t.label}, {"max_abs_over_Y2_cubed", number(t.max_abs)}});
    diag.push_back({{"member", d.member},
                    {"kind", kind_name(d.kind)},
                    {"compared", d.compared},
                    {"max_rel_vs_trace", number(d.max_rel_vs_trace)},
                    {"max_rel_vs_negated_trace", number(d.max_rel_vs_negated_trace)},
                    {"max_rel_vs_s_only_trace", number(d.max_rel_vs_s_only)},
                    {"max_rel_ruling_term", number(d.max_rel_ruling_term)},
                    {"terms", std::move(terms)}});
  }
  j["h_diagnostics"] = std::move(diag);
  j["notes"] = r.notes;
  return j;
}

void write_verify_csv(std::ostream& out, const VerifyReport& report) {
  out << "member,kind,interpretation,max_rel_K,max_rel_H,compared,excluded,undefined\n";
  for (const auto& row : report.table) {
    out << row.member << ',' << kind_name(row.kind) << ',' << interpretation_name(row.interpretation) << ','
        << format_number(row.max_rel_K) << ',' << format_number(row.max_rel_H) << ',' << row.compared << ','
        << row.excluded << ',' << row.undefined << '\n';
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out.flush()) throw IoError("cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot write " + path.string());
  }
}

}  // namespace rulekit
