// rulekit: frames, ruled surfaces, curvature grids and classification for dual curves.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rulekit/classify.hpp"
#include "rulekit/curve_spec.hpp"
#include "rulekit/errors.hpp"
#include "rulekit/frenet.hpp"
#include "rulekit/grid.hpp"
#include "rulekit/io.hpp"

namespace fs = std::filesystem;
using namespace rulekit;

namespace {

enum Exit { kOk = 0, kIo = 1, kInput = 2, kNumerical = 3, kMismatch = 4 };

struct RunConfig {
  std::string spec;
  std::string kind = "all";
  GridConfig grid;
  Tolerances tol;
  std::string out = ".";
  std::string corpus;
  std::string format;
};

std::vector<IndicatrixKind> selected_kinds(const std::string& k) {
  if (k == "all") return {kAllKinds.begin(), kAllKinds.end()};
  return {*kind_from_letter(k)};
}

fs::path prepare_out(const RunConfig& cfg) {
  const fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
  return dir;
}

DualCurveSpec load_valid(const RunConfig& cfg) {
  DualCurveSpec spec = load_spec(cfg.spec);
  const SpecValidation v = validate_spec(spec, std::max(cfg.grid.s_count, 100));
  if (!v.pass) {
    std::string msg = "spec is not a curve on the dual unit sphere";
    for (const auto& f : v.failures) msg += "\n  " + f;
    throw InputError(msg);
  }
  return spec;
}

int cmd_frenet(const RunConfig& cfg) {
  check_grid(cfg.grid);
  const DualCurveSpec spec = load_valid(cfg);
  const fs::path dir = prepare_out(cfg);
  const std::vector<FrameJet> frames = grid_frames(spec, linspace(spec.domain.lo, spec.domain.hi, cfg.grid.s_count));
  std::ostringstream csv;
  write_frenet_csv(csv, frames);
  write_file(dir / "frenet.csv", csv.str());
  return kOk;
}

int cmd_surface(const RunConfig& cfg) {
  check_grid(cfg.grid);
  const DualCurveSpec spec = load_valid(cfg);
  const fs::path dir = prepare_out(cfg);
  const bool obj = cfg.format.empty() || cfg.format == "obj";
  const bool csv = cfg.format.empty() || cfg.format == "csv";
  for (IndicatrixKind kind : selected_kinds(cfg.kind)) {
    const CurvatureGrid grid = evaluate_grid(spec, kind, cfg.grid);
    const std::string base = std::string("surface_") + kind_letter(kind);
    if (obj) {
      std::ostringstream mesh, listing;
      const auto dropped = write_obj(mesh, grid);
      write_singular_listing(listing, grid, dropped);
      write_file(dir / (base + ".obj"), mesh.str());
      write_file(dir / (base + ".singular.txt"), listing.str());
    }
    if (csv) {
      std::ostringstream table;
      write_curvature_csv(table, grid);
      write_file(dir / (base + ".csv"), table.str());
    }
  }
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  check_grid(cfg.grid);
  const DualCurveSpec spec = load_valid(cfg);
  const fs::path dir = prepare_out(cfg);
  int status = kOk;
  for (IndicatrixKind kind : selected_kinds(cfg.kind)) {
    nlohmann::ordered_json j;
    try {
      j = to_json(classify_surface(spec, kind, cfg.grid, cfg.tol));
    } catch (const NumericalError& e) {
      // With several kinds, one undefined surface should not hide the others.
      j = {{"kind", kind_name(kind)}, {"error", e.what()}};
      std::cerr << "rulekit: " << kind_name(kind) << ": " << e.what() << '\n';
      status = kNumerical;
    }
    write_file(dir / (std::string("classify_") + kind_letter(kind) + ".json"), j.dump(2) + "\n");
  }
  return status;
}

int cmd_verify(const RunConfig& cfg) {
  check_grid(cfg.grid);
  const fs::path dir_in(cfg.corpus);
  if (!fs::is_directory(dir_in)) throw IoError("cannot read corpus directory " + dir_in.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir_in)) {
    if (entry.is_regular_file() && entry.path().extension() == ".curve") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("corpus directory " + dir_in.string() + " has no .curve files");

  std::vector<NamedSpec> corpus;
  for (const auto& f : files) {
    RunConfig one = cfg;
    one.spec = f.string();
    try {
      corpus.push_back({f.stem().string(), load_valid(one)});
    } catch (const InputError& e) {
      throw InputError(f.filename().string() + ": " + e.what());
    }
  }
  const fs::path dir = prepare_out(cfg);
  const VerifyReport report = verify_formulas(corpus, cfg.grid, cfg.tol);
  std::ostringstream csv;
  write_verify_csv(csv, report);
  write_file(dir / "verify.json", to_json(report).dump(2) + "\n");
  write_file(dir / "verify.csv", csv.str());
  for (const auto& note : report.notes) std::cout << note << '\n';
  return report.passed ? kOk : kMismatch;
}

template <class F>
int guarded(F&& run) {
  try {
    return run();
  } catch (const IoError& e) {
    std::cerr << "rulekit: " << e.what() << '\n';
    return kIo;
  } catch (const InputError& e) {
    std::cerr << "rulekit: " << e.what() << '\n';
    return kInput;
  } catch (const NumericalError& e) {
    std::cerr << "rulekit: numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "rulekit: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("RULEKIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) set_thread_limit(n);
  }

  CLI::App app{"Ruled surfaces generated by dual Frenet frames"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    auto* spec = sub->add_option("--spec", cfg.spec, "curve spec file");
    if (needs_spec) spec->required();
    sub->add_option("--kind", cfg.kind, "indicatrix kind")
        ->check(CLI::IsMember({"t", "n", "b", "all"}))
        ->capture_default_str();
    sub->add_option("--s-count", cfg.grid.s_count, "samples along the curve")->capture_default_str();
    sub->add_option("--v-min", cfg.grid.v_min, "ruling parameter lower bound")->capture_default_str();
    sub->add_option("--v-max", cfg.grid.v_max, "ruling parameter upper bound")->capture_default_str();
    sub->add_option("--v-count", cfg.grid.v_count, "samples along the ruling")->capture_default_str();
    sub->add_option("--out", cfg.out, "output directory")->capture_default_str();
    sub->add_option("--tol-K", cfg.tol.tol_K, "developable tolerance")->capture_default_str();
    sub->add_option("--tol-H", cfg.tol.tol_H, "minimal tolerance")->capture_default_str();
    sub->add_option("--tol-W", cfg.tol.tol_W, "Weingarten tolerance")->capture_default_str();
    sub->add_option("--format", cfg.format, "restrict output format")->check(CLI::IsMember({"csv", "obj", "json"}));
  };

  auto* frenet = app.add_subcommand("frenet", "dual Frenet frame samples as CSV");
  add_common(frenet, true);
  auto* surface = app.add_subcommand("surface", "OBJ meshes and curvature grids");
  add_common(surface, true);
  auto* classify = app.add_subcommand("classify", "developable / minimal / Weingarten report as JSON");
  add_common(classify, true);
  auto* verify = app.add_subcommand("verify", "closed forms against the fundamental-form oracle");
  add_common(verify, false);
  verify->add_option("--corpus", cfg.corpus, "directory of .curve files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (*frenet) return guarded([&] { return cmd_frenet(cfg); });
  if (*surface) return guarded([&] { return cmd_surface(cfg); });
  if (*classify) return guarded([&] { return cmd_classify(cfg); });
  return guarded([&] { return cmd_verify(cfg); });
}
