#include <filesystem>
#include <fstream>
#include <string>

#include "cli_support.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using testing::run_cli;
using testing::scratch;
using testing::slurp;

namespace {

std::string spec_arg(const std::string& name) { return "--spec \"" + testing::corpus_path(name).string() + "\""; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("frenet writes a CSV with the circle curvatures") {
    const fs::path out = scratch("cli_frenet");
    REQUIRE(run_cli("frenet " + spec_arg("circle") + " --out " + out.string()) == 0);
    const std::string csv = slurp(out / "frenet.csv");
    CHECK(csv.rfind("s,speed,speed_star,kappa,kappa_star,tau,tau_star,", 0) == 0);
    // Second row: s = 0, speed 1 + 0 eps, kappa 1 + 0 eps, tau 0 + 0 eps.
    const std::string row = csv.substr(csv.find('\n') + 1);
    CHECK(row.rfind("0,1,0,1,0,0,0,", 0) == 0);
  }

  TEST_CASE("surface --kind all writes three meshes with deterministic names") {
    const fs::path out = scratch("cli_surface");
    REQUIRE(run_cli("surface " + spec_arg("twisted") + " --kind all --out " + out.string()) == 0);
    for (const char* k : {"t", "n", "b"}) {
      CHECK(fs::exists(out / (std::string("surface_") + k + ".obj")));
      CHECK(fs::exists(out / (std::string("surface_") + k + ".csv")));
      CHECK(fs::exists(out / (std::string("surface_") + k + ".singular.txt")));
    }
    const fs::path only = scratch("cli_surface_obj");
    REQUIRE(run_cli("surface " + spec_arg("twisted") + " --kind t --format obj --out " + only.string()) == 0);
    CHECK(fs::exists(only / "surface_t.obj"));
    CHECK_FALSE(fs::exists(only / "surface_t.csv"));
  }

  TEST_CASE("classify writes JSON and exits 0 regardless of verdicts") {
    const fs::path out = scratch("cli_classify");
    REQUIRE(run_cli("classify " + spec_arg("helicoid") + " --kind t --out " + out.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(out / "classify_t.json"));
    CHECK(j["minimal"] == true);
    CHECK(j["weingarten"] == true);
    CHECK(j["developable"] == false);
    REQUIRE(run_cli("classify " + spec_arg("twisted") + " --kind n --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out / "classify_n.json"))["weingarten"] == false);
  }

  TEST_CASE("classify --kind all on a degenerate binormal surface exits 3 but writes every report") {
    const fs::path out = scratch("cli_classify_all");
    CHECK(run_cli("classify " + spec_arg("circle") + " --kind all --out " + out.string()) == 3);
    CHECK(nlohmann::json::parse(slurp(out / "classify_t.json"))["developable"] == true);
    CHECK(nlohmann::json::parse(slurp(out / "classify_b.json")).contains("error"));
  }

  TEST_CASE("verify on the shipped corpus exits 0") {
    const fs::path out = scratch("cli_verify");
    REQUIRE(run_cli("verify --corpus \"" RULEKIT_CORPUS_DIR "\" --out " + out.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(out / "verify.json"));
    CHECK(j["passed"] == true);
    CHECK(fs::exists(out / "verify.csv"));
  }

  TEST_CASE("verify on an empty corpus exits 2") {
    const fs::path empty = scratch("cli_empty_corpus");
    CHECK(run_cli("verify --corpus " + empty.string() + " --out " + scratch("cli_empty_out").string()) == 2);
  }

  TEST_CASE("malformed and off-sphere specs exit 2") {
    const fs::path dir = scratch("cli_bad");
    {
      std::ofstream f(dir / "bad.curve");
      f << "alpha_x = cos(s)\nalpha_y = sin(\n";
    }
    CHECK(run_cli("frenet --spec " + (dir / "bad.curve").string() + " --out " + dir.string()) == 2);
    {
      std::ofstream f(dir / "big.curve");
      f << "alpha_x = 2*cos(s)\nalpha_y = 2*sin(s)\nalpha_z = 0\n"
           "alphastar_x = 0\nalphastar_y = 0\nalphastar_z = 0\ndomain = 0, 1\n";
    }
    CHECK(run_cli("surface --spec " + (dir / "big.curve").string() + " --out " + dir.string()) == 2);
    CHECK_FALSE(fs::exists(dir / "surface_t.obj"));
  }

  TEST_CASE("flag and grid errors exit 2") {
    const std::string out = " --out " + scratch("cli_flags").string();
    CHECK(run_cli("frenet " + spec_arg("circle") + " --kind x" + out) == 2);
    CHECK(run_cli("frenet " + spec_arg("circle") + " --s-count 3" + out) == 2);
    CHECK(run_cli("surface " + spec_arg("circle") + " --v-min 1 --v-max -1" + out) == 2);
    CHECK(run_cli("surface " + spec_arg("circle") + " --format png" + out) == 2);
    CHECK(run_cli("frenet" + out) == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--help") == 0);
  }

  TEST_CASE("I/O failures exit 1") {
    CHECK(run_cli("frenet --spec /nonexistent/x.curve --out " + scratch("cli_io").string()) == 1);
    CHECK(run_cli("frenet " + spec_arg("circle") + " --out /proc/rulekit_cannot_exist") == 1);
  }

  TEST_CASE("undefined frames exit 3") {
    const fs::path dir = scratch("cli_numeric");
    {
      std::ofstream f(dir / "still.curve");
      f << "alpha_x = 1\nalpha_y = 0\nalpha_z = 0\nalphastar_x = 0\nalphastar_y = s\nalphastar_z = 0\n"
           "domain = 0, 1\n";
    }
    CHECK(run_cli("frenet --spec " + (dir / "still.curve").string() + " --out " + dir.string()) == 3);
  }

  TEST_CASE("thread cap does not change the output") {
    const fs::path a = scratch("cli_threads_a"), b = scratch("cli_threads_b");
    REQUIRE(run_cli("surface " + spec_arg("twisted") + " --out " + a.string()) == 0);
    const std::string cmd = std::string("RULEKIT_THREADS=1 \"") + RULEKIT_CLI_PATH + "\" surface " +
                            spec_arg("twisted") + " --out " + b.string() + " >/dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    for (const char* k : {"t", "n", "b"}) {
      CHECK(slurp(a / (std::string("surface_") + k + ".obj")) == slurp(b / (std::string("surface_") + k + ".obj")));
      CHECK(slurp(a / (std::string("surface_") + k + ".csv")) == slurp(b / (std::string("surface_") + k + ".csv")));
    }
  }
}
