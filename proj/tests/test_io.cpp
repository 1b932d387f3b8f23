#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rulekit/errors.hpp"
#include "rulekit/io.hpp"
#include "support.hpp"

using namespace rulekit;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

struct Mesh {
  std::vector<Vec3d> vertices;
  std::vector<std::array<int, 3>> faces;
};

Mesh read_obj(const std::string& text) {
  Mesh m;
  for (const auto& l : lines(text)) {
    std::istringstream in(l);
    std::string tag;
    in >> tag;
    if (tag == "v") {
      Vec3d p;
      in >> p.x >> p.y >> p.z;
      m.vertices.push_back(p);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      in >> f[0] >> f[1] >> f[2];
      m.faces.push_back(f);
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-2.5e-20) == "-2.5e-20");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(NAN) == "nan");
    CHECK(round12(1.0 / 3.0) == 0.333333333333);
  }

  TEST_CASE("curvature CSV") {
    const CurvatureGrid g = evaluate_grid(testing::corpus("circle"), IndicatrixKind::Tangent, GridConfig{5, -1, 1, 5});
    std::ostringstream out;
    write_curvature_csv(out, g);
    const std::string text = out.str();
    CHECK(text.find('\r') == std::string::npos);
    const auto rows = lines(text);
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == "s,v,K_oracle,H_half,H_trace,K_paper,H_paper,Y2_norm,singular_flag");
    CHECK(rows[1].rfind("0,-1,", 0) == 0);
    CHECK(rows[3].substr(rows[3].size() - 2) == ",1");  // v = 0 lies on the edge of regression
    CHECK(rows[3].find("nan") != std::string::npos);
  }

  TEST_CASE("OBJ of a plane: counts, dropped points and orientation") {
    const CurvatureGrid g = evaluate_grid(testing::corpus("circle"), IndicatrixKind::Tangent, GridConfig{});
    std::ostringstream out, listing;
    const auto dropped = write_obj(out, g);
    write_singular_listing(listing, g, dropped);
    const Mesh m = read_obj(out.str());
    CHECK(dropped.size() == 21);
    CHECK(m.vertices.size() == 21 * 41 - dropped.size());
    CHECK(lines(listing.str()).size() == 1 + dropped.size());
    // Quads touching the dropped column lose both triangles: 20 rows x 2 columns x 2.
    CHECK(m.faces.size() == 20 * 40 * 2 - 20 * 2 * 2);

    Vec3d reference{};
    for (const auto& f : m.faces) {
      for (int i : f) REQUIRE((i >= 1 && i <= static_cast<int>(m.vertices.size())));
      const Vec3d a = m.vertices[f[0] - 1], b = m.vertices[f[1] - 1], c = m.vertices[f[2] - 1];
      Vec3d n = cross(b - a, c - a);
      const double len = norm(n);
      REQUIRE(len > 0);
      n = (1.0 / len) * n;
      if (norm(reference) == 0) reference = n;
      CHECK(norm(cross(n, reference)) <= 1e-9);
    }
  }

  TEST_CASE("OBJ triangles follow (a, b, c), (a, c, d)") {
    const CurvatureGrid g = evaluate_grid(testing::corpus("twisted"), IndicatrixKind::Tangent, GridConfig{5, 0.5, 1.5, 5});
    std::ostringstream out;
    CHECK(write_obj(out, g).empty());
    const Mesh m = read_obj(out.str());
    CHECK(m.vertices.size() == 25);
    REQUIRE(m.faces.size() == 32);
    CHECK(m.faces[0] == std::array<int, 3>{1, 6, 7});
    CHECK(m.faces[1] == std::array<int, 3>{1, 7, 2});
  }

  TEST_CASE("classification JSON uses the stable key names") {
    const auto j = to_json(classify_surface(testing::corpus("helicoid"), IndicatrixKind::Tangent));
    for (const char* key : {"kind", "developable", "minimal", "weingarten", "max_abs_K", "max_abs_H_half",
                            "max_norm_jacobian", "theorem", "selected_bracket_interpretation", "excluded_points"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["kind"] == "tangent");
    CHECK(j["minimal"] == true);
    CHECK(j["selected_bracket_interpretation"] == "printed");
    CHECK(j["theorem"]["converse"] == "consistent");
  }

  TEST_CASE("verify CSV has one row per member, kind and interpretation") {
    const VerifyReport r = verify_formulas({{"twisted", testing::corpus("twisted")}});
    std::ostringstream out;
    write_verify_csv(out, r);
    CHECK(lines(out.str()).size() == 1 + 3 * 4);
  }

  TEST_CASE("write_file replaces the target and reports failures") {
    const auto dir = std::filesystem::temp_directory_path() / "rulekit_io_test";
    std::filesystem::create_directories(dir);
    write_file(dir / "a.txt", "first");
    write_file(dir / "a.txt", "second");
    std::ifstream in(dir / "a.txt");
    std::string content;
    std::getline(in, content);
    CHECK(content == "second");
    CHECK_FALSE(std::filesystem::exists(dir / "a.txt.tmp"));
    CHECK_THROWS_AS(write_file(dir / "missing" / "b.txt", "x"), IoError);
    std::filesystem::remove_all(dir);
  }
}
