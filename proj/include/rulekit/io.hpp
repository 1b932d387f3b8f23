#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rulekit/classify.hpp"
#include "rulekit/frenet.hpp"
#include "rulekit/grid.hpp"

namespace rulekit {

/// 12 significant digits, "nan" for undefined values. Output is locale independent.
std::string format_number(double x);

/// x rounded to 12 significant digits (so JSON output is stable across platforms).
double round12(double x);

/// One row per sample: frame, curvatures and the residuals of the Frenet,
/// moment and orthonormality identities.
void write_frenet_csv(std::ostream& out, const std::vector<FrameJet>& frames);

/// Columns: s, v, K_oracle, H_half, H_trace, K_paper, H_paper, Y2_norm, singular_flag.
void write_curvature_csv(std::ostream& out, const CurvatureGrid& grid);

/// Vertices s-major; faces split each grid quad (a, b, c, d) into (a, b, c) and (a, c, d).
/// Singular points are dropped along with every triangle touching them. Returns
/// the dropped (i_s, i_v) pairs.
std::vector<std::pair<int, int>> write_obj(std::ostream& out, const CurvatureGrid& grid);

void write_singular_listing(std::ostream& out, const CurvatureGrid& grid,
                            const std::vector<std::pair<int, int>>& dropped);

nlohmann::ordered_json to_json(const ClassificationReport& report);
nlohmann::ordered_json to_json(const TheoremRecord& record);
nlohmann::ordered_json to_json(const VerifyReport& report);

void write_verify_csv(std::ostream& out, const VerifyReport& report);

/// Writes through a temporary file so a failed run leaves no partial output. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace rulekit
