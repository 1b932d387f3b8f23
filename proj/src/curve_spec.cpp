#include "rulekit/curve_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "rulekit/errors.hpp"
#include "rulekit/frenet.hpp"

namespace rulekit {

DualVec3 DualCurveSpec::eval(double s) const {
  auto v = [&](const std::array<Expr, 3>& e) {
    return Vec3d{rulekit::eval(e[0], s, constants), rulekit::eval(e[1], s, constants),
                 rulekit::eval(e[2], s, constants)};
  };
  return {v(alpha), v(alpha_star)};
}

DualVecJet DualCurveSpec::eval_jet(double s) const {
  auto v = [&](const std::array<Expr, 3>& e) {
    return Vec3j{rulekit::eval_jet(e[0], s, Jet::kOrder, constants), rulekit::eval_jet(e[1], s, Jet::kOrder, constants),
                 rulekit::eval_jet(e[2], s, Jet::kOrder, constants)};
  };
  return {v(alpha), v(alpha_star)};
}

DualCurveSpec DualCurveSpec::reparametrized(double factor) const {
  DualCurveSpec out = *this;
  const Expr scaled = Expr::binary(Expr::Kind::Mul, Expr::number(factor), Expr::param());
  for (int i = 0; i < 3; ++i) {
    out.alpha[i] = substitute(alpha[i], scaled);
    out.alpha_star[i] = substitute(alpha_star[i], scaled);
  }
  out.domain = {domain.lo / factor, domain.hi / factor};
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view strip_quotes(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

double parse_number(std::string_view text, int line) {
  const std::string str(text);
  char* end = nullptr;
  const double value = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size() || !std::isfinite(value)) {
    throw SpecError(line, "expected a finite number, got '" + str + "'");
  }
  return value;
}

const std::array<std::string, 6> kComponentKeys = {"alpha_x",     "alpha_y",     "alpha_z",
                                                    "alphastar_x", "alphastar_y", "alphastar_z"};

}  // namespace

DualCurveSpec parse_spec(std::string_view text) {
  struct Entry {
    std::string value;
    int line;
  };
  std::map<std::string, Entry> components;
  std::optional<Entry> domain;
  Constants constants;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SpecError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = strip_quotes(trim(line.substr(eq + 1)));
    if (value.empty()) throw SpecError(line_no, "empty value for '" + key + "'");

    if (key.rfind("const.", 0) == 0) {
      const std::string name = key.substr(6);
      if (name.empty() || name == "s" || name == "pi") throw SpecError(line_no, "invalid constant name '" + name + "'");
      if (constants.contains(name)) throw SpecError(line_no, "duplicate constant '" + name + "'");
      constants[name] = parse_number(value, line_no);
    } else if (key == "domain") {
      if (domain) throw SpecError(line_no, "duplicate key 'domain'");
      domain = Entry{std::string(value), line_no};
    } else if (std::find(kComponentKeys.begin(), kComponentKeys.end(), key) != kComponentKeys.end()) {
      if (components.contains(key)) throw SpecError(line_no, "duplicate key '" + key + "'");
      components[key] = Entry{std::string(value), line_no};
    } else {
      throw SpecError(line_no, "unknown key '" + key + "'");
    }
  }

  std::set<std::string> known;
  for (const auto& [name, value] : constants) known.insert(name);

  auto parse_at = [&](const std::string& expr_text, int line) {
    try {
      return parse(expr_text, &known);
    } catch (const SyntaxError& e) {
      throw SpecError(line, e.what());
    } catch (const UnknownIdentifier& e) {
      throw SpecError(line, e.what());
    }
  };

  DualCurveSpec spec;
  spec.constants = constants;
  for (std::size_t i = 0; i < kComponentKeys.size(); ++i) {
    const auto it = components.find(kComponentKeys[i]);
    if (it == components.end()) throw SpecError(0, "missing key '" + kComponentKeys[i] + "'");
    Expr e = parse_at(it->second.value, it->second.line);
    if (i < 3) {
      spec.alpha[i] = e;
    } else {
      spec.alpha_star[i - 3] = e;
    }
  }

  if (!domain) throw SpecError(0, "missing key 'domain'");
  const auto comma = domain->value.find(',');
  if (comma == std::string::npos) throw SpecError(domain->line, "domain must be 's0, s1'");
  // Domain bounds may use constants and pi but not s.
  auto bound = [&](std::string_view t) {
    const Expr e = parse_at(std::string(trim(t)), domain->line);
    const double v = rulekit::eval(e, std::numeric_limits<double>::quiet_NaN(), constants);
    if (!std::isfinite(v)) throw SpecError(domain->line, "domain bounds must be finite and independent of s");
    return v;
  };
  spec.domain = {bound(std::string_view(domain->value).substr(0, comma)),
                 bound(std::string_view(domain->value).substr(comma + 1))};
  if (!(spec.domain.lo < spec.domain.hi)) throw SpecError(domain->line, "domain must satisfy s0 < s1");
  return spec;
}

DualCurveSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

void set_constant(DualCurveSpec& spec, const std::string& name, double value) {
  auto it = spec.constants.find(name);
  if (it == spec.constants.end()) throw SpecError(0, "constant '" + name + "' is not declared by the spec");
  it->second = value;
}

SpecValidation validate_spec(const DualCurveSpec& spec, int n_samples) {
  SpecValidation report;
  report.samples = std::max(n_samples, 2);
  report.min_real_curvature = std::numeric_limits<double>::infinity();
  for (int i = 0; i < report.samples; ++i) {
    const double s = spec.domain.lo + (spec.domain.hi - spec.domain.lo) * i / (report.samples - 1);
    try {
      const DualVec3 a = spec.eval(s);
      report.max_norm_defect = std::max(report.max_norm_defect, std::fabs(norm(a.real) - 1.0));
      report.max_moment_defect = std::max(report.max_moment_defect, std::fabs(dot(a.real, a.dual)));
    } catch (const DomainError& e) {
      report.failures.push_back("s = " + std::to_string(s) + ": " + e.what());
      continue;
    }
    try {
      const DualFrenetFrame f = frame_at(spec, s);
      report.min_real_curvature = std::min(report.min_real_curvature, std::fabs(f.kappa.real));
    } catch (const NumericalError& e) {
      report.curvature_defined = false;
      report.min_real_curvature = 0.0;
      report.curvature_issues.push_back("s = " + std::to_string(s) + ": " + e.what());
    }
  }
  if (report.max_norm_defect > kSphereTolerance) {
    report.failures.push_back("alpha leaves the unit sphere: max | ||alpha|| - 1 | = " +
                              std::to_string(report.max_norm_defect));
  }
  if (report.max_moment_defect > kSphereTolerance) {
    report.failures.push_back("alpha* is not orthogonal to alpha: max |<alpha, alpha*>| = " +
                              std::to_string(report.max_moment_defect));
  }
  report.pass = report.failures.empty();
  return report;
}

}  // namespace rulekit
