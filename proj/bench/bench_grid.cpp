// Serial reference against the OpenMP grid kernel on the shipped corpus.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>

#include <algorithm>

#include "rulekit/grid.hpp"

using namespace rulekit;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path spec_path = argc > 1 ? argv[1] : RULEKIT_CORPUS_DIR "/twisted.curve";
  const int n = argc > 2 ? std::stoi(argv[2]) : 201;
  const DualCurveSpec spec = load_spec(spec_path);
  GridConfig cfg;
  cfg.s_count = n;
  cfg.v_count = n;

  std::printf("spec %s, grid %d x %d, %d threads\n", spec_path.filename().string().c_str(), n, n, thread_limit());
  for (IndicatrixKind kind : kAllKinds) {
    CurvatureGrid a, b;
    const double ts = best_of(3, [&] { a = serial::evaluate_grid(spec, kind, cfg); });
    const double tp = best_of(3, [&] { b = evaluate_grid(spec, kind, cfg); });
    bool same = a.samples.size() == b.samples.size();
    for (std::size_t i = 0; same && i < a.samples.size(); ++i) {
      const auto& p = a.samples[i];
      const auto& q = b.samples[i];
      same = p.singular == q.singular && (p.K_oracle == q.K_oracle || (p.K_oracle != p.K_oracle && q.K_oracle != q.K_oracle));
    }
    std::printf("%-17s serial %8.4f s  parallel %8.4f s  speedup %5.2fx  identical %s\n", kind_name(kind), ts, tp,
                ts / tp, same ? "yes" : "no");
  }
  return 0;
}
