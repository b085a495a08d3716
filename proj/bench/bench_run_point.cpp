// Serial reference vs OpenMP paths: one large point (frame batches) and a
// small grid (one task per point). Also reports raw decoder throughput.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "feclab/sweep.hpp"

using namespace feclab;
using h_clock = std::chrono::steady_clock;

namespace {

template <typename F>
double seconds(F&& f) {
  auto t0 = h_clock::now();
  f();
  return std::chrono::duration<double>(h_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t bits = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2'000'000;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << "  info bits per point: " << bits << "\n\n";
  std::cout << std::fixed << std::setprecision(3);

  for (const auto& code : {GeneratorSet(2, {05, 07}), GeneratorSet(6, {0133, 0171})}) {
    ExperimentPoint pt;
    pt.code = code;
    pt.channel = Awgn{1.0, 0.5};
    pt.q_levels = 8;
    pt.min_info_bits = bits;
    pt.min_bit_errors = 0;

    PointResult a, b;
    const double ts = seconds([&] { a = run_point_serial(pt); });
    const double tp = seconds([&] { b = run_point(pt); });
    const double acs = static_cast<double>(a.compares) / ts;
    std::cout << code.to_spec() << "\n"
              << "  run_point_serial " << ts << " s   (" << acs / 1e6 << " M ACS/s)\n"
              << "  run_point        " << tp << " s   speedup " << ts / tp
              << (a.bit_errors == b.bit_errors ? "" : "   MISMATCH") << "\n";
  }

  SweepGrid g;
  g.codes = {GeneratorSet(2, {05, 07}), GeneratorSet(4, {023, 035})};
  g.channel_params = parse_range("-1:3:1");
  g.poz = {0.0, 1.0};
  g.policies = {TieBreakPolicy::Random, TieBreakPolicy::ZeroOriented, TieBreakPolicy::OneOriented};
  g.q_levels = {2};
  g.min_info_bits = bits / 10;
  g.min_bit_errors = 0;
  auto points = expand_grid(g);

  std::vector<PointResult> s, p;
  const double ts = seconds([&] { s = run_sweep_serial(points); });
  const double tp = seconds([&] { p = run_sweep(points); });
  bool same = true;
  for (std::size_t i = 0; i < s.size(); ++i) same = same && s[i].bit_errors == p[i].bit_errors;
  std::cout << "\nsweep of " << points.size() << " points\n"
            << "  run_sweep_serial " << ts << " s\n"
            << "  run_sweep        " << tp << " s   speedup " << ts / tp << (same ? "" : "   MISMATCH")
            << "\n";
  return same ? 0 : 1;
}
