#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "feclab/experiment.hpp"

namespace feclab {

enum class ChannelKind { Awgn, Bsc };

// Cartesian grid. Expansion order (outermost first): code, channel
// parameter, Q, PoZ, policy.
struct SweepGrid {
  std::vector<GeneratorSet> codes;
  ChannelKind channel = ChannelKind::Awgn;
  std::vector<double> channel_params;  // SNR in dB (AWGN) or flip probability (BSC)
  SnrConvention snr_convention = SnrConvention::EsN0;
  std::vector<double> poz;
  std::vector<TieBreakPolicy> policies;
  std::vector<int> q_levels;
  int frame_len = 1024;
  std::uint64_t min_info_bits = 1'000'000;
  std::uint64_t min_bit_errors = 100;
  std::uint64_t master_seed = 1;
};

// Seed for one grid point. The policy is deliberately excluded so the three
// tie-break rules see identical source and channel realizations.
std::uint64_t point_seed(std::uint64_t master_seed, const GeneratorSet& code,
                         const ChannelModel& channel, double poz, int q_levels);

std::vector<ExperimentPoint> expand_grid(const SweepGrid& grid);

// Points in parallel (one OpenMP task per point); results in grid order.
std::vector<PointResult> run_sweep(const std::vector<ExperimentPoint>& points);
std::vector<PointResult> run_sweep_serial(const std::vector<ExperimentPoint>& points);

// Named presets: fig3, fig4, fig5, fig6, fig7. Budgets and seed are taken
// from `base`; everything else is fixed by the preset.
std::vector<std::string_view> figure_names();
SweepGrid figure_preset(std::string_view name, const SweepGrid& base);

// The five rate-1/2 codes of the BSC surface preset, m = 2..6.
std::vector<GeneratorSet> standard_half_rate_codes();

// "a:b:step" inclusive, values snapped to 1e-9.
std::vector<double> parse_range(std::string_view text);
// Comma list whose items are numbers or a:b:step ranges.
std::vector<double> parse_value_list(std::string_view text);

}  // namespace feclab
