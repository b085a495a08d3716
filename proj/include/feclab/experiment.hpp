#pragma once

#include <cstdint>

#include "feclab/codec.hpp"
#include "feclab/link.hpp"
#include "feclab/viterbi.hpp"

namespace feclab {

struct ExperimentPoint {
  GeneratorSet code{2, {05, 07}};
  ChannelModel channel = Awgn{0.0, 0.5};
  double poz = 0.5;
  TieBreakPolicy policy = TieBreakPolicy::ZeroOriented;
  int q_levels = 2;
  int frame_len = 1024;
  std::uint64_t min_info_bits = 1'000'000;
  std::uint64_t min_bit_errors = 100;
  std::uint64_t master_seed = 1;

  friend bool operator==(const ExperimentPoint&, const ExperimentPoint&) = default;
};

// Throws std::invalid_argument for an inconsistent point.
void validate(const ExperimentPoint& pt);

// Frames are never longer than this many multiples of the bit budget.
inline constexpr std::uint64_t kFrameCapFactor = 10;
std::uint64_t frame_cap(const ExperimentPoint& pt);

struct PointResult {
  ExperimentPoint point;
  std::uint64_t info_bits = 0;
  std::uint64_t bit_errors = 0;
  double ber = 0.0;
  std::uint64_t compares = 0;
  std::uint64_t equal_compares = 0;
  double equality_fraction = 0.0;

  // Per-frame second moments for standard errors. Not part of the CSV.
  std::uint64_t frames = 0;
  double frame_errors_sq = 0.0;
  double frame_equals_sq = 0.0;
};

// Standard error of ber / equality_fraction estimated from frame-to-frame
// variation (errors cluster inside frames, so a binomial estimate is too
// optimistic).
double ber_stderr(const PointResult& r);
double equality_stderr(const PointResult& r);

struct FrameStats {
  std::uint64_t bit_errors = 0;
  std::uint64_t compares = 0;
  std::uint64_t equal_compares = 0;
};

// Frame `index` of a point: source, channel and tie-break substreams are all
// derived from (master_seed, index), so any frame can be replayed alone.
FrameStats simulate_frame(const ExperimentPoint& pt, ViterbiDecoder& decoder,
                          std::uint64_t index);

// Reference implementation: one frame at a time.
PointResult run_point_serial(const ExperimentPoint& pt);

// Simulates frames in OpenMP batches and folds them in index order, so the
// stopping decision and every counter match run_point_serial exactly.
PointResult run_point(const ExperimentPoint& pt);

}  // namespace feclab
