#include "feclab/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace feclab {

void validate(const ExperimentPoint& pt) {
  validate_q_levels(pt.q_levels);
  if (!(pt.poz >= 0.0 && pt.poz <= 1.0)) throw std::invalid_argument("point: poz must lie in [0, 1]");
  if (pt.frame_len < 1) throw std::invalid_argument("point: frame_len must be >= 1");
  if (pt.min_info_bits < static_cast<std::uint64_t>(pt.frame_len)) {
    throw std::invalid_argument("point: min_info_bits must be >= frame_len");
  }
  if (const auto* awgn = std::get_if<Awgn>(&pt.channel)) {
    awgn_sigma(*awgn);
    if (std::abs(awgn->code_rate * pt.code.outputs() - 1.0) > 1e-12) {
      throw std::invalid_argument("point: AWGN code rate does not match the code");
    }
  } else {
    const auto& bsc = std::get<Bsc>(pt.channel);
    if (!(bsc.p >= 0.0 && bsc.p <= 1.0)) throw std::invalid_argument("point: bsc p must lie in [0, 1]");
    if (pt.q_levels != 2) throw std::invalid_argument("point: the BSC feeds a hard-input decoder (Q=2)");
  }
}

std::uint64_t frame_cap(const ExperimentPoint& pt) {
  const auto len = static_cast<std::uint64_t>(pt.frame_len);
  return (kFrameCapFactor * pt.min_info_bits + len - 1) / len;
}

double ber_stderr(const PointResult& r) {
  if (r.frames < 2 || r.info_bits == 0) return 0.0;
  const double f = static_cast<double>(r.frames);
  const double len = static_cast<double>(r.info_bits) / f;
  const double mean = static_cast<double>(r.bit_errors) / f;
  const double var = std::max(0.0, (r.frame_errors_sq - f * mean * mean) / (f - 1.0));
  return std::sqrt(var / f) / len;
}

double equality_stderr(const PointResult& r) {
  if (r.frames < 2 || r.compares == 0) return 0.0;
  const double f = static_cast<double>(r.frames);
  const double per_frame = static_cast<double>(r.compares) / f;
  const double mean = static_cast<double>(r.equal_compares) / f;
  const double var = std::max(0.0, (r.frame_equals_sq - f * mean * mean) / (f - 1.0));
  return std::sqrt(var / f) / per_frame;
}

FrameStats simulate_frame(const ExperimentPoint& pt, ViterbiDecoder& decoder,
                          std::uint64_t index) {
  const std::uint64_t seed = mix_seed(pt.master_seed, index);
  RandomStream source(seed, StreamLabel::Source);
  RandomStream channel(seed, StreamLabel::Channel);
  RandomStream ties(seed, StreamLabel::TieBreak);

  Bits message = bernoulli_bits(static_cast<std::size_t>(pt.frame_len), pt.poz, source);
  Bits codeword = encode(message, pt.code, true);

  Levels levels;
  if (const auto* awgn = std::get_if<Awgn>(&pt.channel)) {
    Samples rx = awgn_apply(bpsk_modulate(codeword), *awgn, channel);
    levels = quantize(rx, pt.q_levels);
  } else {
    levels = hard_levels(bsc_apply(codeword, std::get<Bsc>(pt.channel).p, channel));
  }

  DecodeOutcome out = decoder.decode(levels, ties);
  FrameStats stats;
  for (std::size_t i = 0; i < message.size(); ++i) stats.bit_errors += message[i] != out.bits[i];
  stats.compares = out.compare_count;
  stats.equal_compares = out.equal_count;
  return stats;
}

namespace {

DecoderConfig decoder_config(const ExperimentPoint& pt) {
  return DecoderConfig{pt.q_levels, pt.policy, true, true};
}

// Returns true once the stopping rule is satisfied.
bool fold(PointResult& r, const FrameStats& s, std::uint64_t cap) {
  const auto e = static_cast<double>(s.bit_errors);
  const auto q = static_cast<double>(s.equal_compares);
  r.frames += 1;
  r.info_bits += static_cast<std::uint64_t>(r.point.frame_len);
  r.bit_errors += s.bit_errors;
  r.compares += s.compares;
  r.equal_compares += s.equal_compares;
  r.frame_errors_sq += e * e;
  r.frame_equals_sq += q * q;
  if (r.info_bits < r.point.min_info_bits) return false;
  return r.bit_errors >= r.point.min_bit_errors || r.frames >= cap;
}

void finish(PointResult& r) {
  r.ber = r.info_bits ? static_cast<double>(r.bit_errors) / static_cast<double>(r.info_bits) : 0.0;
  r.equality_fraction =
      r.compares ? static_cast<double>(r.equal_compares) / static_cast<double>(r.compares) : 0.0;
}

}  // namespace

PointResult run_point_serial(const ExperimentPoint& pt) {
  validate(pt);
  const Trellis trellis = build_trellis(pt.code);
  ViterbiDecoder decoder(trellis, decoder_config(pt));
  const std::uint64_t cap = frame_cap(pt);

  PointResult r;
  r.point = pt;
  for (std::uint64_t i = 0;; ++i) {
    if (fold(r, simulate_frame(pt, decoder, i), cap)) break;
  }
  finish(r);
  return r;
}

PointResult run_point(const ExperimentPoint& pt) {
  validate(pt);
  const Trellis trellis = build_trellis(pt.code);
  const std::uint64_t cap = frame_cap(pt);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_in_parallel() ? 1 : omp_get_max_threads();
#endif
  // Frames that must run regardless of errors; the first batch covers them.
  const auto len = static_cast<std::uint64_t>(pt.frame_len);
  const std::uint64_t min_frames = (pt.min_info_bits + len - 1) / len;
  const std::uint64_t batch = std::max<std::uint64_t>(16 * threads, 1);

  PointResult r;
  r.point = pt;
  std::vector<FrameStats> stats;
  std::uint64_t next = 0;
  bool done = false;
  while (!done) {
    const std::uint64_t count = std::min(next == 0 ? std::max(batch, min_frames) : batch, cap - next);
    stats.assign(count, FrameStats{});
#pragma omp parallel if (threads > 1) num_threads(threads)
    {
      ViterbiDecoder decoder(trellis, decoder_config(pt));
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
        stats[k] = simulate_frame(pt, decoder, next + static_cast<std::uint64_t>(k));
      }
    }
    for (std::uint64_t k = 0; k < count && !done; ++k) done = fold(r, stats[k], cap);
    next += count;
  }
  finish(r);
  return r;
}

}  // namespace feclab
