#pragma once

#include <cstdint>
#include <random>

namespace feclab {

enum class StreamLabel : std::uint64_t { Source = 1, Channel = 2, TieBreak = 3 };

// Stateless 64-bit mixer used for seed derivation.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Deterministic generator for one (seed, label) substream. Distinct labels
// give independent sequences from the same master seed.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, StreamLabel label);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() { return gauss_(engine_); }

  // One fair bit; consecutive calls drain a buffered 64-bit word.
  std::uint8_t next_bit();

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  std::uint64_t bits_consumed() const { return bits_consumed_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
  std::uint64_t bits_consumed_ = 0;
};

}  // namespace feclab
