#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "feclab/codec.hpp"
#include "feclab/random_stream.hpp"

namespace feclab {

using Levels = std::vector<std::uint8_t>;
using Samples = std::vector<double>;

inline constexpr int kMaxQuantLevels = 256;

// Which energy the dB figure refers to. EsN0 is per coded BPSK symbol;
// EbN0 spreads the symbol energy over 1/code_rate symbols per info bit.
enum class SnrConvention { EsN0, EbN0 };

struct Awgn {
  double snr_db = 0.0;
  double code_rate = 0.5;
  SnrConvention convention = SnrConvention::EsN0;

  friend bool operator==(const Awgn&, const Awgn&) = default;
};

struct Bsc {
  double p = 0.0;

  friend bool operator==(const Bsc&, const Bsc&) = default;
};

using ChannelModel = std::variant<Awgn, Bsc>;

// "awgn" (Es/N0), "awgn_ebn0" or "bsc"
std::string channel_name(const ChannelModel& ch);

// Throws std::invalid_argument unless Q is a power of two in [2, 256].
void validate_q_levels(int q);

Bits bernoulli_bits(std::size_t count, double poz, RandomStream& rng);

// bit 0 -> +1.0, bit 1 -> -1.0
Samples bpsk_modulate(std::span<const std::uint8_t> bits);

// Noise deviation for unit-energy symbols with snr_db read as Eb/N0:
// sqrt(1 / (2 * rate * 10^(snr_db/10))).
double awgn_sigma(double snr_db, double code_rate);
double awgn_sigma(const Awgn& ch);

Samples awgn_apply(std::span<const double> samples, double snr_db, double code_rate,
                   RandomStream& rng);
Samples awgn_apply(std::span<const double> samples, const Awgn& ch, RandomStream& rng);

// Uniform quantizer over [-1, +1]; level Q-1 is the most confident 0.
std::uint8_t quantize(double sample, int q);
Levels quantize(std::span<const double> samples, int q);

Bits bsc_apply(std::span<const std::uint8_t> bits, double p, RandomStream& rng);

// Hard-decision levels at Q=2: bit 0 -> level 1, bit 1 -> level 0.
Levels hard_levels(std::span<const std::uint8_t> bits);

}  // namespace feclab
