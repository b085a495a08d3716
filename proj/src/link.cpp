#include "feclab/link.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace feclab {

std::string channel_name(const ChannelModel& ch) {
  if (const auto* awgn = std::get_if<Awgn>(&ch)) {
    return awgn->convention == SnrConvention::EsN0 ? "awgn" : "awgn_ebn0";
  }
  return "bsc";
}

void validate_q_levels(int q) {
  if (q < 2 || q > kMaxQuantLevels || !std::has_single_bit(static_cast<unsigned>(q))) {
    throw std::invalid_argument("quantizer: Q must be a power of two in [2, 256], got " +
                                std::to_string(q));
  }
}

Bits bernoulli_bits(std::size_t count, double poz, RandomStream& rng) {
  if (!(poz >= 0.0 && poz <= 1.0)) {
    throw std::invalid_argument("bernoulli_bits: poz must lie in [0, 1]");
  }
  Bits bits(count);
  for (auto& b : bits) b = rng.uniform() < poz ? 0 : 1;
  return bits;
}

Samples bpsk_modulate(std::span<const std::uint8_t> bits) {
  Samples out(bits.size());
  std::transform(bits.begin(), bits.end(), out.begin(),
                 [](std::uint8_t b) { return (b & 1U) ? -1.0 : 1.0; });
  return out;
}

double awgn_sigma(double snr_db, double code_rate) {
  if (!(code_rate > 0.0 && code_rate <= 1.0)) {
    throw std::invalid_argument("awgn: code rate must lie in (0, 1]");
  }
  if (!std::isfinite(snr_db)) throw std::invalid_argument("awgn: SNR must be finite");
  return std::sqrt(1.0 / (2.0 * code_rate * std::pow(10.0, snr_db / 10.0)));
}

double awgn_sigma(const Awgn& ch) {
  // Es/N0 of a unit-energy symbol is Eb/N0 at rate 1.
  if (ch.convention == SnrConvention::EsN0) {
    awgn_sigma(ch.snr_db, ch.code_rate);  // validates the rate
    return awgn_sigma(ch.snr_db, 1.0);
  }
  return awgn_sigma(ch.snr_db, ch.code_rate);
}

namespace {

Samples add_noise(std::span<const double> samples, double sigma, RandomStream& rng) {
  Samples out(samples.begin(), samples.end());
  for (auto& x : out) x += sigma * rng.normal();
  return out;
}

}  // namespace

Samples awgn_apply(std::span<const double> samples, double snr_db, double code_rate,
                   RandomStream& rng) {
  return add_noise(samples, awgn_sigma(snr_db, code_rate), rng);
}

Samples awgn_apply(std::span<const double> samples, const Awgn& ch, RandomStream& rng) {
  return add_noise(samples, awgn_sigma(ch), rng);
}

std::uint8_t quantize(double sample, int q) {
  validate_q_levels(q);
  double t = std::clamp((sample + 1.0) / 2.0, 0.0, 1.0);
  auto level = static_cast<int>(std::floor(t * q));
  return static_cast<std::uint8_t>(std::min(level, q - 1));
}

Levels quantize(std::span<const double> samples, int q) {
  validate_q_levels(q);
  Levels out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double t = std::clamp((samples[i] + 1.0) / 2.0, 0.0, 1.0);
    out[i] = static_cast<std::uint8_t>(std::min(static_cast<int>(std::floor(t * q)), q - 1));
  }
  return out;
}

Bits bsc_apply(std::span<const std::uint8_t> bits, double p, RandomStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bsc: p must lie in [0, 1]");
  Bits out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((bits[i] & 1U) ^ (rng.uniform() < p ? 1U : 0U));
  }
  return out;
}

Levels hard_levels(std::span<const std::uint8_t> bits) {
  Levels out(bits.size());
  std::transform(bits.begin(), bits.end(), out.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>((b & 1U) ^ 1U); });
  return out;
}

}  // namespace feclab
