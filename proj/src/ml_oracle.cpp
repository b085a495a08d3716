#include "feclab/ml_oracle.hpp"

#include <limits>
#include <stdexcept>

#include "feclab/link.hpp"

namespace feclab {

Bits unpack_message(std::uint32_t packed, int length) {
  Bits bits(length);
  for (int t = 0; t < length; ++t) bits[t] = static_cast<std::uint8_t>((packed >> t) & 1U);
  return bits;
}

std::uint32_t pack_message(std::span<const std::uint8_t> bits) {
  std::uint32_t packed = 0;
  for (std::size_t t = 0; t < bits.size(); ++t) packed |= static_cast<std::uint32_t>(bits[t] & 1U) << t;
  return packed;
}

MlResult ml_decode_bruteforce(std::span<const std::uint8_t> received, const GeneratorSet& gs,
                              int q, int length, bool terminated) {
  if (length < 1 || length > kMaxBruteForceLength) {
    throw std::invalid_argument("ml_decode_bruteforce: L must be in [1, 16]");
  }
  validate_q_levels(q);
  const std::size_t expected =
      static_cast<std::size_t>(gs.outputs()) * (length + (terminated ? gs.memory() : 0));
  if (received.size() != expected) {
    throw std::invalid_argument("ml_decode_bruteforce: received length mismatch");
  }

  const auto top = static_cast<std::uint64_t>(q - 1);
  MlResult best;
  best.metric = std::numeric_limits<std::uint64_t>::max();
  for (std::uint32_t packed = 0; packed < (1U << length); ++packed) {
    Bits msg = unpack_message(packed, length);
    Bits code = encode(msg, gs, terminated);
    std::uint64_t metric = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
      metric += code[i] ? received[i] : top - received[i];
    }
    if (metric < best.metric) {
      best.metric = metric;
      best.bits = std::move(msg);
      best.argmin.clear();
    }
    if (metric == best.metric) best.argmin.push_back(packed);
  }
  best.argmin_count = best.argmin.size();
  return best;
}

}  // namespace feclab
