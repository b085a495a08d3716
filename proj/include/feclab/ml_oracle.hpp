#pragma once

#include <cstdint>
#include <span>

#include "feclab/codec.hpp"

namespace feclab {

inline constexpr int kMaxBruteForceLength = 16;

struct MlResult {
  Bits bits;                  // first minimum in lexicographic (message-as-integer) order
  std::uint64_t metric = 0;
  std::uint64_t argmin_count = 0;
  std::vector<std::uint32_t> argmin;  // each message packed with bit t at position t
};

// Exhaustive maximum-likelihood decoder: scores every one of the 2^L
// messages by encoding it and summing per-bit soft costs. Shares no code
// with the trellis search.
MlResult ml_decode_bruteforce(std::span<const std::uint8_t> received, const GeneratorSet& gs,
                              int q, int length, bool terminated);

Bits unpack_message(std::uint32_t packed, int length);
std::uint32_t pack_message(std::span<const std::uint8_t> bits);

}  // namespace feclab
