#include "feclab/random_stream.hpp"

#include <stdexcept>

namespace feclab {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined word
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t master_seed, StreamLabel label)
    : engine_(mix_seed(master_seed, static_cast<std::uint64_t>(label))) {}

std::uint8_t RandomStream::next_bit() {
  if (bits_left_ == 0) {
    bit_buffer_ = engine_();
    bits_left_ = 64;
  }
  auto bit = static_cast<std::uint8_t>(bit_buffer_ & 1U);
  bit_buffer_ >>= 1;
  --bits_left_;
  ++bits_consumed_;
  return bit;
}

std::uint64_t RandomStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RandomStream::below: n must be positive");
  std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
  return dist(engine_);
}

}  // namespace feclab
