#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace feclab {

using Bits = std::vector<std::uint8_t>;

inline constexpr int kMaxMemory = 12;
inline constexpr int kMaxOutputs = 8;

// Rate-1/n feed-forward convolutional code. Bit i of a polynomial mask taps
// u[t-i], so the newest input bit is the LSB.
class GeneratorSet {
 public:
  GeneratorSet(int memory, std::vector<std::uint32_t> polynomials);

  int memory() const { return memory_; }
  int outputs() const { return static_cast<int>(polys_.size()); }
  const std::vector<std::uint32_t>& polynomials() const { return polys_; }

  // "rate=1/2;memory=2;polys=5,7"
  std::string to_spec() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  int memory_;
  std::vector<std::uint32_t> polys_;
};

GeneratorSet parse_generator_set(std::span<const std::string> octal, int memory);
GeneratorSet parse_code_spec(std::string_view spec);

// State index holds (u[t-m], ..., u[t-1]) with the oldest bit most
// significant. Output symbols carry polynomial j in bit j.
struct Trellis {
  struct Predecessors {
    std::uint32_t upper;  // oldest register bit 0
    std::uint32_t lower;  // oldest register bit 1
  };

  int memory = 0;
  int outputs = 0;
  std::uint32_t num_states = 0;
  std::vector<std::array<std::uint32_t, 2>> next_state;
  std::vector<std::array<std::uint32_t, 2>> output;
  std::vector<Predecessors> predecessors;
};

Trellis build_trellis(const GeneratorSet& gs);

inline int symbol_bit(std::uint32_t symbol, int j) { return (symbol >> j) & 1U; }

// Output is n*(L+m) bits when terminated (m zero tail bits appended), n*L
// otherwise; first polynomial first within each symbol.
Bits encode(std::span<const std::uint8_t> message, const GeneratorSet& gs, bool terminated);

}  // namespace feclab
