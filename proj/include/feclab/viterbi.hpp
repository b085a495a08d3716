#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "feclab/codec.hpp"
#include "feclab/link.hpp"
#include "feclab/random_stream.hpp"

namespace feclab {

// How the ACS unit resolves Mu == Ml. ZeroOriented keeps the upper
// predecessor (oldest bit 0), OneOriented the lower one, Random tosses one
// fair bit from the tie-break stream (0 keeps upper).
enum class TieBreakPolicy { Random, ZeroOriented, OneOriented };

std::string_view policy_name(TieBreakPolicy p);  // "random" | "zero" | "one"
TieBreakPolicy parse_policy(std::string_view name);

struct DecoderConfig {
  int q_levels = 2;
  TieBreakPolicy policy = TieBreakPolicy::ZeroOriented;
  bool terminated = true;
  // Test knob: disabling is only safe for frames short enough not to overflow.
  bool normalize = true;
};

using Metric = std::uint32_t;

struct DecodeOutcome {
  Bits bits;
  std::uint64_t final_metric = 0;
  std::uint64_t compare_count = 0;
  std::uint64_t equal_count = 0;
};

// Per-bit cost is (Q-1)-level for an expected 0 and level for an expected 1.
std::uint32_t branch_metric(std::uint32_t expected_symbol, std::span<const std::uint8_t> received,
                            int q);

struct AcsCounts {
  std::uint64_t compares = 0;
  std::uint64_t equals = 0;
};

// One trellis step. survivors[s] is 0 when the upper predecessor wins, 1 for
// the lower one. `received` holds the n levels of this step's symbol.
AcsCounts acs_step(std::span<const Metric> prev, std::span<Metric> next,
                   std::span<std::uint8_t> survivors, std::span<const std::uint8_t> received,
                   const Trellis& trellis, int q, TieBreakPolicy policy, RandomStream& tie_rng);

// Subtracts the minimum; returns the amount subtracted.
Metric normalize_metrics(std::span<Metric> metrics);

// Reusable decoder over one trellis. Holds per-frame scratch, so an instance
// must not be shared between threads; the trellis may be.
class ViterbiDecoder {
 public:
  ViterbiDecoder(const Trellis& trellis, DecoderConfig cfg);

  DecodeOutcome decode(std::span<const std::uint8_t> received, RandomStream& tie_rng);

  const DecoderConfig& config() const { return cfg_; }
  const Trellis& trellis() const { return trellis_; }

 private:
  const Trellis& trellis_;
  DecoderConfig cfg_;
  std::vector<Metric> metrics_;
  std::vector<Metric> scratch_;
  std::vector<std::uint8_t> survivors_;
};

DecodeOutcome decode_block(std::span<const std::uint8_t> received, const Trellis& trellis,
                           const DecoderConfig& cfg, RandomStream& tie_rng);

// Sum of branch metrics along the encoded path of `message` starting at
// state 0. If received covers m extra steps the path is zero-tail terminated.
std::uint64_t recompute_path_metric(std::span<const std::uint8_t> message,
                                    std::span<const std::uint8_t> received,
                                    const Trellis& trellis, int q);

}  // namespace feclab
