#include "feclab/viterbi.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace feclab {

std::string_view policy_name(TieBreakPolicy p) {
  switch (p) {
    case TieBreakPolicy::Random: return "random";
    case TieBreakPolicy::ZeroOriented: return "zero";
    case TieBreakPolicy::OneOriented: return "one";
  }
  return "?";
}

TieBreakPolicy parse_policy(std::string_view name) {
  if (name == "random") return TieBreakPolicy::Random;
  if (name == "zero") return TieBreakPolicy::ZeroOriented;
  if (name == "one") return TieBreakPolicy::OneOriented;
  throw std::invalid_argument("unknown tie-break policy '" + std::string(name) +
                              "' (expected random|zero|one)");
}

std::uint32_t branch_metric(std::uint32_t expected_symbol, std::span<const std::uint8_t> received,
                            int q) {
  const auto top = static_cast<std::uint32_t>(q - 1);
  std::uint32_t total = 0;
  for (std::size_t j = 0; j < received.size(); ++j) {
    std::uint32_t level = received[j];
    if (level > top) {
      throw std::out_of_range("branch_metric: level " + std::to_string(level) +
                              " outside [0, " + std::to_string(top) + "]");
    }
    total += symbol_bit(expected_symbol, static_cast<int>(j)) ? level : top - level;
  }
  return total;
}

namespace {

// Branch metric for every possible n-bit symbol at one step.
void fill_symbol_costs(std::span<const std::uint8_t> received, int q,
                       std::array<std::uint32_t, 1U << kMaxOutputs>& costs) {
  const auto n = static_cast<int>(received.size());
  const auto top = static_cast<std::uint32_t>(q - 1);
  for (std::uint32_t sym = 0; sym < (1U << n); ++sym) {
    std::uint32_t total = 0;
    for (int j = 0; j < n; ++j) {
      std::uint32_t level = received[j];
      total += symbol_bit(sym, j) ? level : top - level;
    }
    costs[sym] = total;
  }
}

}  // namespace

AcsCounts acs_step(std::span<const Metric> prev, std::span<Metric> next,
                   std::span<std::uint8_t> survivors, std::span<const std::uint8_t> received,
                   const Trellis& trellis, int q, TieBreakPolicy policy, RandomStream& tie_rng) {
  std::array<std::uint32_t, 1U << kMaxOutputs> costs{};
  fill_symbol_costs(received, q, costs);

  AcsCounts counts;
  const std::uint32_t S = trellis.num_states;
  for (std::uint32_t s = 0; s < S; ++s) {
    const auto [upper, lower] = trellis.predecessors[s];
    const std::uint32_t bit = s & 1U;
    const Metric mu = prev[upper] + costs[trellis.output[upper][bit]];
    const Metric ml = prev[lower] + costs[trellis.output[lower][bit]];
    std::uint8_t keep_lower;
    if (mu < ml) {
      keep_lower = 0;
    } else if (ml < mu) {
      keep_lower = 1;
    } else {
      ++counts.equals;
      switch (policy) {
        case TieBreakPolicy::ZeroOriented: keep_lower = 0; break;
        case TieBreakPolicy::OneOriented: keep_lower = 1; break;
        default: keep_lower = tie_rng.next_bit(); break;
      }
    }
    next[s] = keep_lower ? ml : mu;
    survivors[s] = keep_lower;
  }
  counts.compares = S;
  return counts;
}

Metric normalize_metrics(std::span<Metric> metrics) {
  if (metrics.empty()) return 0;
  const Metric lo = *std::min_element(metrics.begin(), metrics.end());
  for (auto& m : metrics) m -= lo;
  return lo;
}

ViterbiDecoder::ViterbiDecoder(const Trellis& trellis, DecoderConfig cfg)
    : trellis_(trellis), cfg_(cfg) {
  validate_q_levels(cfg_.q_levels);
  metrics_.resize(trellis_.num_states);
  scratch_.resize(trellis_.num_states);
}

DecodeOutcome ViterbiDecoder::decode(std::span<const std::uint8_t> received,
                                     RandomStream& tie_rng) {
  const auto n = static_cast<std::size_t>(trellis_.outputs);
  const auto m = static_cast<std::size_t>(trellis_.memory);
  const std::uint32_t S = trellis_.num_states;
  if (received.empty() || received.size() % n != 0) {
    throw std::invalid_argument("decode: received length " + std::to_string(received.size()) +
                                " is not a positive multiple of " + std::to_string(n));
  }
  const std::size_t steps = received.size() / n;
  if (cfg_.terminated && steps < m + 1) {
    throw std::invalid_argument("decode: terminated frame needs at least " +
                                std::to_string(m + 1) + " symbols");
  }

  const Metric penalty =
      static_cast<Metric>(n * static_cast<std::size_t>(cfg_.q_levels - 1) * (m + 1) + 1);
  std::fill(metrics_.begin(), metrics_.end(), penalty);
  metrics_[0] = 0;
  survivors_.resize(steps * S);

  DecodeOutcome out;
  std::uint64_t offset = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    auto counts = acs_step(metrics_, scratch_, std::span(survivors_).subspan(t * S, S),
                           received.subspan(t * n, n), trellis_, cfg_.q_levels, cfg_.policy,
                           tie_rng);
    out.compare_count += counts.compares;
    out.equal_count += counts.equals;
    std::swap(metrics_, scratch_);
    if (cfg_.normalize) offset += normalize_metrics(metrics_);
  }

  std::uint32_t state = 0;
  if (!cfg_.terminated) {
    const Metric best = *std::min_element(metrics_.begin(), metrics_.end());
    std::vector<std::uint32_t> tied;
    for (std::uint32_t s = 0; s < S; ++s) {
      if (metrics_[s] == best) tied.push_back(s);
    }
    switch (cfg_.policy) {
      case TieBreakPolicy::ZeroOriented: state = tied.front(); break;
      case TieBreakPolicy::OneOriented: state = tied.back(); break;
      default: state = tied[tie_rng.below(tied.size())]; break;
    }
  }
  out.final_metric = offset + metrics_[state];

  Bits path(steps);
  for (std::size_t t = steps; t-- > 0;) {
    path[t] = static_cast<std::uint8_t>(state & 1U);
    const auto& pred = trellis_.predecessors[state];
    state = survivors_[t * S + state] ? pred.lower : pred.upper;
  }
  if (cfg_.terminated) path.resize(steps - m);
  out.bits = std::move(path);
  return out;
}

DecodeOutcome decode_block(std::span<const std::uint8_t> received, const Trellis& trellis,
                           const DecoderConfig& cfg, RandomStream& tie_rng) {
  ViterbiDecoder dec(trellis, cfg);
  return dec.decode(received, tie_rng);
}

std::uint64_t recompute_path_metric(std::span<const std::uint8_t> message,
                                    std::span<const std::uint8_t> received,
                                    const Trellis& trellis, int q) {
  validate_q_levels(q);
  const auto n = static_cast<std::size_t>(trellis.outputs);
  const auto m = static_cast<std::size_t>(trellis.memory);
  std::size_t steps = 0;
  if (received.size() == n * message.size()) {
    steps = message.size();
  } else if (received.size() == n * (message.size() + m)) {
    steps = message.size() + m;
  } else {
    throw std::invalid_argument("recompute_path_metric: received length does not match message");
  }
  std::uint64_t total = 0;
  std::uint32_t state = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    const std::uint32_t bit = t < message.size() ? (message[t] & 1U) : 0U;
    total += branch_metric(trellis.output[state][bit], received.subspan(t * n, n), q);
    state = trellis.next_state[state][bit];
  }
  return total;
}

}  // namespace feclab
