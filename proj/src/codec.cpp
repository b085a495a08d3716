#include "feclab/codec.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace feclab {

namespace {

std::string to_octal(std::uint32_t v) {
  std::array<char, 16> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, 8);
  return std::string(buf.data(), end);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.emplace_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("code spec: malformed ") + what + " '" +
                                std::string(s) + "'");
  }
  return v;
}

}  // namespace

GeneratorSet::GeneratorSet(int memory, std::vector<std::uint32_t> polynomials)
    : memory_(memory), polys_(std::move(polynomials)) {
  if (memory_ < 1 || memory_ > kMaxMemory) {
    throw std::invalid_argument("generator set: memory must be in [1, " +
                                std::to_string(kMaxMemory) + "]");
  }
  if (polys_.size() < 2 || polys_.size() > kMaxOutputs) {
    throw std::invalid_argument("generator set: need between 2 and " +
                                std::to_string(kMaxOutputs) + " polynomials");
  }
  const std::uint32_t limit = 1U << (memory_ + 1);
  bool oldest_used = false;
  for (auto p : polys_) {
    if (p == 0) throw std::invalid_argument("generator set: zero polynomial");
    if (p >= limit) {
      throw std::invalid_argument("generator set: polynomial " + to_octal(p) +
                                  " too wide for memory " + std::to_string(memory_));
    }
    oldest_used = oldest_used || ((p >> memory_) & 1U);
  }
  if (!oldest_used) {
    throw std::invalid_argument("generator set: no polynomial taps u[t-" +
                                std::to_string(memory_) + "]");
  }
}

std::string GeneratorSet::to_spec() const {
  std::ostringstream os;
  os << "rate=1/" << polys_.size() << ";memory=" << memory_ << ";polys=";
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (i) os << ',';
    os << to_octal(polys_[i]);
  }
  return os.str();
}

GeneratorSet parse_generator_set(std::span<const std::string> octal, int memory) {
  if (octal.size() < 2) {
    throw std::invalid_argument("generator set: need at least 2 polynomials");
  }
  std::vector<std::uint32_t> masks;
  masks.reserve(octal.size());
  for (const auto& s : octal) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 8);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("generator set: malformed octal '" + s + "'");
    }
    masks.push_back(v);
  }
  return GeneratorSet(memory, std::move(masks));
}

GeneratorSet parse_code_spec(std::string_view spec) {
  std::string rate, memory, polys;
  for (const auto& field : split(spec, ';')) {
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("code spec: expected key=value, got '" + field + "'");
    }
    auto key = std::string(trim(std::string_view(field).substr(0, eq)));
    auto value = std::string(trim(std::string_view(field).substr(eq + 1)));
    if (key == "rate") rate = value;
    else if (key == "memory") memory = value;
    else if (key == "polys") polys = value;
    else throw std::invalid_argument("code spec: unknown key '" + key + "'");
  }
  if (rate.empty() || memory.empty() || polys.empty()) {
    throw std::invalid_argument("code spec: rate, memory and polys are all required");
  }
  auto octal = split(polys, ',');
  auto gs = parse_generator_set(octal, parse_int(memory, "memory"));

  auto slash = rate.find('/');
  if (slash == std::string::npos || trim(std::string_view(rate).substr(0, slash)) != "1") {
    throw std::invalid_argument("code spec: rate must be 1/n, got '" + rate + "'");
  }
  int n = parse_int(trim(std::string_view(rate).substr(slash + 1)), "rate");
  if (n != gs.outputs()) {
    throw std::invalid_argument("code spec: rate 1/" + std::to_string(n) + " does not match " +
                                std::to_string(gs.outputs()) + " polynomials");
  }
  return gs;
}

Trellis build_trellis(const GeneratorSet& gs) {
  Trellis t;
  t.memory = gs.memory();
  t.outputs = gs.outputs();
  t.num_states = 1U << t.memory;
  t.next_state.resize(t.num_states);
  t.output.resize(t.num_states);
  t.predecessors.resize(t.num_states);

  const std::uint32_t mask = t.num_states - 1;
  const std::uint32_t oldest = t.num_states >> 1;
  for (std::uint32_t s = 0; s < t.num_states; ++s) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      // s already has u[t-1] in bit 0, so shifting puts u[t-i] at bit i.
      std::uint32_t reg = (s << 1) | b;
      std::uint32_t sym = 0;
      for (int j = 0; j < t.outputs; ++j) {
        sym |= static_cast<std::uint32_t>(std::popcount(reg & gs.polynomials()[j]) & 1) << j;
      }
      t.next_state[s][b] = reg & mask;
      t.output[s][b] = sym;
    }
    t.predecessors[s] = {s >> 1, (s >> 1) | oldest};
  }
  return t;
}

Bits encode(std::span<const std::uint8_t> message, const GeneratorSet& gs, bool terminated) {
  if (message.empty()) throw std::invalid_argument("encode: empty message");
  const int n = gs.outputs();
  const std::size_t steps = message.size() + (terminated ? gs.memory() : 0);
  Bits out;
  out.reserve(steps * n);
  std::uint32_t reg = 0;
  const std::uint32_t width_mask = (1U << (gs.memory() + 1)) - 1;
  for (std::size_t t = 0; t < steps; ++t) {
    std::uint32_t u = t < message.size() ? (message[t] & 1U) : 0U;
    reg = ((reg << 1) | u) & width_mask;
    for (auto p : gs.polynomials()) {
      out.push_back(static_cast<std::uint8_t>(std::popcount(reg & p) & 1));
    }
  }
  return out;
}

}  // namespace feclab
