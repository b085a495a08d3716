#pragma once

#include <iosfwd>
#include <vector>

#include "feclab/codec.hpp"
#include "feclab/link.hpp"
#include "feclab/viterbi.hpp"

namespace feclab {

// One decoder regression record. Text form, records separated by blank
// lines, '#' starts a comment line:
//
//   code rate=1/2;memory=2;polys=5,7
//   q 2
//   policy zero
//   terminated 1
//   received 1 1 0 1 ...
//   bits 1 0 ...
//   metric 3
//
// `terminated` is optional (default 1). Random policy is rejected because a
// record carries no random source.
struct GoldenVector {
  GeneratorSet code{2, {05, 07}};
  int q_levels = 2;
  TieBreakPolicy policy = TieBreakPolicy::ZeroOriented;
  bool terminated = true;
  Levels received;
  Bits bits;
  std::uint64_t metric = 0;

  friend bool operator==(const GoldenVector&, const GoldenVector&) = default;
};

std::vector<GoldenVector> read_golden_vectors(std::istream& in);
void write_golden_vectors(std::ostream& out, const std::vector<GoldenVector>& vectors);

}  // namespace feclab
