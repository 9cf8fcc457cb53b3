// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "xorsat/bitvec.hpp"

namespace xorsat {

struct YCandidate {
  BitVec bits;
  std::uint32_t distance = 0;  // popcount(bits ^ center)
};

/// Enumerates every vector within `radius` of `center` exactly once: by
/// increasing distance, and within a distance by lexicographically
/// increasing sets of flipped positions. The center comes first. A radius
/// above the vector length is clamped.
class HammingBall {
 public:
  HammingBall(BitVec center, std::uint32_t radius);

  /// Writes the next candidate; false once the ball is exhausted.
  bool next(YCandidate& out);

  std::uint32_t radius() const { return radius_; }
  /// Total number of candidates, sum_{k <= radius} C(n, k).
  std::uint64_t size() const;

 private:
  BitVec center_;
  std::uint32_t radius_;
  std::uint32_t distance_ = 0;
  std::vector<std::uint32_t> positions_;  // current combination
  bool started_ = false;
  bool done_ = false;
};

std::uint64_t hamming_ball_size(std::uint64_t n, std::uint32_t radius);

std::vector<YCandidate> hamming_ball(const BitVec& center, std::uint32_t radius);

}  // namespace xorsat
