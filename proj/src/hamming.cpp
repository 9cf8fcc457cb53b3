// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/hamming.hpp"

#include <algorithm>
#include <numeric>

namespace xorsat {

std::uint64_t hamming_ball_size(std::uint64_t n, std::uint32_t radius) {
  radius = static_cast<std::uint32_t>(std::min<std::uint64_t>(radius, n));
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, k)
  for (std::uint32_t k = 0; k <= radius; ++k) {
    total += binom;
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

HammingBall::HammingBall(BitVec center, std::uint32_t radius)
    : center_(std::move(center)),
      radius_(static_cast<std::uint32_t>(std::min<std::size_t>(radius, center_.size()))) {}

std::uint64_t HammingBall::size() const { return hamming_ball_size(center_.size(), radius_); }

bool HammingBall::next(YCandidate& out) {
  if (done_) return false;
  const auto n = static_cast<std::uint32_t>(center_.size());
  if (!started_) {
    started_ = true;
  } else {
    // Advance to the next k-combination of [0, n), or to the next distance.
    const auto k = static_cast<std::uint32_t>(positions_.size());
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && positions_[static_cast<std::size_t>(i)] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i >= 0) {
      ++positions_[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) positions_[j] = positions_[j - 1] + 1;
    } else {
      if (distance_ == radius_) {
        done_ = true;
        return false;
      }
      ++distance_;
      positions_.resize(distance_);
      std::iota(positions_.begin(), positions_.end(), 0U);
    }
  }
  out.bits = center_;
  for (auto p : positions_) out.bits.flip(p);
  out.distance = distance_;
  return true;
}

std::vector<YCandidate> hamming_ball(const BitVec& center, std::uint32_t radius) {
  std::vector<YCandidate> out;
  HammingBall ball(center, radius);
  YCandidate c;
  while (ball.next(c)) out.push_back(c);
  return out;
}

}  // namespace xorsat
