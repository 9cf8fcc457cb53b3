// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xorsat {

/// Fixed-length bit vector packed into 64-bit words. Bits beyond size() are
/// kept zero so word-wise comparisons and popcounts stay exact.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }

  std::size_t popcount() const;
  bool any() const;

  /// Parity of popcount(*this & other).
  bool dot(const BitVec& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Bits as '0'/'1' characters, index 0 first.
  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitVec& a, const BitVec& b);

}  // namespace xorsat
