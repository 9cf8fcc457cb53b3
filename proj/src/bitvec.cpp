// Copyright 2026 The xorsat Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xorsat/bitvec.hpp"

#include <bit>
#include <cassert>

namespace xorsat {

BitVec& BitVec::operator^=(const BitVec& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVec::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool BitVec::dot(const BitVec& other) const {
  assert(size_ == other.size_);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
  return (a ^ b).popcount();
}

}  // namespace xorsat
