// Copyright 2026 The greedy-cover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDY_COVER_BIT_ROW_H_
#define GREEDY_COVER_BIT_ROW_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace greedy_cover {

// Fixed-length bit-vector packed into 64-bit words. Bits past size() in the
// last word are always zero.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~uint64_t{0} : 0) {
    ClearTail();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & uint64_t{1};
  }
  void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (const uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool none() const {
    for (const uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool all() const { return count() == size_; }

  // |*this & other|
  std::size_t CountAnd(const BitRow& other) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      total += std::popcount(words_[w] & other.words_[w]);
    }
    return total;
  }
  BitRow& operator|=(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  // Clears every bit that is set in `other`.
  BitRow& AndNot(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= ~other.words_[w];
    }
    return *this;
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  void ClearTail() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace greedy_cover

#endif  // GREEDY_COVER_BIT_ROW_H_
