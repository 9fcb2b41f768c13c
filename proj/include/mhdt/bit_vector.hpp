// Copyright 2026 The mhdt Authors.
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


#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mhdt {

/// A fixed-width vector of bits, packed into 64-bit words.
///
/// Used both for assignments in {0,1}^m and for row-membership masks over an
/// instance set. Bits beyond `width()` in the last word are always zero, so
/// word-level comparisons and popcounts need no masking.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// All-zero vector of the given width. Width must be at least 1.
  explicit BitVector(std::size_t width);

  /// Parses a string of '0'/'1' characters; throws FormatError otherwise.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t width);
  /// Width-`width` vector holding the low bits of `value` (bit i = bit i).
  static BitVector from_word(std::size_t width, Word value);

  std::size_t width() const { return width_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> mutable_words() { return words_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const Word bit = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  /// True iff every set bit of *this is also set in `other` (bitwise <=).
  bool is_subset_of(const BitVector& other) const;
  /// Index of the lowest set bit at or after `from`, or width() if none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }
  /// Indices of the set bits, ascending.
  std::vector<std::size_t> set_bits() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// *this &= ~other
  BitVector& and_not(const BitVector& other);
  BitVector operator~() const;

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  /// Vectors of different width never compare equal.
  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  /// Orders by width, then lexicographically by bit string (bit 0 first).
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

  /// Bit 0 first, e.g. "0110".
  std::string to_string() const;

  /// The low word; only meaningful when width() <= 64.
  Word low_word() const { return words_[0]; }

 private:
  void check_width(const BitVector& other) const;
  void clear_tail();

  std::size_t width_;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

}  // namespace mhdt
