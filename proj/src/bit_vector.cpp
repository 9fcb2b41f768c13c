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


#include "mhdt/bit_vector.hpp"

#include <algorithm>

#include "mhdt/error.hpp"

namespace mhdt {

namespace {
std::size_t words_for(std::size_t width) {
  return (width + BitVector::kWordBits - 1) / BitVector::kWordBits;
}
}  // namespace

BitVector::BitVector(std::size_t width) : width_(width), words_(words_for(width), 0) {
  if (width == 0) {
    throw FormatError("bit vector width must be at least 1");
  }
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    switch (bits[i]) {
      case '0':
        break;
      case '1':
        v.set(i);
        break;
      default:
        throw FormatError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t width) {
  BitVector v(width);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.clear_tail();
  return v;
}

BitVector BitVector::from_word(std::size_t width, Word value) {
  BitVector v(width);
  v.words_[0] = value;
  v.clear_tail();
  return v;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= width_) return width_;
  std::size_t k = from / kWordBits;
  Word w = words_[k] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == words_.size()) return width_;
    w = words_[k];
  }
}

std::vector<std::size_t> BitVector::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_first(); i < width_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

BitVector& BitVector::and_not(const BitVector& other) {
  check_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (Word& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const BitVector::Word diff = a.words_[k] ^ b.words_[k];
    if (diff != 0) {
      // Lowest differing bit decides: '0' < '1' in the string order.
      const BitVector::Word low = diff & (~diff + 1);
      return (a.words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::string BitVector::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

void BitVector::check_width(const BitVector& other) const {
  if (other.width_ != width_) {
    throw WidthMismatch("bit vector widths differ: " + std::to_string(width_) + " vs " +
                        std::to_string(other.width_));
  }
}

void BitVector::clear_tail() {
  const std::size_t rem = width_ % kWordBits;
  if (rem != 0) words_.back() &= (Word{1} << rem) - 1;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(v.width());
  for (BitVector::Word w : v.words()) {
    h ^= std::hash<BitVector::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace mhdt
