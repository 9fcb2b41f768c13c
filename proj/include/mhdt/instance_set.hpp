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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mhdt/bit_vector.hpp"

namespace mhdt {

/// A nonempty, duplicate-free, ordered set of assignments of a common width.
///
/// Rows keep their construction order. Column masks (one bit per row) are
/// precomputed so that split sizes are a popcount away. Immutable.
class InstanceSet {
 public:
  /// Throws FormatError when `rows` is empty, WidthMismatch when widths
  /// differ and DuplicateRow when a row repeats.
  explicit InstanceSet(std::vector<BitVector> rows);

  /// Convenience for tests and bindings: each string is one row.
  static InstanceSet from_strings(std::span<const std::string_view> rows);
  static InstanceSet from_strings(std::initializer_list<std::string_view> rows);

  std::size_t size() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<BitVector>& rows() const { return rows_; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  /// Mask over rows: bit i is row(i)[j].
  const BitVector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<BitVector>& columns() const { return columns_; }

  std::optional<std::size_t> index_of(const BitVector& h) const;
  bool contains(const BitVector& h) const { return index_of(h).has_value(); }

  /// The rows selected by `mask` (width size()), in order. nullopt when the
  /// mask is empty.
  std::optional<InstanceSet> select(const BitVector& mask) const;
  /// Mask with every row selected.
  BitVector all_rows() const { return BitVector::ones(rows_.size()); }

  friend bool operator==(const InstanceSet& a, const InstanceSet& b) { return a.rows_ == b.rows_; }

 private:
  std::size_t width_;
  std::vector<BitVector> rows_;
  std::vector<BitVector> columns_;
};

/// {a xor h : a in A}, order preserved.
InstanceSet xor_shift(const InstanceSet& a, const BitVector& h);

/// Rows whose bit `j` (0-based) equals `value`; nullopt when none match.
/// Throws IndexError for j >= width.
std::optional<InstanceSet> restrict(const InstanceSet& a, std::size_t j, bool value);

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

}  // namespace mhdt
