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


#include "mhdt/instance_set.hpp"

#include <string>
#include <unordered_map>

#include "mhdt/error.hpp"

namespace mhdt {

InstanceSet::InstanceSet(std::vector<BitVector> rows) : width_(0), rows_(std::move(rows)) {
  if (rows_.empty()) throw FormatError("instance set must contain at least one row");
  width_ = rows_.front().width();
  std::unordered_map<BitVector, std::size_t, BitVectorHash> seen;
  seen.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].width() != width_) {
      throw WidthMismatch("row " + std::to_string(i + 1) + " has width " +
                          std::to_string(rows_[i].width()) + ", expected " + std::to_string(width_));
    }
    auto [it, inserted] = seen.emplace(rows_[i], i);
    if (!inserted) {
      throw DuplicateRow("row " + std::to_string(i + 1) + " duplicates row " +
                         std::to_string(it->second + 1) + " (" + rows_[i].to_string() + ")");
    }
  }
  columns_.assign(width_, BitVector(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const BitVector& r = rows_[i];
    for (std::size_t j = r.find_first(); j < width_; j = r.find_next(j + 1)) columns_[j].set(i);
  }
}

InstanceSet InstanceSet::from_strings(std::span<const std::string_view> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (std::string_view r : rows) parsed.push_back(BitVector::from_string(r));
  return InstanceSet(std::move(parsed));
}

InstanceSet InstanceSet::from_strings(std::initializer_list<std::string_view> rows) {
  return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

std::optional<std::size_t> InstanceSet::index_of(const BitVector& h) const {
  if (h.width() != width_) return std::nullopt;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == h) return i;
  }
  return std::nullopt;
}

std::optional<InstanceSet> InstanceSet::select(const BitVector& mask) const {
  std::vector<BitVector> picked;
  for (std::size_t i = mask.find_first(); i < mask.width(); i = mask.find_next(i + 1)) {
    picked.push_back(rows_[i]);
  }
  if (picked.empty()) return std::nullopt;
  return InstanceSet(std::move(picked));
}

InstanceSet xor_shift(const InstanceSet& a, const BitVector& h) {
  if (h.width() != a.width()) {
    throw WidthMismatch("shift vector has width " + std::to_string(h.width()) + ", instance set has " +
                        std::to_string(a.width()));
  }
  std::vector<BitVector> rows;
  rows.reserve(a.size());
  for (const BitVector& r : a.rows()) rows.push_back(r ^ h);
  return InstanceSet(std::move(rows));
}

std::optional<InstanceSet> restrict(const InstanceSet& a, std::size_t j, bool value) {
  if (j >= a.width()) {
    throw IndexError("column " + std::to_string(j + 1) + " out of range [1, " +
                     std::to_string(a.width()) + "]");
  }
  BitVector mask = a.column(j);
  if (!value) mask = ~mask;
  return a.select(mask);
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace mhdt
