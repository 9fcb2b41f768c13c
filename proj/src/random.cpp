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


#include "mhdt/random.hpp"

#include <limits>
#include <unordered_set>
#include <vector>

#include "mhdt/error.hpp"

namespace mhdt {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

BitVector random_bit_vector(Rng& rng, std::size_t width) {
  BitVector v(width);
  for (std::size_t i = 0; i < width; ++i) {
    if (rng.coin()) v.set(i);
  }
  return v;
}

InstanceSet random_instance(Rng& rng, std::size_t n, std::size_t m) {
  if (m < 63 && n > (std::size_t{1} << m)) {
    throw FormatError("cannot draw " + std::to_string(n) + " distinct rows of width " +
                      std::to_string(m));
  }
  std::vector<BitVector> rows;
  std::unordered_set<BitVector, BitVectorHash> seen;
  while (rows.size() < n) {
    BitVector r = random_bit_vector(rng, m);
    if (seen.insert(r).second) rows.push_back(std::move(r));
  }
  return InstanceSet(std::move(rows));
}

}  // namespace mhdt
