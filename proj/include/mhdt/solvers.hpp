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

#include "mhdt/bit_vector.hpp"
#include "mhdt/decision_tree.hpp"
#include "mhdt/instance_set.hpp"
#include "mhdt/measures.hpp"

namespace mhdt {

struct OptResult {
  std::size_t depth;
  DecisionTree tree;
};

/// Minimum-depth decision tree via OPT(B) = min_j max(OPT(B_j0), OPT(B_j1)),
/// memoized on the set of surviving rows. Columns with an empty side are
/// skipped; ties go to the lowest column. Throws ExactLimitExceeded when
/// n exceeds limits.opt_exact_n_limit (hard cap 64).
OptResult opt_exact(const InstanceSet& a, const Limits& limits = {});

/// Most balanced split at every node: the column maximizing
/// min(|B_j0|, |B_j1|), lowest index on ties.
DecisionTree greedy_tree(const InstanceSet& a);

/// The column greedy_tree queries at the node whose live rows are `live`
/// (a mask over the rows of `a` with at least two bits set).
std::size_t greedy_column(const InstanceSet& a, const BitVector& live);

}  // namespace mhdt
