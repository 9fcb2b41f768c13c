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


#include "mhdt/decision_tree.hpp"

#include <algorithm>
#include <unordered_map>

namespace mhdt {

DecisionTree DecisionTree::leaf(BitVector label) { return DecisionTree(std::move(label)); }

DecisionTree DecisionTree::node(std::size_t index, DecisionTree child0, DecisionTree child1) {
  const std::size_t depth = 1 + std::max(child0.depth(), child1.depth());
  return DecisionTree(Node{index, std::make_shared<const DecisionTree>(std::move(child0)),
                           std::make_shared<const DecisionTree>(std::move(child1))},
                      depth);
}

std::size_t DecisionTree::internal_nodes() const {
  if (is_leaf()) return 0;
  return 1 + child(false).internal_nodes() + child(true).internal_nodes();
}

std::size_t DecisionTree::leaves() const {
  if (is_leaf()) return 1;
  return child(false).leaves() + child(true).leaves();
}

namespace {

// `live` holds the rows consistent with the path so far.
bool validate_paths(const DecisionTree& t, const InstanceSet& a, const BitVector& live,
                    std::unordered_map<BitVector, int, BitVectorHash>& label_counts) {
  if (t.is_leaf()) {
    const BitVector& label = t.label();
    if (label.width() != a.width()) return false;
    ++label_counts[label];
    const std::size_t consistent = live.count();
    if (consistent == 0) return true;
    return consistent == 1 && a.row(live.find_first()) == label;
  }
  if (t.index() >= a.width()) return false;
  const BitVector& col = a.column(t.index());
  BitVector zero_side = live;
  zero_side.and_not(col);
  return validate_paths(t.child(false), a, zero_side, label_counts) &&
         validate_paths(t.child(true), a, live & col, label_counts);
}

}  // namespace

bool validate_tree(const DecisionTree& t, const InstanceSet& a) {
  std::unordered_map<BitVector, int, BitVectorHash> label_counts;
  if (!validate_paths(t, a, a.all_rows(), label_counts)) return false;
  // Every path with a consistent row ends at that row, so each row reaches
  // its own leaf; it remains to rule out a second leaf with the same label.
  for (const BitVector& r : a.rows()) {
    auto it = label_counts.find(r);
    if (it == label_counts.end() || it->second != 1) return false;
  }
  return true;
}

DecisionTree shift_tree(const DecisionTree& t, const BitVector& h) {
  if (t.is_leaf()) return DecisionTree::leaf(t.label() ^ h);
  DecisionTree c0 = shift_tree(t.child(false), h);
  DecisionTree c1 = shift_tree(t.child(true), h);
  if (h.test(t.index())) std::swap(c0, c1);
  return DecisionTree::node(t.index(), std::move(c0), std::move(c1));
}

const BitVector& evaluate(const DecisionTree& t, const BitVector& a) {
  const DecisionTree* cur = &t;
  while (!cur->is_leaf()) cur = &cur->child(a.test(cur->index()));
  return cur->label();
}

}  // namespace mhdt
