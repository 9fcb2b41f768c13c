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
#include <memory>
#include <string>
#include <variant>

#include "mhdt/bit_vector.hpp"
#include "mhdt/instance_set.hpp"

namespace mhdt {

/// Binary decision tree: internal nodes query one coordinate (0-based index),
/// the 0-edge and 1-edge lead to the children, leaves carry an assignment.
/// Immutable; subtrees are shared.
class DecisionTree {
 public:
  static DecisionTree leaf(BitVector label);
  static DecisionTree node(std::size_t index, DecisionTree child0, DecisionTree child1);

  bool is_leaf() const { return std::holds_alternative<BitVector>(content_); }
  /// Precondition: is_leaf().
  const BitVector& label() const { return std::get<BitVector>(content_); }
  /// Precondition: !is_leaf().
  std::size_t index() const { return std::get<Node>(content_).index; }
  const DecisionTree& child(bool bit) const {
    const Node& n = std::get<Node>(content_);
    return bit ? *n.child1 : *n.child0;
  }

  std::size_t depth() const { return depth_; }
  std::size_t internal_nodes() const;
  std::size_t leaves() const;

 private:
  struct Node {
    std::size_t index;
    std::shared_ptr<const DecisionTree> child0;
    std::shared_ptr<const DecisionTree> child1;
  };

  explicit DecisionTree(BitVector label) : content_(std::move(label)), depth_(0) {}
  DecisionTree(Node node, std::size_t depth) : content_(std::move(node)), depth_(depth) {}

  std::variant<BitVector, Node> content_;
  std::size_t depth_;
};

inline std::size_t tree_depth(const DecisionTree& t) { return t.depth(); }

/// True iff `t` is a decision tree for `a`: every row of `a` reaches the leaf
/// that carries it and labels no other leaf, and every leaf whose path is
/// satisfied by some row is satisfied by exactly its own label.
bool validate_tree(const DecisionTree& t, const InstanceSet& a);

/// Tree for A+h built from a tree for A: swap the edges at nodes querying a
/// coordinate where h is 1, and xor every leaf label with h.
DecisionTree shift_tree(const DecisionTree& t, const BitVector& h);

/// Follows `a`'s own bits from the root; returns the leaf label reached.
const BitVector& evaluate(const DecisionTree& t, const BitVector& a);

}  // namespace mhdt
