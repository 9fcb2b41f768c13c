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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mhdt/decision_tree.hpp"
#include "mhdt/disjunctions.hpp"
#include "mhdt/game.hpp"
#include "mhdt/instance_set.hpp"

namespace mhdt {

/// Parses the matrix format: a "n m" header line, then n lines of exactly m
/// characters from {0,1}. Lines starting with '#' are skipped. Throws
/// FormatError (bad header, row length, character, n = 0, row count) or
/// DuplicateRow.
InstanceSet parse_instance_set(std::string_view text);

/// Reads a whole file; FormatError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Inverse of parse_instance_set, newline-terminated.
std::string format_instance_set(const InstanceSet& a);

/// Internal nodes "x<j>" (1-based), edges labeled 0/1, leaves show the bit
/// string. Nodes are numbered in preorder.
std::string tree_to_dot(const DecisionTree& t);

/// Elements labeled by their generator sets, edges from each element to its
/// immediate descendants.
std::string hasse_to_dot(const HasseDiagram& h);

/// {learner, oracle, queries:[{index, answer}], result, count}; indices are
/// 1-based and `result` is the bit string or "unresolved".
nlohmann::ordered_json transcript_to_json(const QueryTranscript& t);

}  // namespace mhdt
