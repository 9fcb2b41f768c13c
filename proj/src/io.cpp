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


#include "mhdt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mhdt/error.hpp"

namespace mhdt {
namespace {

std::size_t parse_header_number(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError("header: expected a decimal number, got '" + std::string(token) + "'");
  }
  return value;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

InstanceSet parse_instance_set(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t end = text.find('\n');
    const std::string_view line = strip_cr(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.front() == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw FormatError("empty input: missing the 'n m' header");

  const std::string_view header = lines.front().second;
  const std::size_t space = header.find(' ');
  if (space == std::string_view::npos) throw FormatError("header must be 'n m'");
  const std::size_t n = parse_header_number(header.substr(0, space));
  const std::size_t m = parse_header_number(header.substr(space + 1));
  if (n == 0) throw FormatError("header: n must be at least 1");
  if (m == 0) throw FormatError("header: m must be at least 1");
  if (lines.size() - 1 != n) {
    throw FormatError("header promises " + std::to_string(n) + " rows, found " +
                      std::to_string(lines.size() - 1));
  }

  std::vector<BitVector> rows;
  rows.reserve(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [no, line] = lines[i];
    if (line.size() != m) {
      throw FormatError("line " + std::to_string(no) + ": expected " + std::to_string(m) +
                        " characters, found " + std::to_string(line.size()));
    }
    if (line.find_first_not_of("01") != std::string_view::npos) {
      throw FormatError("line " + std::to_string(no) + ": only '0' and '1' are allowed");
    }
    rows.push_back(BitVector::from_string(line));
  }
  return InstanceSet(std::move(rows));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_instance_set(const InstanceSet& a) {
  std::string out = std::to_string(a.size()) + " " + std::to_string(a.width()) + "\n";
  for (const BitVector& row : a.rows()) out += row.to_string() + "\n";
  return out;
}

namespace {

std::size_t emit_tree(const DecisionTree& t, std::size_t& next_id, std::ostringstream& out) {
  const std::size_t id = next_id++;
  if (t.is_leaf()) {
    out << "  n" << id << " [shape=box, label=\"" << t.label().to_string() << "\"];\n";
    return id;
  }
  out << "  n" << id << " [label=\"x" << t.index() + 1 << "\"];\n";
  for (bool bit : {false, true}) {
    const std::size_t child = emit_tree(t.child(bit), next_id, out);
    out << "  n" << id << " -> n" << child << " [label=\"" << (bit ? 1 : 0) << "\"];\n";
  }
  return id;
}

}  // namespace

std::string tree_to_dot(const DecisionTree& t) {
  std::ostringstream out;
  out << "digraph tree {\n";
  std::size_t next_id = 0;
  emit_tree(t, next_id, out);
  out << "}\n";
  return out.str();
}

std::string hasse_to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=TB;\n";
  for (std::size_t g = h.size(); g-- > 0;) {
    out << "  g" << g << " [label=\"" << h.label(g) << "\"];\n";
  }
  for (std::size_t g = h.size(); g-- > 0;) {
    for (std::size_t d : h.descendants(g)) out << "  g" << g << " -> g" << d << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json transcript_to_json(const QueryTranscript& t) {
  nlohmann::ordered_json queries = nlohmann::ordered_json::array();
  for (const Query& q : t.queries) {
    queries.push_back({{"index", q.index + 1}, {"answer", q.answer ? 1 : 0}});
  }
  nlohmann::ordered_json out;
  out["learner"] = t.learner;
  out["oracle"] = t.oracle;
  out["queries"] = std::move(queries);
  out["result"] = t.result ? t.result->to_string() : std::string("unresolved");
  out["count"] = t.count();
  return out;
}

}  // namespace mhdt
